// coxsort.hpp --- convenience umbrella header

#pragma once

#include "coxsort/coxeter.hpp"
#include "coxsort/io.hpp"
#include "coxsort/lattice.hpp"
#include "coxsort/numbers.hpp"
#include "coxsort/permutations.hpp"
#include "coxsort/set_system.hpp"
#include "coxsort/sortables.hpp"
#include "coxsort/sorting_order.hpp"
#include "coxsort/words.hpp"
