// sortables.hpp --- sorting by cyclic words and Coxeter-sortable elements
//
// A Coxeter word c uses each generator once; sorting by the semi-infinite
// word ccc... needs only the prefix of length l(u)*n, because every full
// block strips at least one letter from a nonidentity residual. An element
// is c-sortable when the letter supports of the blocks of its sorted word
// form a descending chain. Counts are checked against the Coxeter-Catalan
// product over the degrees of the group.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "coxsort/lattice.hpp"
#include "coxsort/sorting_order.hpp"
#include "coxsort/words.hpp"

namespace coxsort {

struct CoxeterWord {
  std::vector<int> letters;  // a permutation of the generators

  static CoxeterWord make(const CoxeterSystem& sys, std::vector<int> letters) {
    if (static_cast<int>(letters.size()) != sys.rank())
      throw std::invalid_argument("Coxeter word must use every generator");
    std::vector<char> seen(sys.rank(), 0);
    for (int s : letters) {
      if (s < 0 || s >= sys.rank() || seen[s])
        throw std::invalid_argument("Coxeter word must use every generator once");
      seen[s] = 1;
    }
    return CoxeterWord{std::move(letters)};
  }
};

struct BlockDecomposition {
  std::vector<std::vector<int>> blocks;  // positions, split every n letters
  std::vector<std::uint32_t> supports;   // letter set of each block
};

struct CSortedWord {
  SortingWord truncation;  // prefix of ccc... of length l(u)*n
  Subword word;
};

inline BlockDecomposition block_decomposition(const CSortedWord& cs) {
  int n = cs.truncation.sys->rank();
  BlockDecomposition bd;
  for (int i : cs.word.indices) {
    int block = i / n;
    while (static_cast<int>(bd.blocks.size()) <= block) {
      bd.blocks.emplace_back();
      bd.supports.push_back(0);
    }
    bd.blocks[block].push_back(i);
    bd.supports[block] |= std::uint32_t{1} << cs.truncation.letters[i];
  }
  return bd;
}

inline CSortedWord c_sort(const std::shared_ptr<const CoxeterSystem>& sys,
                          const CoxeterWord& c, const GroupElement& u) {
  std::vector<int> letters;
  letters.reserve(static_cast<std::size_t>(u.length()) * c.letters.size());
  for (int rep = 0; rep < u.length(); ++rep)
    letters.insert(letters.end(), c.letters.begin(), c.letters.end());
  SortingWord trunc(sys, std::move(letters));
  // sort_element throws if the residual misses the identity, which would
  // contradict the block argument above.
  Subword sw = sort_element(trunc, u);
  return CSortedWord{std::move(trunc), std::move(sw)};
}

inline bool is_c_sortable(const std::shared_ptr<const CoxeterSystem>& sys,
                          const CoxeterWord& c, const GroupElement& u) {
  BlockDecomposition bd = block_decomposition(c_sort(sys, c, u));
  for (std::size_t i = 1; i < bd.supports.size(); ++i)
    if ((bd.supports[i] & ~bd.supports[i - 1]) != 0) return false;
  return true;
}

// A reduced word for the longest element, by greedy ascent: repeatedly
// append the smallest generator that lengthens. Diverges on infinite
// groups, so the ascent is capped.
inline std::vector<int> longest_element_word(const CoxeterSystem& sys,
                                             int element_cap = 5000) {
  GroupElement w = sys.identity();
  std::vector<int> word;
  for (;;) {
    int pick = -1;
    for (int s = 0; s < sys.rank() && pick < 0; ++s)
      if (!sys.is_right_descent(w, s)) pick = s;
    if (pick < 0) return word;
    w = sys.right_mul(w, pick);
    word.push_back(pick);
    if (static_cast<int>(word.size()) >= element_cap)
      throw CapExceededError("group is not finite within the element cap");
  }
}

// All elements of a finite group W, as the sorting order of a reduced word
// for the longest element. Elements come out sorted by (length, index set).
inline std::vector<GroupElement> enumerate_group(
    const std::shared_ptr<const CoxeterSystem>& sys, int element_cap = 5000) {
  SortingWord w0(sys, longest_element_word(*sys, element_cap));
  EnumerateOptions opts;
  opts.ground_cap = 63;
  opts.element_cap = element_cap;
  SetSystem family = enumerate_sorted(w0, opts);
  std::vector<GroupElement> out;
  out.reserve(family.sets.size());
  for (SetMask m : family.sets)
    out.push_back(sys->evaluate_word(Subword::from_mask(m).induced_letters(w0)));
  return out;
}

inline std::vector<GroupElement> enumerate_sortables(
    const std::shared_ptr<const CoxeterSystem>& sys, const CoxeterWord& c,
    int element_cap = 5000,
    const std::vector<GroupElement>* group = nullptr) {
  std::vector<GroupElement> all;
  if (!group) {
    all = enumerate_group(sys, element_cap);
    group = &all;
  }
  std::vector<GroupElement> out;
  for (const GroupElement& u : *group)
    if (is_c_sortable(sys, c, u)) out.push_back(u);
  return out;
}

// --- Coxeter-Catalan numbers -------------------------------------------

struct DegreeData {
  std::vector<int> degrees;
  int coxeter_number = 0;
};

// Standard degree data for the finite types used here.
inline DegreeData degree_data(const std::string& type) {
  auto rank_of = [&](std::size_t prefix) {
    int n = 0;
    for (std::size_t i = prefix; i < type.size(); ++i) {
      if (!isdigit(static_cast<unsigned char>(type[i])))
        throw std::invalid_argument("unknown type: " + type);
      n = n * 10 + (type[i] - '0');
    }
    return n;
  };
  DegreeData d;
  if (type == "H3") {
    d.degrees = {2, 6, 10};
    d.coxeter_number = 10;
    return d;
  }
  if (type == "F4") {
    d.degrees = {2, 6, 8, 12};
    d.coxeter_number = 12;
    return d;
  }
  if (type.rfind("I2:", 0) == 0) {
    int m = rank_of(3);
    if (m < 2) throw std::invalid_argument("unknown type: " + type);
    d.degrees = {2, m};
    d.coxeter_number = m;
    return d;
  }
  if (!type.empty() && type[0] == 'A') {
    int n = rank_of(1);
    if (n < 1) throw std::invalid_argument("unknown type: " + type);
    for (int i = 2; i <= n + 1; ++i) d.degrees.push_back(i);
    d.coxeter_number = n + 1;
    return d;
  }
  if (!type.empty() && type[0] == 'B') {
    int n = rank_of(1);
    if (n < 2) throw std::invalid_argument("unknown type: " + type);
    for (int i = 1; i <= n; ++i) d.degrees.push_back(2 * i);
    d.coxeter_number = 2 * n;
    return d;
  }
  if (!type.empty() && type[0] == 'D') {
    int n = rank_of(1);
    if (n < 4) throw std::invalid_argument("unknown type: " + type);
    for (int i = 1; i <= n - 1; ++i) d.degrees.push_back(2 * i);
    d.degrees.push_back(n);
    d.coxeter_number = 2 * n - 2;
    return d;
  }
  throw std::invalid_argument("unknown type: " + type);
}

// Cat(W) = prod (h + d_i) / d_i, as an exact integer.
inline Int catalan_number(const std::string& type) {
  DegreeData d = degree_data(type);
  Int num = 1, den = 1;
  for (int deg : d.degrees) {
    num *= d.coxeter_number + deg;
    den *= deg;
  }
  if (num % den != 0)
    throw std::logic_error("Catalan product is not an integer");
  return num / den;
}

inline Int group_order(const std::string& type) {
  Int prod = 1;
  for (int deg : degree_data(type).degrees) prod *= deg;
  return prod;
}

// --- the sortable-restriction lattice ------------------------------------

struct SortableLattice {
  CoxeterWord word;
  std::vector<GroupElement> elements;  // ids follow the family order
  SetSystem family;                    // sorted index sets of the sortables
  GradedLattice lattice;
};

// Restriction of the cyclic sorting order to the c-sortable elements. The
// family is an accessible union-closed system (covers of the restriction
// are single-letter extensions), so the lattice is built from it like any
// antimatroid and comes out join-distributive.
inline SortableLattice sortable_lattice(
    const std::shared_ptr<const CoxeterSystem>& sys, const CoxeterWord& c,
    int element_cap = 5000,
    const std::vector<GroupElement>* group = nullptr) {
  std::vector<GroupElement> sortables =
      enumerate_sortables(sys, c, element_cap, group);
  int ground = 0;
  std::vector<SetMask> sets;
  std::vector<std::pair<SetMask, const GroupElement*>> tagged;
  for (const GroupElement& u : sortables) {
    SetMask m = c_sort(sys, c, u).word.mask();
    ground = std::max(ground, u.length() * sys->rank());
    tagged.push_back({m, &u});
    sets.push_back(m);
  }
  if (ground > 63)
    throw CapExceededError("sortable ground set exceeds 63 positions");
  SortableLattice sl{c, {}, SetSystem::make(ground, sets), GradedLattice()};
  sl.lattice = build_lattice_from_family(sl.family);
  if (!is_join_distributive(sl.lattice).all())
    throw std::logic_error("sortable restriction is not join-distributive");
  std::sort(tagged.begin(), tagged.end(),
            [](const auto& a, const auto& b) { return set_order(a.first, b.first); });
  for (auto& [m, g] : tagged) sl.elements.push_back(*g);
  return sl;
}

struct Census {
  std::string type;  // informational; may be empty
  std::vector<CoxeterWord> words;
  std::vector<int> sortable_count;
  std::vector<int> class_of;          // isomorphism class per word
  std::vector<int> representatives;   // word index per class
  std::vector<SortableLattice> lattices;
};

// Builds the sortable lattice of every Coxeter word and partitions the n!
// words by lattice isomorphism type.
inline Census sortable_census(const std::shared_ptr<const CoxeterSystem>& sys,
                              int element_cap = 5000) {
  if (sys->rank() > 4)
    throw CapExceededError("census is limited to rank 4");
  std::vector<GroupElement> group = enumerate_group(sys, element_cap);
  Census census;
  std::vector<int> perm = identity_order(sys->rank());
  do {
    CoxeterWord c = CoxeterWord::make(*sys, perm);
    census.lattices.push_back(sortable_lattice(sys, c, element_cap, &group));
    census.words.push_back(std::move(c));
    census.sortable_count.push_back(census.lattices.back().lattice.size());
  } while (std::next_permutation(perm.begin(), perm.end()));
  census.class_of.assign(census.words.size(), -1);
  for (std::size_t i = 0; i < census.words.size(); ++i) {
    if (census.class_of[i] >= 0) continue;
    int cls = static_cast<int>(census.representatives.size());
    census.representatives.push_back(static_cast<int>(i));
    census.class_of[i] = cls;
    for (std::size_t j = i + 1; j < census.words.size(); ++j)
      if (census.class_of[j] < 0 &&
          poset_isomorphic(census.lattices[i].lattice.poset(),
                           census.lattices[j].lattice.poset()))
        census.class_of[j] = cls;
  }
  return census;
}

// Observations the theory only sketches: whether the restriction agrees
// with Bruhat order on sortables and is supersolvable. Reported, never
// asserted.
struct SortableObservations {
  bool bruhat_coincides = false;
  bool supersolvable = false;
};

inline SortableObservations observe_sortable_restriction(
    const std::shared_ptr<const CoxeterSystem>& sys, const SortableLattice& sl) {
  SortableObservations obs;
  obs.bruhat_coincides = true;
  for (int i = 0; i < sl.lattice.size(); ++i)
    for (int j = 0; j < sl.lattice.size(); ++j)
      if (sl.lattice.leq(i, j) !=
          sys->bruhat_leq(sl.elements[i], sl.elements[j])) {
        obs.bruhat_coincides = false;
        break;
      }
  obs.supersolvable = is_supersolvable(sl.lattice);
  return obs;
}

}  // namespace coxsort
