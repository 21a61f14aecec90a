// words.hpp --- sorting words, subwords as index sets, and the sorting
// algorithm
//
// A subword of the sorting word is identified with its index set: the word
// may repeat letters, so the letter sequence alone does not determine the
// subword. The sorting algorithm scans the word once, recording the
// positions whose letters are left descents of the shrinking residual.

#pragma once

#include <optional>
#include <span>
#include <vector>

#include "coxsort/coxeter.hpp"
#include "coxsort/errors.hpp"
#include "coxsort/set_system.hpp"

namespace coxsort {

struct SortingWord {
  std::shared_ptr<const CoxeterSystem> sys;
  std::vector<int> letters;  // generator indices, 0-based

  int size() const { return static_cast<int>(letters.size()); }

  SortingWord(std::shared_ptr<const CoxeterSystem> system,
              std::vector<int> word)
      : sys(std::move(system)), letters(std::move(word)) {
    for (int s : letters)
      if (s < 0 || s >= sys->rank())
        throw std::out_of_range("sorting word letter out of range");
  }
};

// A subword is its index set; positions are 0-based and strictly increasing.
struct Subword {
  std::vector<int> indices;

  int size() const { return static_cast<int>(indices.size()); }

  friend bool operator==(const Subword&, const Subword&) = default;

  std::vector<int> induced_letters(const SortingWord& w) const {
    std::vector<int> out;
    out.reserve(indices.size());
    for (int i : indices) out.push_back(w.letters[i]);
    return out;
  }

  SetMask mask() const {
    SetMask m = 0;
    for (int i : indices) m |= SetMask{1} << i;
    return m;
  }

  static Subword from_mask(SetMask m) {
    Subword sw;
    while (m) {
      sw.indices.push_back(std::countr_zero(m));
      m &= m - 1;
    }
    return sw;
  }
};

inline Subword subword_union(const Subword& a, const Subword& b) {
  Subword out;
  std::set_union(a.indices.begin(), a.indices.end(), b.indices.begin(),
                 b.indices.end(), std::back_inserter(out.indices));
  return out;
}

inline Subword subword_intersection(const Subword& a, const Subword& b) {
  Subword out;
  std::set_intersection(a.indices.begin(), a.indices.end(), b.indices.begin(),
                        b.indices.end(), std::back_inserter(out.indices));
  return out;
}

// Lexicographic order on index sets: A <= B iff A = B or the minimum of the
// symmetric difference lies in A.
inline bool lex_leq(std::span<const int> a, std::span<const int> b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) {
      ++i;
      ++j;
    } else {
      return a[i] < b[j];
    }
  }
  return i < a.size() || j == b.size();
}

inline bool lex_leq(const Subword& a, const Subword& b) {
  return lex_leq(std::span<const int>(a.indices),
                 std::span<const int>(b.indices));
}

// The sorting algorithm. Scans the word left to right with residual x
// (initially u); a position is recorded exactly when its letter is a left
// descent of x, in which case the letter is stripped from x. The result is
// a reduced word for u. If the residual does not reach the identity, u is
// not a subword of the sorting word.
inline Subword sort_element(const SortingWord& w, const GroupElement& u) {
  const CoxeterSystem& sys = *w.sys;
  GroupElement x = u;
  Subword out;
  for (int i = 0; i < w.size(); ++i) {
    int s = w.letters[i];
    if (sys.is_left_descent(x, s)) {
      out.indices.push_back(i);
      x = sys.left_mul(s, x);
    }
  }
  if (!x.is_identity())
    throw NotInOmegaError("element is not a subword of the sorting word");
  return out;
}

// Sorted-word recognizer: alpha must be reduced, and no skipped position
// j < m-1 may carry a left descent of the group element of the part of
// alpha to the right of j.
inline bool is_omega_sorted(const SortingWord& w, const Subword& alpha) {
  const CoxeterSystem& sys = *w.sys;
  int m = w.size();
  std::vector<char> in_alpha(m, 0);
  for (int i : alpha.indices) in_alpha[i] = 1;
  GroupElement suffix = sys.identity();  // <alpha restricted to positions > j>
  for (int j = m - 1; j >= 0; --j) {
    if (j < m - 1 && !in_alpha[j] &&
        sys.is_left_descent(suffix, w.letters[j]))
      return false;
    if (in_alpha[j]) suffix = sys.left_mul(w.letters[j], suffix);
  }
  return suffix.length() == alpha.size();  // reduced
}

struct EnumerateOptions {
  int ground_cap = 24;       // maximum |I(omega)| for exhaustive enumeration
  bool full_growth = false;  // grow by every absent index, not only above max
  int element_cap = 5000000; // maximum family size
};

// All index sets of sorted subwords. Default growth adds only indices above
// the current maximum: every prefix of a feasible set is feasible, so this
// reaches everything exactly once. The full-growth mode re-derives the same
// family from the augmentation property and exists to cross-validate.
inline SetSystem enumerate_sorted(const SortingWord& w,
                                  const EnumerateOptions& opts = {}) {
  int m = w.size();
  if (m > opts.ground_cap || m > 63)
    throw CapExceededError("sorting word is longer than the enumeration cap");
  std::vector<SetMask> family{0};
  std::vector<SetMask> frontier{0};
  while (!frontier.empty()) {
    // Sets of cardinality k+1 only arise from frontier sets of cardinality
    // k. In default growth each new set has the unique parent obtained by
    // dropping its maximum, so no dedup is needed; full growth dedups
    // within the level.
    std::vector<SetMask> next;
    for (SetMask a : frontier) {
      int start =
          opts.full_growth ? 0 : (a == 0 ? 0 : 64 - std::countl_zero(a));
      for (int i = start; i < m; ++i) {
        SetMask bit = SetMask{1} << i;
        if (a & bit) continue;
        SetMask b = a | bit;
        if (opts.full_growth &&
            std::binary_search(next.begin(), next.end(), b))
          continue;
        if (is_omega_sorted(w, Subword::from_mask(b))) {
          if (opts.full_growth)
            next.insert(std::lower_bound(next.begin(), next.end(), b), b);
          else
            next.push_back(b);
        }
      }
    }
    family.insert(family.end(), next.begin(), next.end());
    if (family.size() > static_cast<std::size_t>(opts.element_cap))
      throw CapExceededError("sorted-subword family exceeds the element cap");
    frontier = std::move(next);
  }
  return SetSystem::make(m, std::move(family));
}

// Union of all sorted subwords; itself sorted, hence reduced, and sorting
// with respect to it agrees with sorting by the original word.
inline Subword reduced_support(const SortingWord& w,
                               const EnumerateOptions& opts = {}) {
  SetSystem family = enumerate_sorted(w, opts);
  return Subword::from_mask(family.union_of_all());
}

// Exchange of commuting letters at positions i, i+1 (0-based).
inline SortingWord commutation_swap(const SortingWord& w, int i) {
  if (i < 0 || i + 1 >= w.size())
    throw std::out_of_range("commutation_swap: position out of range");
  int s = w.letters[i], t = w.letters[i + 1];
  if (s == t)
    throw std::invalid_argument("commutation_swap: equal letters");
  if (w.sys->bond(s, t) != 2)
    throw std::invalid_argument("commutation_swap: letters do not commute");
  std::vector<int> letters = w.letters;
  std::swap(letters[i], letters[i + 1]);
  return SortingWord(w.sys, std::move(letters));
}

}  // namespace coxsort
