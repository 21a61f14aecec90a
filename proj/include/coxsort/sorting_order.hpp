// sorting_order.hpp --- the sorting order on the elements occurring as
// subwords of a sorting word
//
// The order is assembled from the family of sorted index sets: inclusion of
// index sets, with each feasible set carrying its group element. Comparisons
// against the weak and Bruhat orders, maximality under added Bruhat covers,
// commutation invariance, and truncations of infinite words live here too.

#pragma once

#include <unordered_map>
#include <vector>

#include "coxsort/lattice.hpp"
#include "coxsort/words.hpp"

namespace coxsort {

struct SortingOrderOptions {
  int element_cap = 5000;  // maximum |W_omega|
  int ground_cap = 63;     // maximum |I(omega)|
};

struct SortingOrder {
  SortingWord word;
  SetSystem family;
  GradedLattice lattice;  // element ids follow family order
  std::vector<GroupElement> elements;
  std::unordered_map<GroupElement, int, ElementHash> index_of;

  int size() const { return static_cast<int>(elements.size()); }

  // id of a group element, or -1 when it is not in W_omega.
  int find(const GroupElement& w) const {
    auto it = index_of.find(w);
    return it == index_of.end() ? -1 : it->second;
  }

  bool leq(int u, int w) const { return lattice.leq(u, w); }

  Subword sorted_word(int id) const {
    return Subword::from_mask(family.sets[id]);
  }
};

inline SortingOrder build_sorting_order(const SortingWord& w,
                                        const SortingOrderOptions& opts = {}) {
  EnumerateOptions eopts;
  eopts.ground_cap = opts.ground_cap;
  eopts.element_cap = opts.element_cap;
  SetSystem family = enumerate_sorted(w, eopts);
  GradedLattice lattice = build_lattice_from_family(family);
  SortingOrder so{w, std::move(family), std::move(lattice), {}, {}};
  so.elements.reserve(so.family.sets.size());
  for (std::size_t id = 0; id < so.family.sets.size(); ++id) {
    Subword sw = Subword::from_mask(so.family.sets[id]);
    GroupElement g = w.sys->evaluate_word(sw.induced_letters(w));
    if (g.length() != so.lattice.rank(static_cast<int>(id)))
      throw std::logic_error("sorting order is not graded by length");
    auto [it, fresh] = so.index_of.emplace(g, static_cast<int>(id));
    if (!fresh)
      throw std::logic_error("two sorted words evaluate to the same element");
    so.elements.push_back(std::move(g));
  }
  return so;
}

struct OrderComparison {
  bool weak_subset = false;     // weak relation contained in sorting
  bool bruhat_superset = false; // sorting relation contained in Bruhat
  bool strict_below = false;    // some sorting pair is not a weak pair
  bool strict_above = false;    // some Bruhat pair is not a sorting pair
  int weak_covers = 0, sorting_covers = 0, bruhat_covers = 0;
};

// Pairwise comparison of the weak, sorting and Bruhat orders on W_omega.
inline OrderComparison compare_orders(const SortingOrder& so) {
  const CoxeterSystem& sys = *so.word.sys;
  int n = so.size();
  std::vector<Bits> weak(n, Bits(n)), bruhat(n, Bits(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (sys.weak_leq(so.elements[i], so.elements[j])) weak[i].set(j);
      if (sys.bruhat_leq(so.elements[i], so.elements[j])) bruhat[i].set(j);
    }
  OrderComparison cmp;
  cmp.weak_subset = cmp.bruhat_superset = true;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      bool srt = so.leq(i, j);
      if (weak[i].test(j) && !srt) cmp.weak_subset = false;
      if (srt && !bruhat[i].test(j)) cmp.bruhat_superset = false;
      if (srt && !weak[i].test(j)) cmp.strict_below = true;
      if (bruhat[i].test(j) && !srt) cmp.strict_above = true;
    }
  FinitePoset weak_poset = FinitePoset::from_leq(
      n, [&](int i, int j) { return weak[i].test(j); });
  FinitePoset bruhat_poset = FinitePoset::from_leq(
      n, [&](int i, int j) { return bruhat[i].test(j); });
  cmp.weak_covers = static_cast<int>(weak_poset.covers().size());
  cmp.bruhat_covers = static_cast<int>(bruhat_poset.covers().size());
  cmp.sorting_covers = static_cast<int>(so.lattice.poset().covers().size());
  return cmp;
}

// Bruhat cover relations on W_omega that the sorting order does not contain.
inline std::vector<std::pair<int, int>> missing_bruhat_covers(
    const SortingOrder& so) {
  const CoxeterSystem& sys = *so.word.sys;
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < so.size(); ++i)
    for (int j = 0; j < so.size(); ++j) {
      if (so.elements[j].length() != so.elements[i].length() + 1) continue;
      if (so.leq(i, j)) continue;
      if (sys.bruhat_leq(so.elements[i], so.elements[j])) out.push_back({i, j});
    }
  return out;
}

// Adding any tested collection of absent Bruhat covers must break the
// lattice property.
inline bool verify_maximality(const SortingOrder& so) {
  return is_maximal_lattice(so.lattice, missing_bruhat_covers(so));
}

// The sorting order is unchanged by every legal exchange of adjacent
// commuting letters of the sorting word (as a relation on group elements).
inline bool verify_commutation_invariance(const SortingWord& w,
                                          const SortingOrderOptions& opts = {}) {
  SortingOrder base = build_sorting_order(w, opts);
  for (int i = 0; i + 1 < w.size(); ++i) {
    int s = w.letters[i], t = w.letters[i + 1];
    if (s == t || w.sys->bond(s, t) != 2) continue;
    SortingOrder other = build_sorting_order(commutation_swap(w, i), opts);
    if (other.size() != base.size()) return false;
    std::vector<int> map(base.size(), -1);
    for (int id = 0; id < base.size(); ++id) {
      map[id] = other.find(base.elements[id]);
      if (map[id] < 0) return false;
    }
    for (int a = 0; a < base.size(); ++a)
      for (int b = 0; b < base.size(); ++b)
        if (base.leq(a, b) != other.leq(map[a], map[b])) return false;
  }
  return true;
}

struct TruncationReport {
  SortingOrder order;
  bool lattice_ok = false;
  bool intervals_join_distributive = false;
  bool intervals_supersolvable = false;

  bool all() const {
    return lattice_ok && intervals_join_distributive && intervals_supersolvable;
  }
};

// Sorting order of a finite prefix of an intended infinite word. The prefix
// must be reduced (equivalently, all its prefixes are). Every interval is
// checked to be a join-distributive and supersolvable lattice, which is how
// the infinite order's properties are stated interval-wise.
inline TruncationReport build_truncated_infinite(
    const SortingWord& prefix, const SortingOrderOptions& opts = {}) {
  if (!prefix.sys->is_reduced(prefix.letters))
    throw std::invalid_argument("prefix of an infinite word must be reduced");
  TruncationReport rep{build_sorting_order(prefix, opts)};
  rep.lattice_ok = is_lattice(rep.order.lattice.poset());
  rep.intervals_join_distributive = true;
  rep.intervals_supersolvable = true;
  int n = rep.order.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (!rep.order.leq(x, y)) continue;
      GradedLattice iv = rep.order.lattice.interval(x, y);
      if (!is_join_distributive(iv).all())
        rep.intervals_join_distributive = false;
      if (!is_supersolvable(iv)) rep.intervals_supersolvable = false;
    }
  return rep;
}

}  // namespace coxsort
