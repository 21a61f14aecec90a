// set_system.hpp --- finite set systems, antimatroids and convex geometries
//
// Ground sets are {0,...,n-1} with n <= 63 and members are bitmasks, so the
// family of a set system is a sorted vector of words. The checks here follow
// the axiom systems verbatim: accessibility, the three equivalent antimatroid
// conditions, the ordered strengthening used for supersolvability,
// complementation, closure operators and the anti-exchange axiom.

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "coxsort/errors.hpp"

namespace coxsort {

using SetMask = std::uint64_t;

inline int mask_size(SetMask a) { return std::popcount(a); }

// Canonical family order: by cardinality, then numerically.
inline bool set_order(SetMask a, SetMask b) {
  int ca = mask_size(a), cb = mask_size(b);
  return ca != cb ? ca < cb : a < b;
}

struct SetSystem {
  int n = 0;                  // ground set {0..n-1}
  std::vector<SetMask> sets;  // sorted by set_order, duplicate-free

  SetMask full() const { return n == 0 ? 0 : ((SetMask{1} << n) - 1); }

  bool contains(SetMask a) const {
    return std::binary_search(sets.begin(), sets.end(), a, set_order);
  }

  SetMask union_of_all() const {
    SetMask u = 0;
    for (SetMask a : sets) u |= a;
    return u;
  }

  friend bool operator==(const SetSystem&, const SetSystem&) = default;

  static SetSystem make(int n, std::vector<SetMask> family) {
    if (n < 0 || n > 63)
      throw std::invalid_argument("ground set size must be in [0,63]");
    SetSystem sys{n, std::move(family)};
    for (SetMask a : sys.sets)
      if ((a & ~sys.full()) != 0)
        throw std::invalid_argument("family member outside the ground set");
    std::sort(sys.sets.begin(), sys.sets.end(), set_order);
    sys.sets.erase(std::unique(sys.sets.begin(), sys.sets.end()),
                   sys.sets.end());
    return sys;
  }
};

// Empty set present, and every nonempty feasible set has a feasible child.
inline bool is_accessible(const SetSystem& sys) {
  if (!sys.contains(0)) return false;
  for (SetMask a : sys.sets) {
    if (a == 0) continue;
    bool ok = false;
    for (SetMask b = a; b && !ok; b &= b - 1)
      ok = sys.contains(a & ~(b & -b));
    if (!ok) return false;
  }
  return true;
}

struct AntimatroidReport {
  bool accessible = false;
  bool augmentation = false;  // some x in B\A extends A
  bool union_closed = false;
  bool local = false;  // A, A+x, A+y feasible => A+x+y feasible

  bool all() const { return accessible && augmentation && union_closed && local; }
  bool flags_agree() const {
    return augmentation == union_closed && union_closed == local;
  }
};

// Evaluates the three equivalent antimatroid conditions independently.
// They are only guaranteed to agree on accessible systems; the report
// carries the accessibility flag so precondition failures stay visible.
inline AntimatroidReport is_antimatroid(const SetSystem& sys) {
  AntimatroidReport rep;
  rep.accessible = is_accessible(sys);

  rep.augmentation = true;
  for (SetMask a : sys.sets) {
    for (SetMask b : sys.sets) {
      SetMask extra = b & ~a;
      if (extra == 0) continue;
      bool found = false;
      for (SetMask e = extra; e && !found; e &= e - 1)
        found = sys.contains(a | (e & -e));
      if (!found) {
        rep.augmentation = false;
        break;
      }
    }
    if (!rep.augmentation) break;
  }

  rep.union_closed = true;
  for (SetMask a : sys.sets)
    for (SetMask b : sys.sets)
      if (!sys.contains(a | b)) {
        rep.union_closed = false;
        break;
      }

  rep.local = true;
  for (SetMask a : sys.sets) {
    SetMask outside = sys.full() & ~a;
    for (SetMask e1 = outside; e1 && rep.local; e1 &= e1 - 1) {
      SetMask x = e1 & -e1;
      if (!sys.contains(a | x)) continue;
      for (SetMask e2 = e1 & (e1 - 1); e2; e2 &= e2 - 1) {
        SetMask y = e2 & -e2;
        if (sys.contains(a | y) && !sys.contains(a | x | y)) {
          rep.local = false;
          break;
        }
      }
    }
    if (!rep.local) break;
  }
  return rep;
}

// min of mask with respect to a ground order (order[k] = k-th smallest).
inline int order_min(SetMask a, const std::vector<int>& order) {
  for (int e : order)
    if (a >> e & 1) return e;
  return -1;
}

// Ordered antimatroid condition: empty set feasible, and for feasible A, B
// with B not contained in A, adding min(B\A) to A stays feasible.
inline bool is_supersolvable_antimatroid(const SetSystem& sys,
                                         const std::vector<int>& order) {
  if (!sys.contains(0)) return false;
  for (SetMask a : sys.sets)
    for (SetMask b : sys.sets) {
      SetMask extra = b & ~a;
      if (extra == 0) continue;
      int x = order_min(extra, order);
      if (!sys.contains(a | (SetMask{1} << x))) return false;
    }
  return true;
}

inline std::vector<int> identity_order(int n) {
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  return order;
}

inline bool is_supersolvable_antimatroid(const SetSystem& sys) {
  return is_supersolvable_antimatroid(sys, identity_order(sys.n));
}

// "Exists an order" mode: searches all n! ground orders (n <= 8) and
// returns a witness, or nullopt if every order fails.
inline std::optional<std::vector<int>> supersolvable_order_search(
    const SetSystem& sys) {
  if (sys.n > 8)
    throw CapExceededError("order search is limited to ground sets of size 8");
  std::vector<int> order = identity_order(sys.n);
  do {
    if (is_supersolvable_antimatroid(sys, order)) return order;
  } while (std::next_permutation(order.begin(), order.end()));
  return std::nullopt;
}

inline SetSystem complement_system(const SetSystem& sys) {
  std::vector<SetMask> comp;
  comp.reserve(sys.sets.size());
  for (SetMask a : sys.sets) comp.push_back(sys.full() & ~a);
  return SetSystem::make(sys.n, std::move(comp));
}

inline bool is_intersection_closed(const SetSystem& sys) {
  for (SetMask a : sys.sets)
    for (SetMask b : sys.sets)
      if (!sys.contains(a & b)) return false;
  return true;
}

// Closure operator of an intersection-closed family containing E:
// tau(X) = intersection of the closed supersets of X.
class ClosureOperator {
 public:
  explicit ClosureOperator(SetSystem closed) : closed_(std::move(closed)) {
    if (!closed_.contains(closed_.full()))
      throw std::invalid_argument("closure: ground set must be closed");
    if (!is_intersection_closed(closed_))
      throw std::invalid_argument("closure: family is not intersection-closed");
  }

  const SetSystem& closed() const { return closed_; }

  SetMask tau(SetMask x) const {
    SetMask t = closed_.full();
    for (SetMask a : closed_.sets)
      if ((x & ~a) == 0) t &= a;
    return t;
  }

 private:
  SetSystem closed_;
};

// Anti-exchange: for all A and distinct x, y outside tau(A),
// x in tau(A+y) implies y not in tau(A+x).
inline bool satisfies_antiexchange(const ClosureOperator& cl) {
  const SetSystem& c = cl.closed();
  if (!c.contains(0))
    throw std::invalid_argument("anti-exchange: empty set must be closed");
  if (c.n > 20)
    throw CapExceededError("anti-exchange scan is limited to 20 ground elements");
  for (SetMask a = 0; a <= c.full(); ++a) {
    SetMask ta = cl.tau(a);
    SetMask outside = c.full() & ~ta;
    for (SetMask e1 = outside; e1; e1 &= e1 - 1) {
      SetMask x = e1 & -e1;
      for (SetMask e2 = outside; e2; e2 &= e2 - 1) {
        SetMask y = e2 & -e2;
        if (x == y) continue;
        if ((cl.tau(a | y) & x) && (cl.tau(a | x) & y)) return false;
      }
    }
    if (c.full() == 0) break;  // n = 0: single iteration
  }
  return true;
}

// Feasible (open) sets of n collinear points: complements of the
// intersections of E with convex subsets of the line, i.e. all subsets
// whose complement is a contiguous block.
inline SetSystem line_convex_geometry(int n) {
  if (n < 0) throw std::invalid_argument("line_convex_geometry: n < 0");
  std::vector<SetMask> open;
  SetMask full = n == 0 ? 0 : ((SetMask{1} << n) - 1);
  open.push_back(full);  // complement of the empty block
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      SetMask block = ((SetMask{1} << (j - i + 1)) - 1) << i;
      open.push_back(full & ~block);
    }
  return SetSystem::make(n, std::move(open));
}

}  // namespace coxsort
