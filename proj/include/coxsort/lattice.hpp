// lattice.hpp --- finite posets and graded lattices
//
// Posets store their cover digraph plus full reachability bitsets; graded
// lattices add a rank function and dense meet/join tables. On top of that
// sit the structural tests used throughout: join-distributivity through
// three independent routes, S_n EL-labellings, supersolvability, generated
// sublattices, distributivity, maximality under added covers, and poset
// isomorphism.

#pragma once

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "coxsort/errors.hpp"
#include "coxsort/set_system.hpp"

namespace coxsort {

using Bits = boost::dynamic_bitset<>;

inline constexpr int max_lattice_size = 4096;  // dense table cap

class FinitePoset {
 public:
  FinitePoset() = default;

  // Builds a poset from relation edges (need not be transitively reduced);
  // rejects cyclic input. Cover edges are recomputed canonically.
  static FinitePoset from_edges(int n, std::vector<std::pair<int, int>> edges) {
    FinitePoset p;
    p.n_ = n;
    std::vector<std::vector<int>> adj(n);
    std::vector<int> indeg(n, 0);
    for (auto [x, y] : edges) {
      if (x < 0 || x >= n || y < 0 || y >= n || x == y)
        throw std::invalid_argument("poset edge out of range");
      adj[x].push_back(y);
      ++indeg[y];
    }
    // Kahn topological order; reachability accumulated in reverse.
    std::vector<int> topo;
    topo.reserve(n);
    std::vector<int> deg = indeg;
    for (int i = 0; i < n; ++i)
      if (deg[i] == 0) topo.push_back(i);
    for (std::size_t head = 0; head < topo.size(); ++head)
      for (int y : adj[topo[head]])
        if (--deg[y] == 0) topo.push_back(y);
    if (static_cast<int>(topo.size()) != n)
      throw std::invalid_argument("poset relation contains a cycle");
    p.up_.assign(n, Bits(n));
    for (int i = n - 1; i >= 0; --i) {
      int x = topo[i];
      p.up_[x].set(x);
      for (int y : adj[x]) p.up_[x] |= p.up_[y];
    }
    p.finish();
    return p;
  }

  static FinitePoset from_leq(int n,
                              const std::function<bool(int, int)>& leq) {
    FinitePoset p;
    p.n_ = n;
    p.up_.assign(n, Bits(n));
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (x == y || leq(x, y)) p.up_[x].set(y);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        if (!p.up_[x].test(y)) continue;
        if (x != y && p.up_[y].test(x))
          throw std::invalid_argument("relation is not antisymmetric");
        if (!p.up_[y].is_subset_of(p.up_[x]))
          throw std::invalid_argument("relation is not transitive");
      }
    p.finish();
    return p;
  }

  int size() const { return n_; }
  bool leq(int x, int y) const { return up_[x].test(y); }
  bool strictly_less(int x, int y) const { return x != y && leq(x, y); }
  bool is_cover(int x, int y) const {
    return std::binary_search(covers_.begin(), covers_.end(),
                              std::make_pair(x, y));
  }
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }
  const Bits& up_set(int x) const { return up_[x]; }
  const Bits& down_set(int x) const { return down_[x]; }
  const std::vector<int>& covers_above(int x) const { return adj_up_[x]; }

  std::vector<int> minimal_elements() const {
    std::vector<int> out;
    for (int x = 0; x < n_; ++x) {
      bool min = true;
      for (int y = 0; y < n_ && min; ++y)
        if (y != x && leq(y, x)) min = false;
      if (min) out.push_back(x);
    }
    return out;
  }

  std::vector<int> maximal_elements() const {
    std::vector<int> out;
    for (int x = 0; x < n_; ++x)
      if (adj_up_[x].empty()) out.push_back(x);
    return out;
  }

 private:
  void finish() {
    down_.assign(n_, Bits(n_));
    for (int x = 0; x < n_; ++x)
      for (int y = 0; y < n_; ++y)
        if (up_[x].test(y)) down_[y].set(x);
    covers_.clear();
    for (int x = 0; x < n_; ++x)
      for (int y = 0; y < n_; ++y) {
        if (x == y || !up_[x].test(y)) continue;
        Bits between = up_[x] & down_[y];
        if (between.count() == 2) covers_.push_back({x, y});
      }
    std::sort(covers_.begin(), covers_.end());
    adj_up_.assign(n_, {});
    for (auto [x, y] : covers_) adj_up_[x].push_back(y);
  }

  int n_ = 0;
  std::vector<std::pair<int, int>> covers_;
  std::vector<Bits> up_, down_;
  std::vector<std::vector<int>> adj_up_;
};

// Least upper bound of x,y in a poset, or -1 if none or not unique.
inline int poset_join(const FinitePoset& p, int x, int y) {
  Bits ub = p.up_set(x) & p.up_set(y);
  for (auto z = ub.find_first(); z != Bits::npos; z = ub.find_next(z))
    if (ub.is_subset_of(p.up_set(z))) return static_cast<int>(z);
  return -1;
}

inline int poset_meet(const FinitePoset& p, int x, int y) {
  Bits lb = p.down_set(x) & p.down_set(y);
  for (auto z = lb.find_first(); z != Bits::npos; z = lb.find_next(z))
    if (lb.is_subset_of(p.down_set(z))) return static_cast<int>(z);
  return -1;
}

// True iff every pair has a unique least upper bound and greatest lower
// bound. (On a finite poset this forces a top and a bottom.)
inline bool is_lattice(const FinitePoset& p) {
  if (p.size() == 0) return false;
  for (int x = 0; x < p.size(); ++x)
    for (int y = x + 1; y < p.size(); ++y)
      if (poset_join(p, x, y) < 0 || poset_meet(p, x, y) < 0) return false;
  return true;
}

// Edge labels, aligned with FinitePoset::covers(). Labels are compared
// through `priority` (smaller priority = smaller label); by default the
// label values themselves.
struct EdgeLabelling {
  std::vector<int> labels;
};

class GradedLattice {
 public:
  // Extra structure carried by feasible-set lattices.
  struct FamilyInfo {
    SetSystem family;
    std::vector<SetMask> set_of;  // element id -> feasible set
  };

  static GradedLattice from_poset(FinitePoset p,
                                  std::optional<FamilyInfo> fam = {}) {
    if (p.size() == 0)
      throw std::invalid_argument("lattice must be nonempty");
    if (p.size() > max_lattice_size)
      throw CapExceededError("lattice exceeds the dense-table cap");
    GradedLattice lat;
    lat.poset_ = std::move(p);
    lat.family_ = std::move(fam);
    int n = lat.poset_.size();
    auto mins = lat.poset_.minimal_elements();
    auto maxs = lat.poset_.maximal_elements();
    if (mins.size() != 1 || maxs.size() != 1)
      throw std::invalid_argument("not a lattice: bottom or top not unique");
    lat.bottom_ = mins[0];
    lat.top_ = maxs[0];
    lat.meet_.assign(n, std::vector<int>(n, -1));
    lat.join_.assign(n, std::vector<int>(n, -1));
    for (int x = 0; x < n; ++x)
      for (int y = x; y < n; ++y) {
        int j = poset_join(lat.poset_, x, y);
        int m = poset_meet(lat.poset_, x, y);
        if (j < 0 || m < 0)
          throw std::invalid_argument("not a lattice: missing meet or join");
        lat.join_[x][y] = lat.join_[y][x] = j;
        lat.meet_[x][y] = lat.meet_[y][x] = m;
      }
    // Rank: propagate +1 along covers from the bottom; any conflict means
    // the poset is not graded.
    lat.rank_.assign(n, -1);
    lat.rank_[lat.bottom_] = 0;
    for (bool changed = true; changed;) {
      changed = false;
      for (auto [x, y] : lat.poset_.covers()) {
        if (lat.rank_[x] < 0) continue;
        if (lat.rank_[y] < 0) {
          lat.rank_[y] = lat.rank_[x] + 1;
          changed = true;
        } else if (lat.rank_[y] != lat.rank_[x] + 1) {
          throw std::invalid_argument("poset is not graded");
        }
      }
    }
    return lat;
  }

  const FinitePoset& poset() const { return poset_; }
  int size() const { return poset_.size(); }
  int bottom() const { return bottom_; }
  int top() const { return top_; }
  int rank(int x) const { return rank_[x]; }
  int height() const { return rank_[top_]; }
  int meet(int x, int y) const { return meet_[x][y]; }
  int join(int x, int y) const { return join_[x][y]; }
  bool leq(int x, int y) const { return poset_.leq(x, y); }

  const std::optional<FamilyInfo>& family() const { return family_; }

  // Natural labelling of a feasible-set lattice: a cover X < Y is labelled
  // by the unique ground element of Y \ X.
  EdgeLabelling natural_labels() const {
    if (!family_)
      throw std::invalid_argument("lattice has no feasible-set structure");
    EdgeLabelling el;
    el.labels.reserve(poset_.covers().size());
    for (auto [x, y] : poset_.covers()) {
      SetMask diff = family_->set_of[y] & ~family_->set_of[x];
      if (mask_size(diff) != 1)
        throw std::logic_error("cover is not a single-element extension");
      el.labels.push_back(std::countr_zero(diff));
    }
    return el;
  }

  // The interval [x,y] as a lattice in its own right; returns the element
  // ids of the interval alongside. Feasible-set structure is dropped.
  GradedLattice interval(int x, int y, std::vector<int>* ids = nullptr) const {
    Bits in = poset_.up_set(x) & poset_.down_set(y);
    std::vector<int> elems;
    std::vector<int> pos(size(), -1);
    for (auto z = in.find_first(); z != Bits::npos; z = in.find_next(z)) {
      pos[z] = static_cast<int>(elems.size());
      elems.push_back(static_cast<int>(z));
    }
    std::vector<std::pair<int, int>> edges;
    for (auto [a, b] : poset_.covers())
      if (pos[a] >= 0 && pos[b] >= 0) edges.push_back({pos[a], pos[b]});
    if (ids) *ids = elems;
    return from_poset(
        FinitePoset::from_edges(static_cast<int>(elems.size()), edges));
  }

 private:
  FinitePoset poset_;
  std::vector<int> rank_;
  std::vector<std::vector<int>> meet_, join_;
  int bottom_ = 0, top_ = 0;
  std::optional<FamilyInfo> family_;
};

// Lattice of feasible sets of an antimatroid, ordered by inclusion, with
// join = union and meet = union of the feasible subsets of the intersection.
// The tables are computed generically from the poset and then checked
// against those formulas.
inline GradedLattice build_lattice_from_family(const SetSystem& sys) {
  AntimatroidReport rep = is_antimatroid(sys);
  if (!rep.all())
    throw std::invalid_argument("family is not an antimatroid");
  int n = static_cast<int>(sys.sets.size());
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      SetMask a = sys.sets[i], b = sys.sets[j];
      if ((a & ~b) == 0 && mask_size(b & ~a) == 1) edges.push_back({i, j});
    }
  GradedLattice::FamilyInfo info{sys, sys.sets};
  GradedLattice lat =
      GradedLattice::from_poset(FinitePoset::from_edges(n, edges), info);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (sys.sets[lat.join(i, j)] != (sys.sets[i] | sys.sets[j]))
        throw std::logic_error("join is not union of feasible sets");
      SetMask inter = sys.sets[i] & sys.sets[j];
      SetMask meet = 0;
      for (SetMask f : sys.sets)
        if ((f & ~inter) == 0) meet |= f;
      if (sys.sets[lat.meet(i, j)] != meet)
        throw std::logic_error("meet is not the union of feasible subsets");
    }
  return lat;
}

struct JoinDistributivityReport {
  bool boolean_atomic = false;
  bool unique_meet_decomp = false;
  bool usm_and_msd = false;

  bool all() const { return boolean_atomic && unique_meet_decomp && usm_and_msd; }
  bool flags_agree() const {
    return boolean_atomic == unique_meet_decomp &&
           unique_meet_decomp == usm_and_msd;
  }
};

namespace detail {

// [x, join of all covers of x] is boolean. It suffices that the 2^k joins
// of subsets of atoms are distinct and fill the interval: injectivity
// already forces a <= join(T) => a in T for atoms a, hence an order
// isomorphism with the boolean lattice.
inline bool atomic_intervals_boolean(const GradedLattice& lat) {
  for (int x = 0; x < lat.size(); ++x) {
    const std::vector<int>& atoms = lat.poset().covers_above(x);
    int k = static_cast<int>(atoms.size());
    if (k == 0) continue;
    if (k > 25) return false;  // interval would exceed any lattice we hold
    int topj = x;
    for (int a : atoms) topj = lat.join(topj, a);
    Bits interval = lat.poset().up_set(x) & lat.poset().down_set(topj);
    if (interval.count() != (std::size_t{1} << k)) return false;
    std::vector<int> join_of(std::size_t{1} << k);
    join_of[0] = x;
    std::vector<char> seen(lat.size(), 0);
    seen[x] = 1;
    for (SetMask m = 1; m < (SetMask{1} << k); ++m) {
      int low = std::countr_zero(m);
      int j = lat.join(join_of[m & (m - 1)], atoms[low]);
      join_of[m] = j;
      if (seen[j]) return false;
      seen[j] = 1;
    }
  }
  return true;
}

// Unique irredundant decomposition as a meet of meet-irreducibles. The
// minimal subsets of {meet-irreducibles above x} whose meet is x are
// enumerated by DFS; elements at or above the running meet are skipped
// since they could only be redundant.
inline bool unique_meet_decompositions(const GradedLattice& lat) {
  std::vector<int> mi;
  for (int x = 0; x < lat.size(); ++x)
    if (x != lat.top() && lat.poset().covers_above(x).size() == 1)
      mi.push_back(x);
  for (int x = 0; x < lat.size(); ++x) {
    std::vector<int> above;
    for (int m : mi)
      if (lat.leq(x, m)) above.push_back(m);
    int count = 0;
    std::vector<int> chosen;
    std::function<void(std::size_t, int)> dfs = [&](std::size_t next, int cur) {
      if (count > 1) return;
      if (cur == x) {
        for (std::size_t d = 0; d < chosen.size(); ++d) {
          int rest = lat.top();
          for (std::size_t i = 0; i < chosen.size(); ++i)
            if (i != d) rest = lat.meet(rest, chosen[i]);
          if (rest == x) return;  // redundant, a subset already counted
        }
        ++count;
        return;
      }
      for (std::size_t i = next; i < above.size(); ++i) {
        int m = above[i];
        if (lat.leq(cur, m)) continue;
        chosen.push_back(m);
        dfs(i + 1, lat.meet(cur, m));
        chosen.pop_back();
        if (count > 1) return;
      }
    };
    dfs(0, lat.top());
    if (count != 1) return false;
  }
  return true;
}

inline bool upper_semimodular_and_msd(const GradedLattice& lat) {
  int n = lat.size();
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      int m = lat.meet(x, y);
      if (lat.rank(x) == lat.rank(m) + 1 && lat.rank(y) == lat.rank(m) + 1 &&
          lat.poset().is_cover(m, x) && lat.poset().is_cover(m, y)) {
        int j = lat.join(x, y);
        if (!lat.poset().is_cover(x, j) || !lat.poset().is_cover(y, j))
          return false;
      }
    }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = y + 1; z < n; ++z) {
        int xy = lat.meet(x, y);
        if (xy != lat.meet(x, z)) continue;
        if (lat.meet(x, lat.join(y, z)) != xy) return false;
      }
  return true;
}

}  // namespace detail

// Three independent routes to join-distributivity; the flags agree on every
// lattice.
inline JoinDistributivityReport is_join_distributive(const GradedLattice& lat) {
  JoinDistributivityReport rep;
  rep.boolean_atomic = detail::atomic_intervals_boolean(lat);
  rep.unique_meet_decomp = detail::unique_meet_decompositions(lat);
  rep.usm_and_msd = detail::upper_semimodular_and_msd(lat);
  return rep;
}

// S_n EL-labelling test: inside every interval, the label sequences of
// maximal chains must be permutations of one common label set, with exactly
// one chain increasing. `priority` ranks the labels; identity by default.
inline bool is_sn_el_labelling(const GradedLattice& lat,
                               const EdgeLabelling& el,
                               const std::vector<int>& priority = {}) {
  auto pri = [&](int label) {
    return priority.empty() ? label : priority[label];
  };
  // cover edge index lookup
  std::map<std::pair<int, int>, int> edge_id;
  for (std::size_t e = 0; e < lat.poset().covers().size(); ++e)
    edge_id[lat.poset().covers()[e]] = static_cast<int>(e);

  for (int x = 0; x < lat.size(); ++x)
    for (int y = 0; y < lat.size(); ++y) {
      if (!lat.leq(x, y)) continue;
      std::vector<int> chain;
      std::vector<int> base_set;
      bool have_base = false;
      int increasing = 0;
      bool ok = true;
      std::function<void(int)> dfs = [&](int z) {
        if (!ok) return;
        if (z == y) {
          std::vector<int> sorted = chain;
          std::sort(sorted.begin(), sorted.end());
          if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            ok = false;  // repeated label on a chain
            return;
          }
          if (!have_base) {
            base_set = sorted;
            have_base = true;
          } else if (sorted != base_set) {
            ok = false;
            return;
          }
          bool inc = true;
          for (std::size_t i = 1; i < chain.size(); ++i)
            if (pri(chain[i - 1]) >= pri(chain[i])) inc = false;
          if (inc && ++increasing > 1) ok = false;
          return;
        }
        for (int w : lat.poset().covers_above(z)) {
          if (!lat.leq(w, y)) continue;
          chain.push_back(el.labels[edge_id[{z, w}]]);
          dfs(w);
          chain.pop_back();
          if (!ok) return;
        }
      };
      dfs(x);
      if (!ok || increasing != 1) return false;
    }
  return true;
}

// All maximal chains from bottom to top, as element sequences.
inline std::vector<std::vector<int>> maximal_chains(const GradedLattice& lat,
                                                    std::size_t cap = 200000) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur{lat.bottom()};
  std::function<void(int)> dfs = [&](int z) {
    if (z == lat.top()) {
      if (out.size() >= cap)
        throw CapExceededError("too many maximal chains");
      out.push_back(cur);
      return;
    }
    for (int w : lat.poset().covers_above(z)) {
      cur.push_back(w);
      dfs(w);
      cur.pop_back();
    }
  };
  dfs(lat.bottom());
  return out;
}

// Closure of X under binary meets and joins.
inline std::vector<int> sublattice_generated(const GradedLattice& lat,
                                             std::vector<int> x) {
  Bits in(lat.size());
  for (int e : x) in.set(e);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> elems;
    for (auto e = in.find_first(); e != Bits::npos; e = in.find_next(e))
      elems.push_back(static_cast<int>(e));
    for (std::size_t i = 0; i < elems.size(); ++i)
      for (std::size_t j = i + 1; j < elems.size(); ++j) {
        int m = lat.meet(elems[i], elems[j]);
        int jn = lat.join(elems[i], elems[j]);
        if (!in.test(m)) in.set(m), grew = true;
        if (!in.test(jn)) in.set(jn), grew = true;
      }
  }
  std::vector<int> out;
  for (auto e = in.find_first(); e != Bits::npos; e = in.find_next(e))
    out.push_back(static_cast<int>(e));
  return out;
}

inline bool is_distributive(const GradedLattice& lat) {
  int n = lat.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = y; z < n; ++z)
        if (lat.meet(x, lat.join(y, z)) !=
            lat.join(lat.meet(x, y), lat.meet(x, z)))
          return false;
  return true;
}

namespace detail {

inline bool subset_is_distributive(const GradedLattice& lat,
                                   const std::vector<int>& sub) {
  for (int x : sub)
    for (int y : sub)
      for (int z : sub)
        if (lat.meet(x, lat.join(y, z)) !=
            lat.join(lat.meet(x, y), lat.meet(x, z)))
          return false;
  return true;
}

// M-chain search: some maximal chain generates a distributive sublattice
// with every other maximal chain.
inline bool supersolvable_by_mchain(const GradedLattice& lat) {
  std::vector<std::vector<int>> chains = maximal_chains(lat);
  for (const auto& m : chains) {
    bool good = true;
    for (const auto& other : chains) {
      std::vector<int> gens = m;
      gens.insert(gens.end(), other.begin(), other.end());
      if (!subset_is_distributive(lat, sublattice_generated(lat, gens))) {
        good = false;
        break;
      }
    }
    if (good) return true;
  }
  return false;
}

}  // namespace detail

// Supersolvability. Feasible-set lattices search ground orders for an S_n
// EL natural labelling (exhaustively up to 8 ground elements, otherwise the
// given order only); other lattices fall back to the M-chain definition and
// are capped at 100 elements.
inline bool is_supersolvable(const GradedLattice& lat) {
  if (lat.family()) {
    int n = lat.family()->family.n;
    EdgeLabelling el = lat.natural_labels();
    if (n <= 8) {
      std::vector<int> order = identity_order(n);
      do {
        std::vector<int> priority(n);
        for (int k = 0; k < n; ++k) priority[order[k]] = k;
        if (is_sn_el_labelling(lat, el, priority)) return true;
      } while (std::next_permutation(order.begin(), order.end()));
      return false;
    }
    return is_sn_el_labelling(lat, el);
  }
  if (lat.size() > 100)
    throw CapExceededError("M-chain search is limited to 100 elements");
  return detail::supersolvable_by_mchain(lat);
}

// Maximality under added covers: every tested nonempty collection of added
// rank-respecting cover relations must destroy the lattice property.
// Singletons are always tested; all subsets when there are at most 12
// candidates, otherwise 200 seeded random subsets on top of the singletons.
inline bool is_maximal_lattice(const GradedLattice& lat,
                               const std::vector<std::pair<int, int>>& candidates) {
  for (auto [x, y] : candidates) {
    if (lat.leq(x, y) || lat.leq(y, x))
      throw std::invalid_argument("candidate pair is already comparable");
    if (lat.rank(y) != lat.rank(x) + 1)
      throw std::invalid_argument("candidate pair does not respect ranks");
  }
  auto breaks_lattice = [&](const std::vector<std::pair<int, int>>& extra) {
    std::vector<std::pair<int, int>> edges = lat.poset().covers();
    edges.insert(edges.end(), extra.begin(), extra.end());
    return !is_lattice(FinitePoset::from_edges(lat.size(), edges));
  };
  for (auto c : candidates)
    if (!breaks_lattice({c})) return false;
  std::size_t k = candidates.size();
  if (k == 0) return true;
  if (k <= 12) {
    for (SetMask m = 1; m < (SetMask{1} << k); ++m) {
      std::vector<std::pair<int, int>> extra;
      for (std::size_t i = 0; i < k; ++i)
        if (m >> i & 1) extra.push_back(candidates[i]);
      if (!breaks_lattice(extra)) return false;
    }
    return true;
  }
  std::mt19937 rng(0xC0C5A17u);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::pair<int, int>> extra;
    for (std::size_t i = 0; i < k; ++i)
      if (rng() & 1) extra.push_back(candidates[i]);
    if (extra.empty()) extra.push_back(candidates[rng() % k]);
    if (!breaks_lattice(extra)) return false;
  }
  return true;
}

// Order isomorphism by backtracking over degree- and level-compatible
// assignments, after an iterated neighbourhood-colour refinement.
inline bool poset_isomorphic(const FinitePoset& p, const FinitePoset& q) {
  if (p.size() != q.size()) return false;
  if (p.size() > 200)
    throw CapExceededError("isomorphism search is limited to 200 elements");
  int n = p.size();
  if (n == 0) return true;

  auto colours = [n](const FinitePoset& r) {
    std::vector<long long> col(n);
    for (int x = 0; x < n; ++x) {
      long long up_deg = 0, down_deg = 0;
      for (auto [a, b] : r.covers()) {
        if (a == x) ++up_deg;
        if (b == x) ++down_deg;
      }
      col[x] = ((up_deg * 997 + down_deg) * 997 +
                static_cast<long long>(r.up_set(x).count())) *
                   997 +
               static_cast<long long>(r.down_set(x).count());
    }
    for (int round = 0; round < 3; ++round) {
      std::vector<long long> next(n);
      for (int x = 0; x < n; ++x) {
        std::vector<long long> nb;
        for (auto [a, b] : r.covers()) {
          if (a == x) nb.push_back(col[b] * 2 + 1);
          if (b == x) nb.push_back(col[a] * 2);
        }
        std::sort(nb.begin(), nb.end());
        long long h = col[x];
        for (long long v : nb) h = h * 1000003 + v;
        next[x] = h;
      }
      col = next;
    }
    return col;
  };
  std::vector<long long> pc = colours(p), qc = colours(q);
  {
    std::vector<long long> ps = pc, qs = qc;
    std::sort(ps.begin(), ps.end());
    std::sort(qs.begin(), qs.end());
    if (ps != qs) return false;
  }

  std::vector<int> order(n);  // assign p-elements rarest colour first
  std::iota(order.begin(), order.end(), 0);
  std::map<long long, int> freq;
  for (long long c : pc) ++freq[c];
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return std::pair(freq[pc[a]], a) < std::pair(freq[pc[b]], b);
  });

  std::vector<int> img(n, -1), used(n, 0);
  std::function<bool(int)> dfs = [&](int pos) {
    if (pos == n) return true;
    int x = order[pos];
    for (int y = 0; y < n; ++y) {
      if (used[y] || pc[x] != qc[y]) continue;
      bool ok = true;
      for (int i = 0; i < pos && ok; ++i) {
        int a = order[i];
        if (p.leq(a, x) != q.leq(img[a], y) ||
            p.leq(x, a) != q.leq(y, img[a]))
          ok = false;
      }
      if (!ok) continue;
      img[x] = y;
      used[y] = 1;
      if (dfs(pos + 1)) return true;
      img[x] = -1;
      used[y] = 0;
    }
    return false;
  };
  return dfs(0);
}

}  // namespace coxsort
