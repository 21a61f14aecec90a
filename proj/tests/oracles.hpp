// oracles.hpp --- independent brute-force models for the test suite
//
// Everything here is deliberately implemented from definitions, without
// touching the library's descent machinery: concrete permutation models of
// the small groups, word enumeration by exhaustive search, and the weak,
// Bruhat and sortedness relations straight from their subword definitions.

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <vector>

namespace oracles {

// A concrete group: elements are integer vectors, generators act by right
// multiplication.
struct Model {
  std::vector<int> id;
  std::vector<std::function<std::vector<int>(const std::vector<int>&)>> rmul;

  std::vector<int> eval(const std::vector<int>& word) const {
    std::vector<int> w = id;
    for (int s : word) w = rmul[s](w);
    return w;
  }
};

// Dihedral group I2(m), m >= 3, acting faithfully on the m-gon vertices.
inline Model dihedral_model(int m) {
  Model g;
  g.id.resize(m);
  for (int i = 0; i < m; ++i) g.id[i] = i;
  auto compose = [m](const std::vector<int>& a, std::vector<int> s) {
    std::vector<int> out(m);
    for (int i = 0; i < m; ++i) out[i] = a[s[i]];
    return out;
  };
  std::vector<int> s1(m), s2(m);
  for (int i = 0; i < m; ++i) {
    s1[i] = (m - i) % m;       // reflection fixing vertex 0
    s2[i] = (1 - i + m) % m;   // adjacent reflection
  }
  g.rmul = {[=](const std::vector<int>& a) { return compose(a, s1); },
            [=](const std::vector<int>& a) { return compose(a, s2); }};
  return g;
}

// Symmetric group S_n with adjacent transpositions (type A_{n-1}).
inline Model symmetric_model(int n) {
  Model g;
  g.id.resize(n);
  for (int i = 0; i < n; ++i) g.id[i] = i;
  for (int k = 0; k + 1 < n; ++k) {
    std::vector<int> t(n);
    for (int i = 0; i < n; ++i) t[i] = i;
    std::swap(t[k], t[k + 1]);
    g.rmul.push_back([t, n](const std::vector<int>& a) {
      std::vector<int> out(n);
      for (int i = 0; i < n; ++i) out[i] = a[t[i]];
      return out;
    });
  }
  return g;
}

// Signed permutations (type B_n): vectors of images of 1..n with signs.
// Generator 0 negates through the first coordinate; generator i >= 1 swaps
// coordinates i and i+1.
inline Model signed_model(int n) {
  Model g;
  for (int i = 1; i <= n; ++i) g.id.push_back(i);
  g.rmul.push_back([n](const std::vector<int>& a) {
    std::vector<int> out = a;
    out[0] = -out[0];
    return out;
  });
  for (int k = 0; k + 1 < n; ++k) {
    g.rmul.push_back([k](const std::vector<int>& a) {
      std::vector<int> out = a;
      std::swap(out[k], out[k + 1]);
      return out;
    });
  }
  return g;
}

// BFS word lengths for the whole (finite) group.
inline std::map<std::vector<int>, int> bfs_lengths(const Model& g) {
  std::map<std::vector<int>, int> len{{g.id, 0}};
  std::vector<std::vector<int>> frontier{g.id};
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& w : frontier)
      for (std::size_t s = 0; s < g.rmul.size(); ++s) {
        std::vector<int> v = g.rmul[s](w);
        if (len.emplace(v, len[w] + 1).second) next.push_back(v);
      }
    frontier = std::move(next);
  }
  return len;
}

// All words of the given length over the generators that evaluate to the
// target. With length = BFS length these are exactly the reduced words.
inline std::vector<std::vector<int>> words_evaluating(
    const Model& g, const std::vector<int>& target, int length) {
  std::vector<std::vector<int>> out;
  std::vector<int> word;
  std::function<void(const std::vector<int>&)> dfs =
      [&](const std::vector<int>& cur) {
        if (static_cast<int>(word.size()) == length) {
          if (cur == target) out.push_back(word);
          return;
        }
        for (std::size_t s = 0; s < g.rmul.size(); ++s) {
          word.push_back(static_cast<int>(s));
          dfs(g.rmul[s](cur));
          word.pop_back();
        }
      };
  dfs(g.id);
  return out;
}

// u <=_B w from the definition: some reduced word of w has a subword that
// is a reduced word of u.
inline bool bruhat_oracle(const Model& g,
                          const std::map<std::vector<int>, int>& len,
                          const std::vector<int>& u, const std::vector<int>& w) {
  int lu = len.at(u), lw = len.at(w);
  if (lu > lw) return false;
  for (const auto& word : words_evaluating(g, w, lw)) {
    for (std::uint32_t mask = 0; mask < (1u << lw); ++mask) {
      if (std::popcount(mask) != lu) continue;
      std::vector<int> sub;
      for (int i = 0; i < lw; ++i)
        if (mask >> i & 1) sub.push_back(word[i]);
      if (g.eval(sub) == u) return true;
    }
  }
  return false;
}

// u <=_R w from the definition: some reduced word of w has the prefix of
// length l(u) evaluating to u.
inline bool weak_oracle(const Model& g,
                        const std::map<std::vector<int>, int>& len,
                        const std::vector<int>& u, const std::vector<int>& w) {
  int lu = len.at(u), lw = len.at(w);
  if (lu > lw) return false;
  for (const auto& word : words_evaluating(g, w, lw)) {
    std::vector<int> prefix(word.begin(), word.begin() + lu);
    if (g.eval(prefix) == u) return true;
  }
  return false;
}

// Random accessible set system on {0..n-1}: a random family plus the empty
// set, trimmed to its accessible kernel (sets whose deletion chains reach
// the empty set survive).
template <typename Rng>
inline std::vector<std::uint64_t> random_accessible_family(int n, Rng& rng) {
  std::uint64_t full = (std::uint64_t{1} << n) - 1;
  std::vector<char> in(full + 1, 0);
  in[0] = 1;
  for (std::uint64_t a = 1; a <= full; ++a) in[a] = (rng() & 3) == 0;
  for (bool changed = true; changed;) {
    changed = false;
    for (std::uint64_t a = 1; a <= full; ++a) {
      if (!in[a]) continue;
      bool ok = false;
      for (std::uint64_t b = a; b && !ok; b &= b - 1)
        ok = in[a & ~(b & -b)];
      if (!ok) {
        in[a] = 0;
        changed = true;
      }
    }
  }
  std::vector<std::uint64_t> out;
  for (std::uint64_t a = 0; a <= full; ++a)
    if (in[a]) out.push_back(a);
  return out;
}

}  // namespace oracles
