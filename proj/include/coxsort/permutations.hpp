// permutations.hpp --- one-line permutations as the concrete model of type A
//
// Generators are the adjacent transpositions; left multiplication swaps
// values, right multiplication swaps positions. Used for cross-checks and
// to read elements given in one-line notation.

#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace coxsort {

struct Permutation {
  std::vector<int> p;  // p[i] = image of position i, values 0-based

  int size() const { return static_cast<int>(p.size()); }

  static Permutation identity(int n) {
    Permutation out;
    out.p.resize(n);
    std::iota(out.p.begin(), out.p.end(), 0);
    return out;
  }

  static Permutation from_one_line(std::vector<int> values) {
    int n = static_cast<int>(values.size());
    std::vector<char> seen(n, 0);
    for (int v : values) {
      if (v < 0 || v >= n || seen[v])
        throw std::invalid_argument("not a permutation in one-line notation");
      seen[v] = 1;
    }
    return Permutation{std::move(values)};
  }

  // "41532" -> the permutation sending 1->4, 2->1, ...; digits only.
  static Permutation parse_one_line(const std::string& text) {
    std::vector<int> values;
    for (char ch : text) {
      if (ch == ',' || ch == ' ') continue;
      if (!isdigit(static_cast<unsigned char>(ch)))
        throw std::invalid_argument("one-line permutation must be digits");
      values.push_back(ch - '1');
    }
    return from_one_line(std::move(values));
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;

  Permutation inverse() const {
    Permutation out = identity(size());
    for (int i = 0; i < size(); ++i) out.p[p[i]] = i;
    return out;
  }

  friend Permutation operator*(const Permutation& a, const Permutation& b) {
    Permutation out;
    out.p.resize(a.size());
    for (int i = 0; i < a.size(); ++i) out.p[i] = a.p[b.p[i]];
    return out;
  }

  int inversions() const {
    int inv = 0;
    for (int i = 0; i < size(); ++i)
      for (int j = i + 1; j < size(); ++j)
        if (p[i] > p[j]) ++inv;
    return inv;
  }

  // s_i swaps the values i, i+1 (0-based); a left descent exactly when
  // those values are out of order in the one-line word.
  bool left_descent(int i) const {
    int pos_i = -1, pos_i1 = -1;
    for (int k = 0; k < size(); ++k) {
      if (p[k] == i) pos_i = k;
      if (p[k] == i + 1) pos_i1 = k;
    }
    return pos_i1 < pos_i;
  }

  bool right_descent(int i) const { return p[i] > p[i + 1]; }

  Permutation left_mul_gen(int i) const {  // swap values i, i+1
    Permutation out = *this;
    for (int k = 0; k < size(); ++k) {
      if (out.p[k] == i)
        out.p[k] = i + 1;
      else if (out.p[k] == i + 1)
        out.p[k] = i;
    }
    return out;
  }

  Permutation right_mul_gen(int i) const {  // swap positions i, i+1
    Permutation out = *this;
    std::swap(out.p[i], out.p[i + 1]);
    return out;
  }

  // A reduced word (as 0-based generator indices) by stripping right
  // descents greedily.
  std::vector<int> reduced_word() const {
    Permutation cur = *this;
    std::vector<int> stripped;
    for (;;) {
      int d = -1;
      for (int i = 0; i + 1 < size() && d < 0; ++i)
        if (cur.right_descent(i)) d = i;
      if (d < 0) break;
      cur = cur.right_mul_gen(d);
      stripped.push_back(d);
    }
    std::reverse(stripped.begin(), stripped.end());
    return stripped;
  }

  std::string one_line() const {
    std::string out;
    for (int v : p) out += static_cast<char>('1' + v);
    return out;
  }
};

}  // namespace coxsort
