// coxeter.hpp --- arbitrary Coxeter systems via the geometric representation
//
// A group element is stored as the exact matrix of its action on the simple
// root basis together with the matrix of its inverse and its length. Descent
// tests reduce to root-sign queries, and everything else (reduced words,
// Exchange, weak order, Bruhat order) is built on descents.

#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

#include "coxsort/numbers.hpp"

namespace coxsort {

// Off-diagonal Coxeter matrix value standing for m(s,t) = infinity.
inline constexpr int infinite_bond = 0;

struct CoxeterMatrix {
  std::vector<std::vector<int>> m;  // m[s][t]; infinite_bond encodes infinity

  int rank() const { return static_cast<int>(m.size()); }

  static CoxeterMatrix from_entries(std::vector<std::vector<int>> entries) {
    int n = static_cast<int>(entries.size());
    for (const auto& row : entries)
      if (static_cast<int>(row.size()) != n)
        throw std::invalid_argument("Coxeter matrix is not square");
    for (int s = 0; s < n; ++s) {
      if (entries[s][s] != 1)
        throw std::invalid_argument("Coxeter matrix diagonal must be 1");
      for (int t = s + 1; t < n; ++t) {
        if (entries[s][t] != entries[t][s])
          throw std::invalid_argument("Coxeter matrix is not symmetric");
        if (entries[s][t] != infinite_bond && entries[s][t] < 2)
          throw std::invalid_argument(
              "off-diagonal Coxeter matrix entries must be >= 2 or infinity");
      }
    }
    return CoxeterMatrix{std::move(entries)};
  }

  // lcm of the finite off-diagonal entries; 1 when there are none. Bonds of
  // 2 give 2cos(pi/2) = 0 and infinite bonds give -1, both rational, so
  // neither enlarges the field.
  int field_order() const {
    long long N = 1;
    for (int s = 0; s < rank(); ++s)
      for (int t = s + 1; t < rank(); ++t)
        if (m[s][t] != infinite_bond && m[s][t] > 2) {
          N = std::lcm(N, static_cast<long long>(m[s][t]));
          if (N > max_field_order) return static_cast<int>(N);
        }
    return static_cast<int>(N);
  }
};

class CoxeterSystem;

class GroupElement {
 public:
  int length() const { return length_; }
  bool is_identity() const { return length_ == 0; }

  friend bool operator==(const GroupElement& a, const GroupElement& b) {
    return a.mat_ == b.mat_;
  }

  friend std::size_t hash_value(const GroupElement& a) {
    std::size_t h = 14695981039346656037ull;
    for (const ExactScalar& e : a.mat_) h = h * 1099511628211ull ^ hash_value(e);
    return h;
  }

 private:
  friend class CoxeterSystem;
  std::vector<ExactScalar> mat_, inv_;  // row-major n x n
  int length_ = 0;
};

struct ElementHash {
  std::size_t operator()(const GroupElement& w) const { return hash_value(w); }
};

// Exact representation of (W,S). Immutable; elements are plain values and
// all operations are const member functions, so concurrent use is safe.
class CoxeterSystem {
 public:
  explicit CoxeterSystem(CoxeterMatrix matrix)
      : matrix_(std::move(matrix)),
        n_(matrix_.rank()),
        field_(NumberField::make(matrix_.field_order())) {
    // Reflection action on simple roots: s(a_t) = a_t - 2B(a_s,a_t) a_s
    // with 2B(a_s,a_t) = -2cos(pi/m(s,t)) for finite bonds and -2 for
    // infinite ones. All matrix entries stay in Z[2cos(pi/N)].
    identity_.assign(n_ * n_, zero());
    for (int i = 0; i < n_; ++i) identity_[i * n_ + i] = one();
    gen_rows_.resize(n_);
    for (int s = 0; s < n_; ++s) {
      gen_rows_[s].resize(n_);
      for (int t = 0; t < n_; ++t) {
        if (t == s) {
          gen_rows_[s][t] = field_->from_rational(-1);
        } else {
          int m = matrix_.m[s][t];
          gen_rows_[s][t] = m == infinite_bond ? field_->from_rational(2)
                                               : field_->two_cos_pi_over(m);
        }
      }
    }
  }

  int rank() const { return n_; }
  const CoxeterMatrix& matrix() const { return matrix_; }
  int bond(int s, int t) const { return matrix_.m[s][t]; }
  const std::shared_ptr<const NumberField>& field() const { return field_; }

  // B(a_s, a_t) = -cos(pi/m(s,t)), with B = -1 on infinite bonds.
  ExactScalar bilinear(int s, int t) const {
    if (s == t) return one();
    return gen_rows_[s][t] * Rat(-1, 2);
  }

  GroupElement identity() const {
    GroupElement e;
    e.mat_ = identity_;
    e.inv_ = identity_;
    e.length_ = 0;
    return e;
  }

  GroupElement generator(int s) const {
    check_gen(s);
    return right_mul(identity(), s);
  }

  GroupElement inverse(const GroupElement& w) const {
    GroupElement r;
    r.mat_ = w.inv_;
    r.inv_ = w.mat_;
    r.length_ = w.length_;  // l(w) = l(w^-1)
    return r;
  }

  // w * s, with the length maintained through a right descent test.
  GroupElement right_mul(const GroupElement& w, int s) const {
    check_gen(s);
    GroupElement r;
    r.length_ = w.length_ + (is_right_descent(w, s) ? -1 : 1);
    r.mat_ = mul_gen_right(w.mat_, s);
    r.inv_ = mul_gen_left(s, w.inv_);
    return r;
  }

  GroupElement left_mul(int s, const GroupElement& w) const {
    check_gen(s);
    GroupElement r;
    r.length_ = w.length_ + (is_left_descent(w, s) ? -1 : 1);
    r.mat_ = mul_gen_left(s, w.mat_);
    r.inv_ = mul_gen_right(w.inv_, s);
    return r;
  }

  // General product; the length of the result is recovered by a descent
  // walk to the identity.
  GroupElement multiply(const GroupElement& u, const GroupElement& v) const {
    GroupElement r;
    r.mat_ = mat_product(u.mat_, v.mat_);
    r.inv_ = mat_product(v.inv_, u.inv_);
    r.length_ = length_by_walk(r.inv_);
    return r;
  }

  // True iff l(sw) = l(w) - 1, i.e. w^-1(a_s) is a negative root.
  bool is_left_descent(const GroupElement& w, int s) const {
    check_gen(s);
    return column_is_negative_root(w.inv_, s);
  }

  // True iff l(ws) = l(w) - 1, i.e. w(a_s) is a negative root.
  bool is_right_descent(const GroupElement& w, int s) const {
    check_gen(s);
    return column_is_negative_root(w.mat_, s);
  }

  // Smallest left descent, or -1 for the identity.
  int first_left_descent(const GroupElement& w) const {
    for (int s = 0; s < n_; ++s)
      if (is_left_descent(w, s)) return s;
    return -1;
  }

  std::vector<int> left_descent_set(const GroupElement& w) const {
    std::vector<int> out;
    for (int s = 0; s < n_; ++s)
      if (is_left_descent(w, s)) out.push_back(s);
    return out;
  }

  GroupElement evaluate_word(std::span<const int> word) const {
    GroupElement w = identity();
    for (int s : word) w = right_mul(w, s);
    return w;
  }

  GroupElement evaluate_word(const std::vector<int>& word) const {
    return evaluate_word(std::span<const int>(word));
  }

  bool is_reduced(std::span<const int> word) const {
    return evaluate_word(word).length() ==
           static_cast<int>(word.size());
  }

  bool is_reduced(const std::vector<int>& word) const {
    return is_reduced(std::span<const int>(word));
  }

  // Exchange: for reduced `word` and a left descent s of its element,
  // returns the smallest position (0-based) whose deletion yields a word
  // for s * <word>.
  int exchange_delete(std::span<const int> word, int s) const {
    check_gen(s);
    if (!is_reduced(word))
      throw std::invalid_argument("exchange_delete: word is not reduced");
    GroupElement w = evaluate_word(word);
    if (!is_left_descent(w, s))
      throw std::domain_error("exchange_delete: s is not a left descent");
    std::vector<ExactScalar> target = mul_gen_left(s, w.mat_);
    int k = static_cast<int>(word.size());
    // prefix[i] = product of the first i letters, suffix[i] = product from i.
    std::vector<std::vector<ExactScalar>> suffix(k + 1);
    suffix[k] = identity_;
    for (int i = k - 1; i >= 0; --i)
      suffix[i] = mul_gen_left(word[i], suffix[i + 1]);
    std::vector<ExactScalar> prefix = identity_;
    for (int i = 0; i < k; ++i) {
      if (mat_product(prefix, suffix[i + 1]) == target) return i;
      prefix = mul_gen_right(prefix, word[i]);
    }
    throw std::logic_error("exchange_delete: Exchange property violated");
  }

  // u <=_B w via the Lifting property: strip the smallest left descent of
  // w, following u down when it shares the descent.
  bool bruhat_leq(GroupElement u, GroupElement w) const {
    for (;;) {
      if (u.length() == 0) return true;
      if (u.length() > w.length()) return false;
      int s = first_left_descent(w);
      if (is_left_descent(u, s)) u = left_mul(s, u);
      w = left_mul(s, w);
    }
  }

  // u <=_R w (right weak order): l(u) + l(u^-1 w) = l(w).
  bool weak_leq(const GroupElement& u, const GroupElement& w) const {
    if (u.length() > w.length()) return false;
    GroupElement rest = multiply(inverse(u), w);
    return u.length() + rest.length() == w.length();
  }

  bool is_identity_matrix(const GroupElement& w) const {
    return w.mat_ == identity_;
  }

 private:
  ExactScalar zero() const { return field_->from_rational(0); }
  ExactScalar one() const { return field_->from_rational(1); }

  void check_gen(int s) const {
    if (s < 0 || s >= n_)
      throw std::out_of_range("generator index out of range: " +
                              std::to_string(s));
  }

  // A * sigma_s differs from A only through column mixing by row s of
  // sigma_s: C[i][j] = (j==s ? 0 : A[i][j]) + A[i][s] * row_s[j].
  std::vector<ExactScalar> mul_gen_right(const std::vector<ExactScalar>& a,
                                         int s) const {
    std::vector<ExactScalar> c(a);
    for (int i = 0; i < n_; ++i) {
      const ExactScalar& ais = a[i * n_ + s];
      if (ais.is_zero()) continue;
      for (int j = 0; j < n_; ++j) {
        if (j == s)
          c[i * n_ + j] = ais * gen_rows_[s][j];
        else
          c[i * n_ + j] = a[i * n_ + j] + ais * gen_rows_[s][j];
      }
    }
    return c;
  }

  // sigma_s * A replaces row s by row_s . A.
  std::vector<ExactScalar> mul_gen_left(int s,
                                        const std::vector<ExactScalar>& a) const {
    std::vector<ExactScalar> c(a);
    for (int j = 0; j < n_; ++j) {
      ExactScalar acc = zero();
      for (int k = 0; k < n_; ++k) {
        if (gen_rows_[s][k].is_zero()) continue;
        acc = acc + gen_rows_[s][k] * a[k * n_ + j];
      }
      c[s * n_ + j] = acc;
    }
    return c;
  }

  std::vector<ExactScalar> mat_product(const std::vector<ExactScalar>& a,
                                       const std::vector<ExactScalar>& b) const {
    std::vector<ExactScalar> c(n_ * n_, zero());
    for (int i = 0; i < n_; ++i)
      for (int k = 0; k < n_; ++k) {
        const ExactScalar& aik = a[i * n_ + k];
        if (aik.is_zero()) continue;
        for (int j = 0; j < n_; ++j)
          c[i * n_ + j] = c[i * n_ + j] + aik * b[k * n_ + j];
      }
    return c;
  }

  // Negative root test on column s: all coordinates <= 0, not all zero.
  bool column_is_negative_root(const std::vector<ExactScalar>& m, int s) const {
    bool nonzero = false;
    for (int i = 0; i < n_; ++i) {
      int sg = m[i * n_ + s].sign();
      if (sg > 0) return false;
      if (sg < 0) nonzero = true;
    }
    return nonzero;
  }

  // Length of the element with inverse matrix `inv`, by walking descents
  // down to the identity.
  int length_by_walk(std::vector<ExactScalar> inv) const {
    int len = 0;
    std::vector<ExactScalar> mat;  // untracked; only inv drives descents
    for (;;) {
      int s = -1;
      for (int t = 0; t < n_ && s < 0; ++t)
        if (column_is_negative_root(inv, t)) s = t;
      if (s < 0) return len;  // no left descent: the identity
      inv = mul_gen_right(inv, s);
      ++len;
      if (len > (1 << 24))
        throw std::logic_error("descent walk failed to terminate");
    }
  }

  CoxeterMatrix matrix_;
  int n_;
  std::shared_ptr<const NumberField> field_;
  std::vector<ExactScalar> identity_;
  std::vector<std::vector<ExactScalar>> gen_rows_;  // row s of sigma_s
};

}  // namespace coxsort
