// numbers.hpp --- exact arithmetic in the real cyclotomic field Q(2cos(pi/N))
//
// Scalars are polynomials with rational coefficients, reduced modulo the
// minimal polynomial of x0 = 2cos(pi/N). The zero test is exact (canonical
// form is the zero polynomial iff the value is zero); the sign of a nonzero
// value is decided by evaluating over a rational isolating interval for x0
// and refining with doubled effort until the interval excludes zero.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cassert>
#include <cmath>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace coxsort {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Largest supported N for the field modulus; desk scale never needs more.
inline constexpr int max_field_order = 60;

namespace detail {

// Dense integer polynomials, lowest degree first, no trailing zeros.
using ZPoly = std::vector<Int>;

inline void trim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division of integer polynomials; remainder must be zero.
inline ZPoly divide_exact(ZPoly num, const ZPoly& den) {
  assert(!den.empty() && den.back() != 0);
  int dd = static_cast<int>(den.size()) - 1;
  int dn = static_cast<int>(num.size()) - 1;
  while (dn >= 0 && num[dn] == 0) --dn;
  ZPoly q(std::max(dn - dd + 1, 0), Int(0));
  for (int k = dn - dd; k >= 0; --k) {
    Int c = num[dd + k] / den[dd];
    assert(c * den[dd] == num[dd + k]);
    q[k] = c;
    if (c != 0)
      for (int i = 0; i <= dd; ++i) num[k + i] -= c * den[i];
  }
  for (int i = 0; i < dd && i < static_cast<int>(num.size()); ++i)
    assert(num[i] == 0);
  return q;
}

// n-th cyclotomic polynomial via Phi_n = (z^n - 1) / prod_{d|n, d<n} Phi_d.
inline ZPoly cyclotomic(int n) {
  assert(n >= 1);
  ZPoly num(n + 1, Int(0));
  num[0] = -1;
  num[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    num = divide_exact(std::move(num), cyclotomic(d));
  }
  return num;
}

// Minimal polynomial of 2cos(pi/N), monic over Z.
//
// For N >= 2 write x0 = 2cos(2pi/n) with n = 2N. Phi_n is palindromic of
// even degree 2d, and z^d Psi(z + 1/z) = Phi_n(z) determines the minimal
// polynomial Psi of degree d = phi(n)/2. Unfolding uses the trace
// polynomials D_k (D_k(z + 1/z) = z^k + z^-k).
inline ZPoly min_poly_two_cos(int N) {
  assert(N >= 1);
  if (N == 1) return {Int(2), Int(1)};  // x0 = -2
  ZPoly phi = cyclotomic(2 * N);
  assert(phi.size() % 2 == 1);
  int d = static_cast<int>(phi.size() / 2);
  std::vector<ZPoly> trace(d + 1);
  trace[0] = {Int(2)};
  if (d >= 1) trace[1] = {Int(0), Int(1)};
  for (int k = 2; k <= d; ++k) {
    ZPoly t(trace[k - 1].size() + 1, Int(0));
    for (std::size_t i = 0; i < trace[k - 1].size(); ++i)
      t[i + 1] = trace[k - 1][i];
    for (std::size_t i = 0; i < trace[k - 2].size(); ++i)
      t[i] -= trace[k - 2][i];
    trim(t);
    trace[k] = std::move(t);
  }
  ZPoly psi(d + 1, Int(0));
  psi[0] = phi[d];
  for (int k = 1; k <= d; ++k) {
    assert(phi[d + k] == phi[d - k]);
    for (std::size_t i = 0; i < trace[k].size(); ++i)
      psi[i] += phi[d + k] * trace[k][i];
  }
  trim(psi);
  assert(static_cast<int>(psi.size()) == d + 1 && psi.back() == 1);
  return psi;
}

struct RatInterval {
  Rat lo, hi;
};

inline RatInterval operator+(const RatInterval& a, const RatInterval& b) {
  return {a.lo + b.lo, a.hi + b.hi};
}

inline RatInterval operator*(const RatInterval& a, const RatInterval& b) {
  Rat p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
  Rat lo = std::min(std::min(p1, p2), std::min(p3, p4));
  Rat hi = std::max(std::max(p1, p2), std::max(p3, p4));
  return {lo, hi};
}

}  // namespace detail

class ExactScalar;

// The coefficient field Q(2cos(pi/N)) with an exact sign oracle.
class NumberField : public std::enable_shared_from_this<NumberField> {
 public:
  static std::shared_ptr<const NumberField> make(int N) {
    if (N < 1 || N > max_field_order)
      throw std::domain_error("field order N out of supported range [1," +
                              std::to_string(max_field_order) + "]: " +
                              std::to_string(N));
    return std::shared_ptr<const NumberField>(new NumberField(N));
  }

  int order() const { return N_; }
  int degree() const { return static_cast<int>(psi_.size()) - 1; }

  const std::vector<Rat>& modulus() const { return psi_; }

  // Description of the modulus, e.g. "x^2-2 (N=4)".
  std::string describe() const;

  ExactScalar from_rational(const Rat& q) const;
  ExactScalar generator() const;  // the image of x, i.e. 2cos(pi/N)

  // 2cos(pi/m) as an element of this field; requires m | N.
  ExactScalar two_cos_pi_over(int m) const;

  // Canonical form: reduce modulo psi and trim. Coefficients are kept
  // dense of length <= degree().
  void reduce(std::vector<Rat>& c) const {
    int d = degree();
    for (int k = static_cast<int>(c.size()) - 1; k >= d; --k) {
      Rat lead = c[k];
      if (lead == 0) continue;
      for (int i = 0; i <= d; ++i) c[k - d + i] -= lead * psi_[i];
    }
    c.resize(std::min<std::size_t>(c.size(), d));
    while (!c.empty() && c.back() == 0) c.pop_back();
  }

  // Sign of the real number represented by canonical coefficients c.
  int sign(const std::vector<Rat>& c) const {
    if (c.empty()) return 0;
    if (degree() == 1) return c[0].sign();
    std::lock_guard<std::mutex> lock(iso_mutex_);
    int steps = 1;
    for (;;) {
      detail::RatInterval val = eval_interval(c);
      if (val.lo > 0) return 1;
      if (val.hi < 0) return -1;
      for (int i = 0; i < steps; ++i) refine_once();
      steps *= 2;
    }
  }

  // Double approximation of the field generator, for diagnostics only.
  double root_approx() const { return 2.0 * std::cos(M_PI / N_); }

 private:
  explicit NumberField(int N) : N_(N) {
    detail::ZPoly zpsi = detail::min_poly_two_cos(N);
    psi_.assign(zpsi.begin(), zpsi.end());
    if (degree() >= 2) {
      // Initial isolating bracket for the largest root of psi. The nearest
      // other root is 2cos(3pi/N), more than 0.02 below for N <= 60, so a
      // dyadic point 1e-4 under the double approximation is safely inside.
      double x0 = root_approx();
      const long den = 1L << 30;
      iso_lo_ = Rat(static_cast<long long>(std::floor((x0 - 1e-4) * den)), den);
      iso_hi_ = 2;
      if (!(eval_at(iso_lo_) < 0 && eval_at(iso_hi_) > 0))
        throw std::logic_error("failed to bracket the field generator");
    }
  }

  Rat eval_at(const Rat& x) const {
    Rat acc = 0;
    for (int i = static_cast<int>(psi_.size()) - 1; i >= 0; --i)
      acc = acc * x + psi_[i];
    return acc;
  }

  detail::RatInterval eval_interval(const std::vector<Rat>& c) const {
    detail::RatInterval x{iso_lo_, iso_hi_};
    detail::RatInterval acc{c.back(), c.back()};
    for (int i = static_cast<int>(c.size()) - 2; i >= 0; --i)
      acc = acc * x + detail::RatInterval{c[i], c[i]};
    return acc;
  }

  // One bisection step; psi has no rational roots when degree >= 2, so the
  // sign at the midpoint is never zero and the bracket invariant
  // psi(lo) < 0 < psi(hi) is preserved.
  void refine_once() const {
    Rat mid = (iso_lo_ + iso_hi_) / 2;
    if (eval_at(mid) > 0)
      iso_hi_ = mid;
    else
      iso_lo_ = mid;
  }

  int N_;
  std::vector<Rat> psi_;
  mutable std::mutex iso_mutex_;
  mutable Rat iso_lo_, iso_hi_;
};

// An element of Q(2cos(pi/N)) in canonical reduced form.
class ExactScalar {
 public:
  ExactScalar() = default;

  ExactScalar(std::shared_ptr<const NumberField> field, std::vector<Rat> c)
      : field_(std::move(field)), c_(std::move(c)) {
    field_->reduce(c_);
  }

  const std::shared_ptr<const NumberField>& field() const { return field_; }
  const std::vector<Rat>& coeffs() const { return c_; }

  bool is_zero() const { return c_.empty(); }
  int sign() const { return field_->sign(c_); }

  friend ExactScalar operator+(const ExactScalar& a, const ExactScalar& b) {
    assert(a.field_ == b.field_);
    std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()), Rat(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return ExactScalar(a.field_, std::move(c));
  }

  friend ExactScalar operator-(const ExactScalar& a, const ExactScalar& b) {
    assert(a.field_ == b.field_);
    std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()), Rat(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
    return ExactScalar(a.field_, std::move(c));
  }

  friend ExactScalar operator-(const ExactScalar& a) {
    std::vector<Rat> c(a.c_);
    for (auto& x : c) x = -x;
    return ExactScalar(a.field_, std::move(c));
  }

  friend ExactScalar operator*(const ExactScalar& a, const ExactScalar& b) {
    assert(a.field_ == b.field_);
    if (a.c_.empty() || b.c_.empty()) return ExactScalar(a.field_, {});
    std::vector<Rat> c(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        c[i + j] += a.c_[i] * b.c_[j];
    return ExactScalar(a.field_, std::move(c));
  }

  friend ExactScalar operator*(const ExactScalar& a, const Rat& q) {
    std::vector<Rat> c(a.c_);
    for (auto& x : c) x *= q;
    return ExactScalar(a.field_, std::move(c));
  }

  friend bool operator==(const ExactScalar& a, const ExactScalar& b) {
    return a.c_ == b.c_;
  }

  friend std::size_t hash_value(const ExactScalar& a) {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    std::hash<Rat> hr;
    for (const Rat& q : a.c_) h = h * 1099511628211ull + hr(q);
    return h;
  }

  std::string to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (i) os << (c_[i] >= 0 ? " + " : " - ");
      os << (i && c_[i] < 0 ? -c_[i] : c_[i]);
      if (i == 1) os << "*x";
      if (i > 1) os << "*x^" << i;
    }
    return os.str();
  }

 private:
  std::shared_ptr<const NumberField> field_;
  std::vector<Rat> c_;
};

inline ExactScalar NumberField::from_rational(const Rat& q) const {
  std::vector<Rat> c;
  if (q != 0) c.push_back(q);
  return ExactScalar(shared_from_this(), std::move(c));
}

inline ExactScalar NumberField::generator() const {
  return ExactScalar(shared_from_this(), {Rat(0), Rat(1)});
}

inline ExactScalar NumberField::two_cos_pi_over(int m) const {
  if (m == 1) return from_rational(-2);
  if (m == 2) return from_rational(0);
  if (m < 1 || N_ % m != 0)
    throw std::domain_error("2cos(pi/m) not in the field: m=" +
                            std::to_string(m));
  int k = N_ / m;
  // Trace recurrence: D_0 = 2, D_1 = x, D_k = x*D_{k-1} - D_{k-2},
  // so that D_k(2cos t) = 2cos(k t).
  ExactScalar prev = from_rational(2);
  if (k == 0) return prev;
  ExactScalar cur = generator();
  for (int i = 2; i <= k; ++i) {
    ExactScalar next = generator() * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

inline std::string NumberField::describe() const {
  std::ostringstream os;
  os << "minpoly(2cos(pi/" << N_ << ")) deg " << degree();
  return os.str();
}

}  // namespace coxsort
