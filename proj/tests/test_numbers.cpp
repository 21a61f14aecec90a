#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "coxsort/numbers.hpp"

using namespace coxsort;

namespace {

int euler_phi(int n) {
  int phi = n;
  for (int p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      phi -= phi / p;
    }
  if (n > 1) phi -= phi / n;
  return phi;
}

std::vector<Rat> rats(std::initializer_list<long> v) {
  std::vector<Rat> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("minimal polynomials of 2cos(pi/N) for small N") {
  CHECK(NumberField::make(1)->modulus() == rats({2, 1}));   // x + 2
  CHECK(NumberField::make(2)->modulus() == rats({0, 1}));   // x
  CHECK(NumberField::make(3)->modulus() == rats({-1, 1}));  // x - 1
  CHECK(NumberField::make(4)->modulus() == rats({-2, 0, 1}));
  CHECK(NumberField::make(5)->modulus() == rats({-1, -1, 1}));
  CHECK(NumberField::make(6)->modulus() == rats({-3, 0, 1}));
  CHECK(NumberField::make(12)->modulus() == rats({1, 0, -4, 0, 1}));
}

TEST_CASE("modulus degree and root for every supported N") {
  for (int N = 2; N <= max_field_order; ++N) {
    auto f = NumberField::make(N);
    CHECK(f->degree() == euler_phi(2 * N) / 2);
    // the double root must nearly annihilate the modulus; coefficients are
    // sizeable at large N, so only a relative tolerance is meaningful
    long double x = 2.0L * std::cos(static_cast<long double>(M_PI) / N);
    long double acc = 0, scale = 1;
    for (int i = f->degree(); i >= 0; --i) {
      long double c = static_cast<double>(f->modulus()[i]);
      acc = acc * x + c;
      scale = scale * 2 + std::abs(c);
    }
    CHECK(std::abs(acc) < 1e-12L * scale);
    CHECK(f->modulus().back() == 1);  // monic
  }
  CHECK_THROWS_AS(NumberField::make(0), std::domain_error);
  CHECK_THROWS_AS(NumberField::make(max_field_order + 1), std::domain_error);
}

TEST_CASE("golden ratio arithmetic in Q(2cos(pi/5))") {
  auto f = NumberField::make(5);
  ExactScalar phi = f->generator();
  CHECK(phi * phi == phi + f->from_rational(1));
  CHECK((phi * phi - phi - f->from_rational(1)).is_zero());
  CHECK(phi.sign() == 1);
  CHECK((phi - f->from_rational(1)).sign() == 1);
  CHECK((phi - f->from_rational(2)).sign() == -1);
  CHECK((-phi).sign() == -1);
  CHECK(f->from_rational(0).sign() == 0);
}

TEST_CASE("sign decisions needing interval refinement") {
  auto f = NumberField::make(4);  // sqrt(2)
  ExactScalar r = f->generator();
  CHECK((r * r).coeffs() == rats({2}));
  // tight rational brackets around sqrt(2) = 1.41421356237...
  CHECK((r - f->from_rational(Rat(141421356, 100000000))).sign() == 1);
  CHECK((r - f->from_rational(Rat(141421357, 100000000))).sign() == -1);
  // degree-1 field: everything is rational
  auto q = NumberField::make(3);
  CHECK(q->generator().coeffs() == rats({1}));
  CHECK((q->generator() - q->from_rational(1)).is_zero());
}

TEST_CASE("trace values 2cos(pi/m) inside a larger field") {
  auto f = NumberField::make(12);
  CHECK(f->two_cos_pi_over(1) == f->from_rational(-2));
  CHECK(f->two_cos_pi_over(2) == f->from_rational(0));
  CHECK(f->two_cos_pi_over(3) == f->from_rational(1));
  ExactScalar r2 = f->two_cos_pi_over(4), r3 = f->two_cos_pi_over(6);
  CHECK(r2 * r2 == f->from_rational(2));
  CHECK(r3 * r3 == f->from_rational(3));
  CHECK(r2.sign() == 1);
  CHECK(r3.sign() == 1);
  CHECK_THROWS_AS(f->two_cos_pi_over(5), std::domain_error);
  // 2cos(pi/12) = sqrt(2+sqrt(3))
  ExactScalar x = f->generator();
  CHECK(x * x == f->from_rational(2) + r3);
}

TEST_CASE("scalar hashing and equality follow canonical form") {
  auto f = NumberField::make(5);
  ExactScalar a = f->generator() * f->generator();
  ExactScalar b = f->generator() + f->from_rational(1);
  CHECK(a == b);
  CHECK(hash_value(a) == hash_value(b));
  CHECK(a.to_string() == b.to_string());
}
