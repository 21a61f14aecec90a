#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "coxsort/coxeter.hpp"
#include "coxsort/io.hpp"
#include "coxsort/permutations.hpp"
#include "coxsort/sortables.hpp"
#include "oracles.hpp"

using namespace coxsort;

namespace {

std::shared_ptr<const CoxeterSystem> make(const std::string& preset) {
  return std::make_shared<const CoxeterSystem>(io::preset_matrix(preset));
}

}  // namespace

TEST_CASE("create_system validates the Coxeter matrix") {
  CHECK(make("A3")->field()->order() == 3);
  CHECK(make("I2:4")->field()->order() == 4);
  CHECK(make("H3")->field()->order() == 15);
  CHECK_THROWS_AS(CoxeterMatrix::from_entries({{1, 2}, {3, 1}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(CoxeterMatrix::from_entries({{2, 3}, {3, 1}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(CoxeterMatrix::from_entries({{1, 1}, {1, 1}}),
                  std::invalid_argument);
  CHECK_NOTHROW(CoxeterMatrix::from_entries({{1, 0}, {0, 1}}));  // infinite
}

TEST_CASE("the bilinear form is normalized on the diagonal") {
  auto sys = make("I2:5");
  CHECK(sys->bilinear(0, 0) == sys->field()->from_rational(1));
  CHECK(sys->bilinear(1, 1) == sys->field()->from_rational(1));
  CHECK(sys->bilinear(0, 1) == sys->bilinear(1, 0));
  auto inf = make("I2:inf");
  CHECK(inf->bilinear(0, 1) == inf->field()->from_rational(-1));
}

TEST_CASE("evaluate_word tracks lengths incrementally") {
  auto sys = make("I2:4");
  CHECK(sys->evaluate_word(std::vector<int>{}).length() == 0);
  CHECK(sys->evaluate_word({0, 0}).length() == 0);
  CHECK(sys->evaluate_word({0, 0}).is_identity());
  CHECK(sys->evaluate_word({0, 1, 0}).length() == 3);
  CHECK_THROWS_AS(sys->evaluate_word({0, 2}), std::out_of_range);

  // oracle: minimal word length reaching the same dihedral element is 3
  oracles::Model model = oracles::dihedral_model(4);
  auto lengths = oracles::bfs_lengths(model);
  CHECK(lengths.at(model.eval({0, 1, 0})) == 3);
}

TEST_CASE("lengths agree with the dihedral model on all of I2(m)") {
  for (int m : {3, 4, 5, 7}) {
    auto sys = make("I2:" + std::to_string(m));
    oracles::Model model = oracles::dihedral_model(m);
    auto lengths = oracles::bfs_lengths(model);
    // walk a few fixed words through both representations
    std::mt19937 rng(7 * m);
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<int> word;
      for (int i = std::uniform_int_distribution<>(0, 2 * m)(rng); i > 0; --i)
        word.push_back(rng() % 2);
      CHECK(sys->evaluate_word(word).length() == lengths.at(model.eval(word)));
    }
  }
}

TEST_CASE("left descents match Table-1 style permutation reasoning") {
  auto sys = make("A4");
  CHECK_FALSE(sys->is_left_descent(sys->identity(), 0));
  Permutation sigma = Permutation::parse_one_line("41532");
  GroupElement w = sys->evaluate_word(sigma.reduced_word());
  CHECK(w.length() == sigma.inversions());
  CHECK(sys->is_left_descent(w, 1));        // s2 strips 41532 -> 41523
  CHECK_FALSE(sys->is_left_descent(w, 0));  // s1 does not
}

TEST_CASE("is_reduced") {
  auto i24 = make("I2:4");
  CHECK(i24->is_reduced({0, 1, 0, 1}));
  CHECK_FALSE(i24->is_reduced({0, 0}));
  auto a3 = make("A3");
  CHECK(a3->is_reduced({0, 1, 2, 1, 0, 1}));
}

TEST_CASE("exchange_delete returns the smallest deletable index") {
  auto i24 = make("I2:4");
  CHECK(i24->exchange_delete(std::vector<int>{0}, 0) == 0);

  // brute force: deleting position 0 of (s2,s1,s2) gives s2*(s2 s1 s2)
  std::vector<int> word{1, 0, 1};
  GroupElement target = i24->left_mul(1, i24->evaluate_word(word));
  int idx = i24->exchange_delete(word, 1);
  CHECK(idx == 0);
  std::vector<int> deleted;
  for (int i = 0; i < 3; ++i)
    if (i != idx) deleted.push_back(word[i]);
  CHECK(i24->evaluate_word(deleted) == target);

  CHECK_THROWS_AS(i24->exchange_delete(std::vector<int>{0, 1}, 1),
                  std::domain_error);
  CHECK_THROWS_AS(i24->exchange_delete(std::vector<int>{0, 0}, 0),
                  std::invalid_argument);
}

TEST_CASE("exchange_delete agrees with trying every deletion") {
  auto a3 = make("A3");
  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<int> word;
    for (int i = 0; i < 5; ++i) word.push_back(rng() % 3);
    if (!a3->is_reduced(word)) continue;
    GroupElement w = a3->evaluate_word(word);
    for (int s = 0; s < 3; ++s) {
      if (!a3->is_left_descent(w, s)) continue;
      GroupElement target = a3->left_mul(s, w);
      int got = a3->exchange_delete(word, s);
      int smallest = -1;
      for (int i = 0; i < 5 && smallest < 0; ++i) {
        std::vector<int> rest;
        for (int j = 0; j < 5; ++j)
          if (j != i) rest.push_back(word[j]);
        if (a3->evaluate_word(rest) == target) smallest = i;
      }
      CHECK(got == smallest);
    }
  }
}

TEST_CASE("Bruhat and weak order against the subword/prefix definitions") {
  auto i24 = make("I2:4");
  GroupElement s1 = i24->generator(0);
  GroupElement s1s2 = i24->evaluate_word({0, 1});
  GroupElement s2s1 = i24->evaluate_word({1, 0});
  CHECK(i24->bruhat_leq(i24->identity(), s2s1));
  CHECK(i24->bruhat_leq(s1, s2s1));
  CHECK_FALSE(i24->bruhat_leq(s1s2, s2s1));
  CHECK(i24->weak_leq(i24->identity(), s2s1));
  CHECK(i24->weak_leq(s1, s1s2));
  CHECK_FALSE(i24->weak_leq(s1, s2s1));

  // exhaustively against the oracles on I2(4), I2(5) and S4
  struct Inst {
    std::shared_ptr<const CoxeterSystem> sys;
    oracles::Model model;
  };
  std::vector<Inst> instances{{make("I2:4"), oracles::dihedral_model(4)},
                              {make("I2:5"), oracles::dihedral_model(5)},
                              {make("A3"), oracles::symmetric_model(4)}};
  for (const auto& inst : instances) {
    auto lengths = oracles::bfs_lengths(inst.model);
    std::vector<std::vector<int>> elems;
    for (const auto& [e, l] : lengths) elems.push_back(e);
    auto lift = [&](const std::vector<int>& e) {
      auto words = oracles::words_evaluating(inst.model, e, lengths.at(e));
      REQUIRE_FALSE(words.empty());
      return inst.sys->evaluate_word(words.front());
    };
    for (const auto& u : elems)
      for (const auto& w : elems) {
        CAPTURE(u, w);
        CHECK(inst.sys->bruhat_leq(lift(u), lift(w)) ==
              oracles::bruhat_oracle(inst.model, lengths, u, w));
        CHECK(inst.sys->weak_leq(lift(u), lift(w)) ==
              oracles::weak_oracle(inst.model, lengths, u, w));
      }
  }
}

TEST_CASE("descent toggling and inverse length invariants") {
  auto a3 = make("A3");
  std::mt19937 rng(23);
  for (int trial = 0; trial < 80; ++trial) {
    std::vector<int> word;
    for (int i = std::uniform_int_distribution<>(0, 6)(rng); i > 0; --i)
      word.push_back(rng() % 3);
    GroupElement w = a3->evaluate_word(word);
    CHECK(a3->inverse(w).length() == w.length());
    CHECK(a3->multiply(w, a3->inverse(w)).is_identity());
    for (int s = 0; s < 3; ++s) {
      GroupElement sw = a3->left_mul(s, w);
      CHECK(std::abs(sw.length() - w.length()) == 1);
      CHECK(a3->is_left_descent(w, s) != a3->is_left_descent(sw, s));
    }
  }
}

TEST_CASE("weak order implies Bruhat order") {
  auto sys = make("A3");
  std::vector<GroupElement> all = enumerate_group(sys);
  REQUIRE(all.size() == 24);
  for (const auto& u : all)
    for (const auto& w : all)
      if (sys->weak_leq(u, w)) CHECK(sys->bruhat_leq(u, w));
}

TEST_CASE("type A descents agree with the inversion test") {
  auto a3 = make("A3");
  oracles::Model s4 = oracles::symmetric_model(4);
  auto lengths = oracles::bfs_lengths(s4);
  for (const auto& [perm, len] : lengths) {
    auto words = oracles::words_evaluating(s4, perm, len);
    GroupElement w = a3->evaluate_word(words.front());
    Permutation p = Permutation::from_one_line(perm);
    for (int i = 0; i < 3; ++i)
      CHECK(a3->is_left_descent(w, i) == p.left_descent(i));
  }

  auto a5 = make("A5");
  std::mt19937 rng(99);
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<int> one_line{0, 1, 2, 3, 4, 5};
    std::shuffle(one_line.begin(), one_line.end(), rng);
    Permutation p = Permutation::from_one_line(one_line);
    GroupElement w = a5->evaluate_word(p.reduced_word());
    CHECK(w.length() == p.inversions());
    for (int i = 0; i < 5; ++i)
      CHECK(a5->is_left_descent(w, i) == p.left_descent(i));
  }
}

TEST_CASE("gluing: reduced alpha*beta, alpha*s, s*beta force reduced alpha*s*beta") {
  for (const std::string& type : {std::string("A3"), std::string("B3")}) {
    auto sys = make(type);
    std::mt19937 rng(type[0]);
    int hits = 0;
    for (int trial = 0; trial < 4000 && hits < 200; ++trial) {
      auto random_word = [&](int max_len) {
        std::vector<int> w;
        for (int i = std::uniform_int_distribution<>(0, max_len)(rng); i > 0; --i)
          w.push_back(rng() % sys->rank());
        return w;
      };
      std::vector<int> alpha = random_word(4), beta = random_word(4);
      int s = rng() % sys->rank();
      auto concat = [](std::vector<int> a, const std::vector<int>& b) {
        a.insert(a.end(), b.begin(), b.end());
        return a;
      };
      std::vector<int> alpha_beta = concat(alpha, beta);
      std::vector<int> alpha_s = concat(alpha, {s});
      std::vector<int> s_beta = concat({s}, beta);
      if (!sys->is_reduced(alpha_beta) || !sys->is_reduced(alpha_s) ||
          !sys->is_reduced(s_beta))
        continue;
      ++hits;
      CHECK(sys->is_reduced(concat(alpha_s, beta)));
    }
    CHECK(hits >= 100);
  }
}

TEST_CASE("type B matrix model agrees with the signed permutation model") {
  auto b3 = make("B3");
  oracles::Model model = oracles::signed_model(3);
  auto lengths = oracles::bfs_lengths(model);
  CHECK(lengths.size() == 48);
  std::size_t distinct = 0;
  std::map<std::vector<int>, GroupElement> seen;
  for (const auto& [e, len] : lengths) {
    auto words = oracles::words_evaluating(model, e, len);
    REQUIRE_FALSE(words.empty());
    GroupElement w = b3->evaluate_word(words.front());
    CHECK(w.length() == len);
    if (seen.emplace(e, w).second) ++distinct;
  }
  CHECK(distinct == 48);
  // injectivity: distinct model elements give distinct matrices
  for (auto it = seen.begin(); it != seen.end(); ++it)
    for (auto jt = std::next(it); jt != seen.end(); ++jt)
      CHECK_FALSE(it->second == jt->second);
}
