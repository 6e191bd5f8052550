#include <doctest.h>

#include <random>
#include <set>
#include <stdexcept>

#include "factorlab/brute_force.hpp"
#include "factorlab/invariants.hpp"
#include "support.hpp"

using namespace factorlab;
using factorlab::test::w;

namespace {

  // U_k from the naive explorer: the union of L(a) over all words a of
  // length k.
  std::set<std::size_t> naive_union(Presentation const& p,
                                    std::size_t         k,
                                    std::size_t         max_len) {
    std::vector<Letter> alphabet;
    for (std::size_t i = 0; i < p.generator_count(); ++i) {
      alphabet.push_back(static_cast<Letter>(i));
    }
    std::set<std::size_t> out;
    for (auto const& a : words_of_length(alphabet, k)) {
      auto cls = brute_force_class(a, p, max_len);
      REQUIRE(cls.exact);
      for (auto n : test::naive_lengths(cls)) {
        out.insert(n);
      }
    }
    return out;
  }

  LengthSet ls(std::vector<std::size_t> v, bool exact = true) {
    return LengthSet{std::move(v), exact};
  }

}  // namespace

TEST_SUITE("invariants") {
  TEST_CASE("length and distance sets") {
    auto m1 = test::m1();
    auto l  = length_set(w(m1, "x x y"), m1, ExplorationBudget::for_seed(3));
    CHECK(l == ls({3, 4, 5}));
    CHECK(distance_set(l) == DistanceSet{{1}, false});

    CHECK(distance_set(ls({2, 5, 6, 9})) == DistanceSet{{1, 3}, false});
    CHECK(distance_set(ls({4})).values.empty());
    CHECK(distance_set(ls({1, 3}, false)).advisory);
  }

  TEST_CASE("length sets agree with the naive explorer") {
    auto m2 = test::m2(2);
    for (auto text : {"x y", "x x y", "x y y", "y x x y", "x x x y"}) {
      auto a     = w(m2, text);
      auto naive = brute_force_class(a, m2, 20);
      REQUIRE(naive.exact);
      auto l = length_set(a, m2, ExplorationBudget::for_seed(a.length()));
      CHECK(l.exact);
      CHECK(l.values == test::naive_lengths(naive));
    }
  }

  TEST_CASE("elasticity") {
    CHECK(elasticity_of(ls({3, 4, 5})).to_string() == "5/3");
    CHECK(elasticity_of(ls({0})).to_string() == "0");
    CHECK(elasticity_of(ls({0, 2, 3})).value() == Rational(3, 2));
    CHECK(elasticity_of(ls({4})).value() == Rational(1));
    CHECK(elasticity_of(ls({1, 3}, false)).to_string() == "3+");
    CHECK(elasticity_of(ls({1, 3}, false)).lower_bound_only());

    CHECK(Elasticity::zero() < Elasticity::finite(Rational(1)));
    CHECK(Elasticity::finite(Rational(5, 3)) < Elasticity::finite(Rational(2)));
    CHECK(Elasticity::finite(Rational(100)) < Elasticity::infinite());
    CHECK(Elasticity::finite(Rational(2), true) == Elasticity::finite(Rational(2)));
    CHECK(Elasticity::infinite().to_string() == "inf");
  }

  TEST_CASE("k ranges") {
    CHECK(KRange::parse("1..4") == KRange{1, 4});
    CHECK(KRange::parse("3") == KRange{3, 3});
    CHECK(KRange::parse("4..2").empty());
    CHECK_THROWS_AS((void) KRange::parse("a..2"), std::invalid_argument);
    CHECK_THROWS_AS((void) KRange::parse("1...2"), std::invalid_argument);
    CHECK_THROWS_AS((void) KRange::parse(""), std::invalid_argument);
  }

  TEST_CASE("reduced alphabet") {
    auto e = parse_presentation("gens: x a b y\nrel: a a = b b b b\n");
    CHECK(reduced_alphabet(e) == std::vector<Letter>{0, 1, 2});
    CHECK(reduced_alphabet(test::m1()) == std::vector<Letter>{0, 1, 2});
    CHECK(reduced_alphabet(test::free_monoid(3)) == std::vector<Letter>{0});
  }

  TEST_CASE("unions agree with naive unions") {
    BudgetPolicy policy;
    for (auto const& p : {test::m1(), test::m2(2)}) {
      auto prof = unions_profile(p, {1, 3}, policy);
      REQUIRE(prof.exact());
      REQUIRE(prof.rows.size() == 3);
      for (auto const& row : prof.rows) {
        auto naive = naive_union(p, row.k, 30);
        CHECK(std::vector<std::size_t>(naive.begin(), naive.end()) == row.values);
      }
    }
    auto m2 = unions_profile(test::m2(2), {3, 3}, policy);
    CHECK(m2.row(3)->rho() == 6);
    CHECK(m2.row(3)->contains(3));
    CHECK(m2.row(3)->contains(4));
    CHECK(m2.row(2) == nullptr);
  }

  TEST_CASE("unions serial and parallel agree") {
    BudgetPolicy policy;
    auto a = unions_profile(test::m3(2), {1, 4}, policy, Execution::serial);
    auto b = unions_profile(test::m3(2), {1, 4}, policy, Execution::parallel);
    REQUIRE(a.rows.size() == b.rows.size());
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
      CHECK(a.rows[i].values == b.rows[i].values);
      CHECK(a.rows[i].exact == b.rows[i].exact);
    }
  }

  TEST_CASE("unions reject empty ranges") {
    CHECK_THROWS_AS((void) unions_profile(test::m1(), {3, 2}, {}),
                    std::invalid_argument);
  }

  TEST_CASE("system elasticity") {
    BudgetPolicy policy;
    auto m1   = test::m1();
    auto prof = unions_profile(m1, {1, 4}, policy);
    std::vector<LengthSet> witnesses;
    for (auto text : {"x y", "x x y", "x x y y"}) {
      witnesses.push_back(length_set(w(m1, text), m1, ExplorationBudget::for_seed(4)));
    }
    auto se = system_elasticity(prof, witnesses);
    CHECK(se.accepted.verdict == AcceptedElasticity::Verdict::no_evidence);
    CHECK(se.lower_bound.value() == Rational(7, 4));

    auto with_sup = system_elasticity(prof, witnesses, Rational(2));
    CHECK(with_sup.accepted.verdict == AcceptedElasticity::Verdict::no_evidence);

    auto f     = test::free_monoid(2);
    auto fprof = unions_profile(f, {1, 4}, policy);
    std::vector<LengthSet> fw{ls({1})};
    auto fe = system_elasticity(fprof, fw);
    CHECK(fe.accepted.verdict == AcceptedElasticity::Verdict::yes);
    CHECK(fe.lower_bound.value() == Rational(1));
  }

  TEST_CASE("full elasticity witness") {
    auto         e = parse_presentation("gens: x a b\nrel: a a = b b b b\n");
    BudgetPolicy policy;
    auto         c = w(e, "a a");

    auto half = full_elasticity_witness(e, 0, c, Rational(3, 2), policy);
    CHECK(half.word == w(e, "x x a a"));
    CHECK(half.pad == 2);
    CHECK(half.power == 1);
    REQUIRE(half.verified.has_value());
    CHECK(half.verified->value() == Rational(3, 2));
    auto naive = brute_force_class(half.word, e, 20);
    CHECK(test::naive_lengths(naive) == std::vector<std::size_t>{4, 6});

    auto one = full_elasticity_witness(e, 0, c, Rational(1), policy);
    REQUIRE(one.verified.has_value());
    CHECK(one.verified->value() == Rational(1));

    CHECK_THROWS_AS((void) full_elasticity_witness(e, 1, c, Rational(3, 2), policy),
                    std::invalid_argument);
    CHECK_THROWS_AS((void) full_elasticity_witness(e, 0, c, Rational(1, 2), policy),
                    std::invalid_argument);
    CHECK_THROWS_AS((void) full_elasticity_witness(e, 0, c, Rational(3), policy),
                    std::invalid_argument);
  }

  TEST_CASE("shift by a free generator") {
    auto         e = parse_presentation("gens: x a b\nrel: a a = b b b b\n");
    std::mt19937 rng(11);
    for (int i = 0; i < 30; ++i) {
      auto a  = test::random_word(rng, 3, 0, 5);
      auto la = length_set(a, e, ExplorationBudget::for_seed(a.length() + 1));
      auto xa = length_set(w(e, "x") * a, e,
                           ExplorationBudget::for_seed(a.length() + 1));
      REQUIRE(la.exact);
      REQUIRE(xa.exact);
      REQUIRE(la.values.size() == xa.values.size());
      for (std::size_t j = 0; j < la.values.size(); ++j) {
        CHECK(xa.values[j] == la.values[j] + 1);
      }
    }
  }

  TEST_CASE("sumsets are contained in the length set of the product") {
    std::mt19937 rng(5);
    for (auto const& p : {test::m1(), test::m2(2)}) {
      for (int i = 0; i < 25; ++i) {
        auto a  = test::random_word(rng, p.generator_count(), 1, 3);
        auto b  = test::random_word(rng, p.generator_count(), 1, 3);
        auto la = length_set(a, p, ExplorationBudget::for_seed(a.length()));
        auto lb = length_set(b, p, ExplorationBudget::for_seed(b.length()));
        auto ab = a * b;
        auto naive = brute_force_class(ab, p, 40);
        if (!la.exact || !lb.exact || !naive.exact) {
          continue;
        }
        auto lab = test::naive_lengths(naive);
        for (auto u : la.values) {
          for (auto v : lb.values) {
            CHECK(std::binary_search(lab.begin(), lab.end(), u + v));
          }
        }
      }
    }
  }

  TEST_CASE("max elasticity of length") {
    BudgetPolicy policy;
    auto         m1   = test::m1();
    auto         scan = max_elasticity_of_length(m1, 3, policy);
    CHECK(scan.exact);
    CHECK(scan.best.value() == Rational(5, 3));
    for (auto const& a : scan.argmax) {
      auto naive = brute_force_class(a, m1, 20);
      auto l     = test::naive_lengths(naive);
      CHECK(Rational(static_cast<long long>(l.back()),
                     static_cast<long long>(l.front()))
            == Rational(5, 3));
    }
  }
}
