#include <doctest.h>

#include <stdexcept>

#include "factorlab/structure.hpp"
#include "support.hpp"

using namespace factorlab;
using factorlab::test::w;
using V = ProbeVerdict::Verdict;

namespace {

  UnionsProfile synthetic(std::vector<std::vector<std::size_t>> rows,
                          std::size_t                           lo = 1) {
    UnionsProfile prof;
    prof.range = {lo, lo + rows.size() - 1};
    for (std::size_t i = 0; i < rows.size(); ++i) {
      prof.rows.push_back(UnionsRow{lo + i, rows[i], true, 1});
    }
    return prof;
  }

  bool replays(std::vector<TransitionStep> const& path, Presentation const& p) {
    for (std::size_t i = 0; i < path.size(); ++i) {
      if (!is_valid_step(path[i], p) || (i > 0 && path[i - 1].to != path[i].from)) {
        return false;
      }
    }
    return true;
  }

}  // namespace

TEST_SUITE("structure") {
  TEST_CASE("one-relation analysis") {
    CHECK(one_relation_analysis(test::m1()).d == 1);
    CHECK(one_relation_analysis(parse_presentation("gens: x y\nrel: x y = y x\n"))
              .half_factorial());
    CHECK(one_relation_analysis(test::m2(2)).d == 1);
    CHECK(one_relation_analysis(test::m2(3)).d == 2);
    CHECK_THROWS_AS((void) one_relation_analysis(test::m3(2)), std::invalid_argument);
    CHECK_THROWS_AS((void) one_relation_analysis(test::free_monoid(2)),
                    std::invalid_argument);
  }

  TEST_CASE("arithmetic progressions") {
    CHECK(is_arithmetic_progression({3, 4, 5}, 1));
    CHECK(is_arithmetic_progression({3, 5, 7}, 2));
    CHECK(is_arithmetic_progression({4}, 3));
    CHECK_FALSE(is_arithmetic_progression({3, 5, 6}, 2));
    CHECK_FALSE(is_arithmetic_progression({3, 5}, 1));
  }

  TEST_CASE("delta subgroup") {
    CHECK(delta_subgroup(test::m3(2)).d == 1);
    CHECK(delta_subgroup(test::free_monoid(3)).d == 0);
    auto p = parse_presentation(
        "gens: a b c d\nrel: a a a = b b b b b\nrel: c c = d d d d d d\n");
    CHECK(delta_subgroup(p).d == 2);
    CHECK(max_relation_delta(p) == 4);
    CHECK(delta_subgroup(parse_presentation("gens: x y\nrel: x y = y x\n")).d == 0);
  }

  TEST_CASE("delta bound check") {
    BudgetPolicy policy;
    auto         m1 = test::m1();
    std::vector<Word> s1{w(m1, "x x y y")};
    auto v1 = delta_bound_check(m1, s1, policy);
    CHECK(v1.verdict == V::holds);

    auto f = test::free_monoid(2);
    std::vector<Word> sf{w(f, "g0 g1 g0")};
    CHECK(delta_bound_check(f, sf, policy).verdict == V::holds);

    auto m23 = test::m2(3);
    std::vector<Word> s3{w(m23, "x x y")};
    CHECK(delta_bound_check(m23, s3, policy).verdict == V::holds);

    auto na = parse_presentation("gens: x y\nrel: y = x y x\n");
    std::vector<Word> sn{w(na, "y")};
    CHECK(delta_bound_check(na, sn, policy).verdict == V::unknown_at_bound);
  }

  TEST_CASE("adyan check") {
    CHECK(adyan_check(test::m1()).adyan);
    CHECK(adyan_check(test::m2(2)).adyan);
    CHECK(adyan_check(test::m3(3)).adyan);
    CHECK(adyan_check(parse_presentation("gens: x y\nrel: y = x y x\n")).adyan);
    auto unit = adyan_check(parse_presentation("gens: x\nrel: x = 1\n"));
    CHECK_FALSE(unit.adyan);
    CHECK(unit.reason == "empty relation side");
    auto loop = adyan_check(parse_presentation("gens: x y\nrel: x y = x x\n"));
    CHECK_FALSE(loop.adyan);
    CHECK(loop.reason == "left graph has a self-loop");
    auto cyc = adyan_check(parse_presentation(
        "gens: a b c\nrel: a = b\nrel: b c = c b\nrel: c a = a c\n"));
    CHECK_FALSE(cyc.adyan);
  }

  TEST_CASE("normalizing probe") {
    BudgetPolicy policy;
    auto         hf   = parse_presentation("gens: x y\nrel: x y = y x\n");
    auto         norm = normalizing_probe(hf, policy);
    CHECK(norm.verdict.verdict == V::holds);
    CHECK(norm.verdict.definitive);
    REQUIRE(norm.table.complete());
    CHECK(norm.table.at(0, 1)->z == 1);
    CHECK(replays(norm.table.at(0, 1)->certificate, hf));

    auto m1 = normalizing_probe(test::m1(), policy);
    CHECK(m1.verdict.verdict == V::fails);
    REQUIRE(m1.verdict.witness.has_value());

    auto m2 = normalizing_probe(test::m2(2), policy);
    CHECK(m2.verdict.verdict == V::fails);
    CHECK_FALSE(m2.table.at(0, 1).has_value());

    // With a complete table the normal form sorts letters.
    auto nb = ExplorationBudget::for_seed(3);
    CHECK(nu_normal_form(Word{}, hf, norm.table, nb) == Word{});
    CHECK(nu_normal_form(w(hf, "y x"), hf, norm.table, nb) == w(hf, "x y"));
    CHECK(nu_normal_form(w(hf, "x y x"), hf, norm.table, nb) == w(hf, "x x y"));
  }

  TEST_CASE("atom probe") {
    BudgetPolicy policy;
    auto         f = test::free_monoid(2);
    auto         a = atom_probe(f, 0, policy);
    CHECK(a.verdict == V::holds);
    CHECK(a.definitive);

    auto na = parse_presentation("gens: x y\nrel: y = x y x\n");
    auto y  = atom_probe(na, 1, policy);
    CHECK(y.verdict == V::fails);
    REQUIRE(y.witness.has_value());
    CHECK(y.witness->words.size() >= 2);

    auto m3 = test::m3(2);
    for (Letter x = 0; x < 4; ++x) {
      auto v = atom_probe(m3, x, policy);
      CHECK(v.verdict == V::holds);
      CHECK(v.definitive);
    }

    auto unit = parse_presentation("gens: x\nrel: x x = 1\n");
    CHECK(atom_probe(unit, 0, policy).verdict != V::holds);
  }

  TEST_CASE("irredundancy probe") {
    BudgetPolicy policy;
    auto m1 = irredundancy_probe(test::m1(), policy);
    CHECK(m1.verdict == V::holds);

    auto red = parse_presentation("gens: x y\nrel: y = x x\n");
    auto r   = irredundancy_probe(red, policy);
    CHECK(r.verdict == V::fails);
    REQUIRE(r.witness.has_value());
    CHECK(replays(r.witness->certificate, red));

    auto f = irredundancy_probe(test::free_monoid(3), policy);
    CHECK(f.verdict == V::holds);
    CHECK(f.definitive);
  }

  TEST_CASE("acyclicity and reducedness") {
    BudgetPolicy policy;
    auto         m2 = test::m2(2);
    std::vector<Word> samples;
    for (std::size_t k = 1; k <= 4; ++k) {
      for (auto const& a : words_of_length(std::vector<Letter>{0, 1}, k)) {
        samples.push_back(a);
      }
    }
    CHECK(acyclicity_reducedness_probe(m2, samples, policy).verdict == V::holds);

    auto unit = parse_presentation("gens: x\nrel: x x = 1\n");
    auto r    = reducedness_probe(unit);
    CHECK(r.verdict == V::fails);
    CHECK(r.definitive);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->description == "x·x =_M 1");
    CHECK(replays(r.witness->certificate, unit));
    CHECK(reducedness_probe(test::m1()).verdict == V::holds);

    auto na = parse_presentation("gens: x y\nrel: y = x y x\n");
    std::vector<Word> ns{w(na, "y")};
    auto c = acyclicity_probe(na, ns, policy);
    CHECK(c.verdict == V::fails);
    REQUIRE(c.witness.has_value());
  }

  TEST_CASE("structure verifier on synthetic profiles") {
    // U_k = (k + 2Z) ∩ [k, 3k] for k = 1..3.
    auto prof = synthetic({{1, 3}, {2, 4, 6}, {3, 5, 7, 9}});
    CHECK(satisfies_structure(prof, {2, 1, 0}));
    CHECK_FALSE(satisfies_structure(prof, {1, 1, 3}));
    CHECK(satisfies_structure(prof, {1, 1, 4}));
    auto rep = unions_structure_verifier(prof);
    REQUIRE(rep.candidate.has_value());
    CHECK(*rep.candidate == StructureCandidate{1, 1, 4});

    StructureCaps tight;
    tight.m_max = 3;
    auto capped = unions_structure_verifier(prof, tight);
    REQUIRE(capped.candidate.has_value());
    CHECK(*capped.candidate == StructureCandidate{2, 1, 0});

    tight.d_max = 1;
    CHECK_FALSE(unions_structure_verifier(prof, tight).candidate.has_value());

    auto bad  = prof;
    bad.rows[0].exact = false;
    CHECK_THROWS_AS((void) unions_structure_verifier(bad), std::invalid_argument);
  }

  TEST_CASE("structure verifier on small monoids") {
    BudgetPolicy policy;
    auto m1 = unions_structure_verifier(unions_profile(test::m1(), {1, 6}, policy));
    REQUIRE(m1.candidate.has_value());
    CHECK(m1.candidate->d == 1);

    auto f = unions_structure_verifier(unions_profile(test::free_monoid(2), {1, 5}, policy));
    REQUIRE(f.candidate.has_value());
    CHECK(*f.candidate == StructureCandidate{1, 1, 0});
  }

  TEST_CASE("mu gap analysis") {
    BudgetPolicy policy;
    policy.max_word_len = 40;
    auto prof = unions_profile(test::m3(2), {1, 4}, policy);
    REQUIRE(prof.exact());
    auto rows = mu_gap_analysis(prof);
    REQUIRE(rows.size() == 4);
    CHECK_FALSE(rows[0].bound.has_value());
    CHECK(rows[2].k == 3);
    CHECK(rows[2].bound == 5);
    REQUIRE(rows[2].mu.has_value());
    CHECK(*rows[2].mu >= 4);
    CHECK(*rows[2].mu == prof.row(3)->rho());

    auto free_rows = mu_gap_analysis(unions_profile(test::free_monoid(2), {1, 3}, policy));
    for (auto const& r : free_rows) {
      CHECK_FALSE(r.mu.has_value());
      CHECK_FALSE(r.bound_holds().has_value());
    }
  }
}
