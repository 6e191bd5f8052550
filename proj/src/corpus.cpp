#include "factorlab/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "factorlab/brute_force.hpp"
#include "factorlab/invariants.hpp"
#include "factorlab/kernels.hpp"
#include "factorlab/rewrite.hpp"
#include "factorlab/structure.hpp"

#ifndef FACTORLAB_CORPUS_DIR
#define FACTORLAB_CORPUS_DIR "corpus"
#endif

namespace factorlab {

  std::string_view to_string(Outcome o) {
    switch (o) {
      case Outcome::pass:
        return "pass";
      case Outcome::fail:
        return "fail";
      case Outcome::inconclusive:
        return "inconclusive";
    }
    return "inconclusive";
  }

  void OracleContext::record(std::string name, Outcome o, std::string detail) {
    results_.push_back({std::move(name), o, std::move(detail)});
  }

  void OracleContext::expect(std::string name, bool ok, std::string detail) {
    record(std::move(name),
           ok ? Outcome::pass : Outcome::fail,
           ok ? std::string{} : std::move(detail));
  }

  std::optional<bool> OracleContext::compare_with_brute_force(Word const& seed) {
    auto budget = policy_.for_seed(seed.length());
    auto cls    = explore_class(seed, p_, budget);
    if (!cls.exact()) {
      return std::nullopt;
    }
    auto naive = brute_force_class(seed, p_, budget.max_word_len);
    ++compared_;
    if (!naive.exact || naive.members.size() != cls.size()) {
      return false;
    }
    return std::all_of(
        cls.members().begin(), cls.members().end(), [&](Word const& w) {
          return naive.members.count(
                     std::vector<Letter>(w.begin(), w.end()))
                 > 0;
        });
  }

  Presentation CorpusEntry::presentation() const {
    return parse_presentation(text);
  }

  std::size_t SuiteReport::count(Outcome o) const {
    return static_cast<std::size_t>(std::count_if(
        checks.begin(), checks.end(), [o](auto const& c) {
          return c.outcome == o;
        }));
  }

  std::string default_corpus_dir() {
    return FACTORLAB_CORPUS_DIR;
  }

  namespace {

    std::string join(std::vector<std::size_t> const& values) {
      std::string out = "{";
      for (std::size_t i = 0; i < values.size(); ++i) {
        out += (i == 0 ? "" : ",") + std::to_string(values[i]);
      }
      return out + "}";
    }

    std::size_t ipow(std::size_t base, std::size_t e) {
      std::size_t r = 1;
      while (e-- > 0) {
        r *= base;
      }
      return r;
    }

    Word word_of(Presentation const& p, std::string const& text) {
      return p.parse_word(text);
    }

    // x^k y^l
    Word power_word(Letter x, std::size_t k, Letter y, std::size_t l) {
      return pow(Word{x}, k) * pow(Word{y}, l);
    }

    std::vector<Letter> full_alphabet(Presentation const& p) {
      std::vector<Letter> out;
      for (auto const& g : p.generators()) {
        out.push_back(g.id);
      }
      return out;
    }

    ////////////////////////////////////////////////////////////////////
    // Oracles
    ////////////////////////////////////////////////////////////////////

    void adyan_accepts(OracleContext& ctx) {
      auto r = adyan_check(ctx.presentation());
      ctx.expect("adyan_check accepts", r.adyan, r.reason);
    }

    // L(x^k y^l) = [k+l, 2(k+l)-1] and rho = 2 - 1/(k+l).
    void m1_intervals(OracleContext& ctx) {
      auto const& p = ctx.presentation();
      auto        x = *p.find("x");
      auto        y = *p.find("y");
      for (std::size_t n = 2; n <= ctx.scale(); ++n) {
        for (std::size_t k = 1; k < n; ++k) {
          auto l    = n - k;
          auto a    = power_word(x, k, y, l);
          auto name = "L(x^" + std::to_string(k) + " y^" + std::to_string(l)
                      + ") = [" + std::to_string(n) + ","
                      + std::to_string(2 * n - 1) + "]";
          auto ls = class_lengths(a, p, ctx.policy().for_seed(n));
          if (!ls.exact) {
            ctx.record(name, Outcome::inconclusive, "class inexact");
            continue;
          }
          std::vector<std::size_t> expected;
          for (auto i = n; i <= 2 * n - 1; ++i) {
            expected.push_back(i);
          }
          ctx.expect(name, ls.values == expected, "got " + join(ls.values));

          Rational want = Rational(2) - Rational(1, static_cast<std::int64_t>(n));
          auto     got  = elasticity_of(ls);
          ctx.expect("rho(L(x^" + std::to_string(k) + " y^" + std::to_string(l)
                         + ")) = " + want.to_string(),
                     got == Elasticity::finite(want),
                     "got " + got.to_string());
          if (auto same = ctx.compare_with_brute_force(a); same) {
            ctx.expect("naive explorer agrees on x^" + std::to_string(k)
                           + " y^" + std::to_string(l),
                       *same);
          }
        }
      }
    }

    // Among all words of length n the largest elasticity is below 2 and
    // attained by some x^k y^l with k, l >= 1.
    void m1_maximality(OracleContext& ctx) {
      auto const& p = ctx.presentation();
      auto        x = *p.find("x");
      auto        y = *p.find("y");
      for (std::size_t n = 2; n <= ctx.scale(); ++n) {
        auto name = "max elasticity at length " + std::to_string(n)
                    + " attained by x^k y^l, below 2";
        auto scan = max_elasticity_of_length(p, n, ctx.policy());
        if (!scan.exact) {
          ctx.record(name, Outcome::inconclusive, "some class inexact");
          continue;
        }
        bool attained = false;
        for (std::size_t k = 1; k < n; ++k) {
          auto w = power_word(x, k, y, n - k);
          attained
              = attained
                || std::find(scan.argmax.begin(), scan.argmax.end(), w)
                       != scan.argmax.end();
        }
        bool below = scan.best < Elasticity::finite(Rational(2));
        ctx.expect(name,
                   attained && below,
                   "max " + scan.best.to_string() + " at "
                       + p.format(scan.argmax.front()));
      }
    }

    void m2_equation(OracleContext& ctx, std::size_t n) {
      auto const& p = ctx.presentation();
      auto        x = *p.find("x");
      auto        y = *p.find("y");
      for (std::size_t k = 0; k <= ctx.scale(); ++k) {
        auto a      = power_word(x, k, y, 1);
        auto b      = pow(Word{y}, ipow(n, k)) * pow(Word{x}, k);
        auto budget = ctx.policy().for_seed(a.length());
        budget.max_word_len = std::max(budget.max_word_len, b.length());
        auto eq   = equal_in_M(a, b, p, budget);
        auto name = "x^" + std::to_string(k) + " y = y^"
                    + std::to_string(ipow(n, k)) + " x^" + std::to_string(k);
        ctx.record(name,
                   eq == Equality::yes              ? Outcome::pass
                   : eq == Equality::definitely_not ? Outcome::fail
                                                    : Outcome::inconclusive,
                   eq == Equality::yes ? "" : std::string(to_string(eq)));
      }
    }

    // rho_k = n^{k-1} + k - 1 for k in [1, scale]; the bound is opened wide
    // enough that a larger rho_k would show up as a mismatch.
    std::optional<UnionsProfile> rho_profile(OracleContext& ctx,
                                             std::size_t    n) {
      auto s      = ctx.scale();
      auto policy = ctx.policy();
      policy.max_word_len = ipow(n, s - 1) + 2 * s;
      auto profile = unions_profile(ctx.presentation(), {1, s}, policy);
      for (auto const& row : profile.rows) {
        auto want = ipow(n, row.k - 1) + row.k - 1;
        auto name = "rho_" + std::to_string(row.k) + " = "
                    + std::to_string(want);
        if (!row.exact) {
          ctx.record(name, Outcome::inconclusive, "profile row inexact");
          continue;
        }
        ctx.expect(name, row.rho() == want, "got " + std::to_string(row.rho()));
      }
      if (!profile.exact()) {
        return std::nullopt;
      }
      return profile;
    }

    void m2_rho(OracleContext& ctx, std::size_t n) {
      auto profile = rho_profile(ctx, n);
      if (!profile) {
        return;
      }
      std::size_t previous_gap = 0;
      for (std::size_t k = 2; k <= ctx.scale(); ++k) {
        auto gap  = profile->row(k)->rho() - profile->row(k - 1)->rho();
        auto want = ipow(n, k - 2) * (n - 1) + 1;
        ctx.expect("rho_" + std::to_string(k) + " - rho_"
                       + std::to_string(k - 1) + " = " + std::to_string(want)
                       + ", increasing",
                   gap == want && gap > previous_gap,
                   "got " + std::to_string(gap));
        previous_gap = gap;
      }
    }

    void m3_unions(OracleContext& ctx, std::size_t n, bool check_mu_bound) {
      auto profile = rho_profile(ctx, n);
      if (!profile) {
        return;
      }
      for (std::size_t k = 3; k <= ctx.scale(); ++k) {
        auto const* row = profile->row(k);
        ctx.expect("{" + std::to_string(k) + "," + std::to_string(k + 1)
                       + "} in U_" + std::to_string(k)
                       + ", so U_k is in no k + dZ with d >= 2",
                   row->contains(k) && row->contains(k + 1),
                   "U_k = " + join(row->values));
      }
      if (!check_mu_bound) {
        return;
      }
      for (auto const& r : mu_gap_analysis(*profile)) {
        if (r.k < 3) {
          continue;
        }
        auto name = "mu_" + std::to_string(r.k) + " <= rho_"
                    + std::to_string(r.k - 2) + " + 4";
        auto holds = r.bound_holds();
        ctx.expect(name,
                   holds.value_or(false),
                   "mu = " + (r.mu ? std::to_string(*r.mu) : "none")
                       + ", bound = "
                       + (r.bound ? std::to_string(*r.bound) : "none"));
      }
    }

    void nonatomic_oracles(OracleContext& ctx) {
      auto const& p = ctx.presentation();
      std::vector<Word> samples{word_of(p, "y")};
      auto acyclic = acyclicity_probe(p, samples, ctx.policy());
      ctx.expect("acyclicity probe fails with a witness",
                 acyclic.verdict == ProbeVerdict::Verdict::fails
                     && acyclic.witness.has_value(),
                 std::string(to_string(acyclic.verdict)));
      auto atom = atom_probe(p, *p.find("y"), ctx.policy());
      ctx.expect("y is not an atom",
                 atom.verdict == ProbeVerdict::Verdict::fails,
                 std::string(to_string(atom.verdict)));
    }

    void half_factorial_oracles(OracleContext& ctx) {
      auto const& p        = ctx.presentation();
      auto        alphabet = full_alphabet(p);
      for (std::size_t n = 0; n <= ctx.scale(); ++n) {
        auto seeds = words_of_length(alphabet, n);
        auto sets  = batch_length_sets(seeds, p, ctx.policy());
        bool exact = true;
        bool ok    = true;
        std::string bad;
        for (std::size_t i = 0; i < seeds.size(); ++i) {
          exact = exact && sets[i].exact;
          if (sets[i].values != std::vector<std::size_t>{n} && bad.empty()) {
            ok  = false;
            bad = p.format(seeds[i]) + " has " + join(sets[i].values);
          }
        }
        auto name = "L(a) = {" + std::to_string(n) + "} for |a| = "
                    + std::to_string(n);
        if (!exact && ok) {
          ctx.record(name, Outcome::inconclusive, "some class inexact");
        } else {
          ctx.expect(name, ok, bad);
        }
      }
      auto probe = normalizing_probe(p, ctx.policy());
      auto const& entry = probe.table.at(*p.find("x"), *p.find("y"));
      ctx.expect("x y =_M y x via the swap table",
                 entry.has_value() && entry->z == *p.find("y"),
                 "no swap entry");
    }

    void free_oracles(OracleContext& ctx) {
      auto profile
          = unions_profile(ctx.presentation(), {1, ctx.scale()}, ctx.policy());
      for (auto const& row : profile.rows) {
        ctx.expect("U_" + std::to_string(row.k) + " = {"
                       + std::to_string(row.k) + "}",
                   row.exact && row.values == std::vector<std::size_t>{row.k},
                   join(row.values));
      }
      auto report = unions_structure_verifier(profile);
      ctx.expect("structure candidate d = 1, m = 0",
                 report.candidate && report.candidate->d == 1
                     && report.candidate->m == 0,
                 "no candidate");
    }

    void unit_oracles(OracleContext& ctx) {
      auto const& p = ctx.presentation();
      auto        r = reducedness_probe(p);
      ctx.expect("reducedness fails with x x =_M 1",
                 r.verdict == ProbeVerdict::Verdict::fails && r.witness
                     && r.witness->words.front() == word_of(p, "x x"),
                 std::string(to_string(r.verdict)));
      auto a = adyan_check(p);
      ctx.expect("adyan_check rejects", !a.adyan, "accepted");
    }

    void elastic_oracles(OracleContext& ctx) {
      auto const& p = ctx.presentation();
      auto        c = word_of(p, "a a");
      for (auto q : {Rational(5, 4),
                     Rational(4, 3),
                     Rational(3, 2),
                     Rational(5, 3),
                     Rational(7, 4)}) {
        auto name = "rho(L(b)) = " + q.to_string() + " for the constructed b";
        auto w    = full_elasticity_witness(p, *p.find("x"), c, q, ctx.policy());
        if (!w.verified) {
          ctx.record(name, Outcome::inconclusive, "class of b inexact");
          continue;
        }
        ctx.expect(name,
                   *w.verified == Elasticity::finite(q)
                       && !w.verified->lower_bound_only(),
                   "got " + w.verified->to_string());
      }
    }

    ////////////////////////////////////////////////////////////////////
    // Entries
    ////////////////////////////////////////////////////////////////////

    CorpusEntry entry(std::string name,
                      std::string text,
                      std::string description,
                      std::size_t max_scale,
                      std::vector<CorpusOracle> oracles) {
      CorpusEntry e;
      e.file        = name + ".mon";
      e.name        = std::move(name);
      e.text        = std::move(text);
      e.description = std::move(description);
      e.max_scale   = max_scale;
      e.oracles     = std::move(oracles);
      return e;
    }

    std::vector<CorpusEntry> make_entries() {
      std::vector<CorpusEntry> out;
      out.push_back(entry(
          "m1",
          "# one relation, not normalizing, elasticity 2 not accepted\n"
          "gens: x y z\n"
          "rel: x y = y z x\n",
          "<x,y,z | (xy, yzx)>: length sets of x^k y^l are intervals",
          8,
          {{"adyan", adyan_accepts},
           {"intervals", m1_intervals},
           {"maximality", m1_maximality}}));
      for (std::size_t n : {2, 3}) {
        std::string rhs;
        for (std::size_t i = 0; i < n; ++i) {
          rhs += "y ";
        }
        out.push_back(entry(
            "m2_n" + std::to_string(n),
            "# x y = y^" + std::to_string(n) + " x\n" + "gens: x y\n"
                + "rel: x y = " + rhs + "x\n",
            "<x,y | (xy, y^" + std::to_string(n)
                + " x)>: rho_k = n^(k-1) + k - 1",
            n == 2 ? 6 : 5,
            {{"adyan", adyan_accepts},
             {"equation", [n](OracleContext& c) { m2_equation(c, n); }},
             {"rho", [n](OracleContext& c) { m2_rho(c, n); }}}));
      }
      for (std::size_t n : {2, 3}) {
        std::string rhs;
        for (std::size_t i = 0; i < n; ++i) {
          rhs += "y ";
        }
        out.push_back(entry(
            "m3_n" + std::to_string(n),
            "# u^2 = v^3 and x y = y^" + std::to_string(n) + " x\n"
                + "gens: u v x y\n" + "rel: u u = v v v\n" + "rel: x y = "
                + rhs + "x\n",
            "<u,v,x,y | (u^2, v^3), (xy, y^" + std::to_string(n)
                + " x)>: unions contain consecutive pairs",
            n == 2 ? 7 : 6,
            {{"adyan", adyan_accepts},
             {"unions",
              [n](OracleContext& c) { m3_unions(c, n, n >= 3); }}}));
      }
      out.push_back(entry("nonatomic",
                          "# cancellative, not acyclic, not atomic\n"
                          "gens: x y\n"
                          "rel: y = x y x\n",
                          "<x,y | (y, xyx)>: y is neither a unit nor a "
                          "product of atoms",
                          1,
                          {{"adyan", adyan_accepts},
                           {"probes", nonatomic_oracles}}));
      out.push_back(entry("hf1",
                          "# commuting generators, half-factorial\n"
                          "gens: x y\n"
                          "rel: x y = y x\n",
                          "<x,y | (xy, yx)>: every length set is a singleton",
                          8,
                          {{"half-factorial", half_factorial_oracles}}));
      out.push_back(entry("free2",
                          "# free monoid on two generators\n"
                          "gens: x y\n",
                          "free monoid: U_k = {k}",
                          8,
                          {{"unions", free_oracles}}));
      out.push_back(entry("unit",
                          "# x is a unit of order two\n"
                          "gens: x\n"
                          "rel: x x = 1\n",
                          "<x | (x^2, 1)>: not reduced",
                          1,
                          {{"reducedness", unit_oracles}}));
      out.push_back(entry("elastic",
                          "# free generator x next to a^2 = b^4\n"
                          "gens: x a b\n"
                          "rel: a a = b b b b\n",
                          "<x,a,b | (a^2, b^4)>: every q in (1, 2) is an "
                          "elasticity",
                          1,
                          {{"full elasticity", elastic_oracles}}));
      return out;
    }

    ////////////////////////////////////////////////////////////////////
    // Checks shared by every entry
    ////////////////////////////////////////////////////////////////////

    // Longest sweep length whose word count stays small.
    std::size_t sweep_length(std::size_t alphabet, std::size_t scale) {
      std::size_t n = 0, total = 1, layer = 1;
      while (n < scale) {
        layer *= alphabet;
        if (total + layer > 400) {
          break;
        }
        total += layer;
        ++n;
      }
      return n;
    }

    void generic_checks(OracleContext& ctx) {
      auto const& p         = ctx.presentation();
      auto        d         = delta_subgroup(p).d;
      auto        max_delta = max_relation_delta(p);
      bool        one_rel   = p.relations().size() == 1;
      auto        alphabet  = full_alphabet(p);
      auto        top       = sweep_length(alphabet.size(), ctx.scale());

      std::size_t exact = 0, inexact = 0;
      std::string naive_bad, delta_bad, ap_bad;
      for (std::size_t n = 1; n <= top; ++n) {
        for (auto const& a : words_of_length(alphabet, n)) {
          auto ls = class_lengths(a, p, ctx.policy().for_seed(n));
          if (!ls.exact) {
            ++inexact;
            continue;
          }
          ++exact;
          auto same = ctx.compare_with_brute_force(a);
          if (same && !*same && naive_bad.empty()) {
            naive_bad = p.format(a);
          }
          for (auto v : ls.values) {
            auto diff = v > n ? v - n : n - v;
            bool in_n = d == 0 ? diff == 0 : diff % d == 0;
            if (!in_n && delta_bad.empty()) {
              delta_bad = p.format(a) + " has " + join(ls.values);
            }
          }
          for (auto gap : distance_set(ls).values) {
            if (gap > max_delta && delta_bad.empty()) {
              delta_bad = p.format(a) + " has gap " + std::to_string(gap);
            }
          }
          if (one_rel) {
            bool ap = is_arithmetic_progression(ls.values,
                                                one_relation_analysis(p).d)
                      && ls.min() <= n && n <= ls.max();
            if (!ap && ap_bad.empty()) {
              ap_bad = p.format(a) + " has " + join(ls.values);
            }
          }
        }
      }
      auto note = std::to_string(exact) + " exact classes, "
                  + std::to_string(inexact) + " inexact skipped";
      if (exact == 0) {
        ctx.record("engine and naive explorer agree", Outcome::inconclusive,
                   note);
        return;
      }
      ctx.expect("engine and naive explorer agree", naive_bad.empty(),
                 "differ on " + naive_bad);
      ctx.expect("lengths stay in |a| + dZ with gaps at most the largest "
                 "relation delta",
                 delta_bad.empty(),
                 delta_bad);
      if (one_rel) {
        ctx.expect("length sets are arithmetic progressions around |a|",
                   ap_bad.empty(),
                   ap_bad);
      }
    }

    std::string read_file(std::string const& path) {
      std::ifstream in(path, std::ios::binary);
      if (!in) {
        throw std::runtime_error("cannot open " + path);
      }
      std::ostringstream ss;
      ss << in.rdbuf();
      return ss.str();
    }

  }  // namespace

  std::vector<CorpusEntry> const& corpus_entries() {
    static std::vector<CorpusEntry> const entries = make_entries();
    return entries;
  }

  CorpusEntry const* find_entry(std::string_view name) {
    for (auto const& e : corpus_entries()) {
      if (e.name == name) {
        return &e;
      }
    }
    return nullptr;
  }

  SuiteReport run_oracle_suite(CorpusEntry const&  entry,
                               std::size_t         scale,
                               SuiteOptions const& options) {
    if (scale == 0 || scale > entry.max_scale) {
      throw std::invalid_argument("scale " + std::to_string(scale)
                                  + " outside [1, "
                                  + std::to_string(entry.max_scale) + "] for "
                                  + entry.name);
    }
    SuiteReport report;
    report.entry = entry.name;
    report.scale = scale;

    auto         p = entry.presentation();
    CheckResult  file_check{"on-disk file parses to the built-in text",
                           Outcome::pass,
                           {}};
    try {
      auto path = options.corpus_dir + "/" + entry.file;
      if (read_file(path) != entry.text) {
        file_check.outcome = Outcome::fail;
        file_check.detail  = path + " differs from the built-in text";
      } else if (load_presentation(path) != p) {
        file_check.outcome = Outcome::fail;
        file_check.detail  = path + " parses differently";
      }
    } catch (std::exception const& e) {
      file_check.outcome = Outcome::fail;
      file_check.detail  = e.what();
    }

    OracleContext ctx(p, scale, options.policy);
    ctx.record(file_check.name, file_check.outcome, file_check.detail);
    generic_checks(ctx);
    for (auto const& oracle : entry.oracles) {
      oracle.run(ctx);
    }
    report.checks           = ctx.results();
    report.classes_compared = ctx.classes_compared();
    return report;
  }

  std::vector<SuiteReport> run_corpus(std::size_t         scale,
                                      SuiteOptions const& options) {
    std::vector<SuiteReport> out;
    for (auto const& e : corpus_entries()) {
      out.push_back(
          run_oracle_suite(e, std::max<std::size_t>(1, std::min(scale, e.max_scale)), options));
    }
    return out;
  }

}  // namespace factorlab
