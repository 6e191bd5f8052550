// Acceptance gate: one PASS/FAIL line per criterion, exact comparisons only.
// Exits nonzero if any criterion fails.

#include <cstddef>
#include <cstdio>
#include <deque>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "factorlab/brute_force.hpp"
#include "factorlab/corpus.hpp"
#include "factorlab/invariants.hpp"
#include "factorlab/kernels.hpp"
#include "factorlab/structure.hpp"

using namespace factorlab;

namespace {

  Presentation m1() {
    return parse_presentation("gens: x y z\nrel: x y = y z x\n");
  }

  Presentation m2(std::size_t n) {
    std::string rhs;
    for (std::size_t i = 0; i < n; ++i) {
      rhs += "y ";
    }
    return parse_presentation("gens: x y\nrel: x y = " + rhs + "x\n");
  }

  Presentation m3(std::size_t n) {
    std::string rhs;
    for (std::size_t i = 0; i < n; ++i) {
      rhs += "y ";
    }
    return parse_presentation("gens: u v x y\nrel: u u = v v v\nrel: x y = "
                              + rhs + "x\n");
  }

  std::size_t ipow(std::size_t b, std::size_t e) {
    std::size_t r = 1;
    while (e-- > 0) {
      r *= b;
    }
    return r;
  }

  Word power_word(Letter x, std::size_t k, Letter y, std::size_t l) {
    std::vector<Letter> s(k, x);
    s.insert(s.end(), l, y);
    return Word(std::move(s));
  }

  Word random_word(std::mt19937& rng, std::size_t n, std::size_t lo, std::size_t hi) {
    std::uniform_int_distribution<std::size_t> len(lo, hi);
    std::uniform_int_distribution<Letter>      letter(0, static_cast<Letter>(n - 1));
    std::vector<Letter>                        s(len(rng));
    for (auto& c : s) {
      c = letter(rng);
    }
    return Word(std::move(s));
  }

  std::string set_string(std::vector<std::size_t> const& v) {
    std::string out = "{";
    for (std::size_t i = 0; i < v.size(); ++i) {
      out += (i ? "," : "") + std::to_string(v[i]);
    }
    return out + "}";
  }

  // Exact length sets seen by criteria 1 to 5, rechecked by criterion 6.
  struct Observed {
    Presentation const* p;
    Word                seed;
    LengthSet           lengths;
  };

  class Gate {
   public:
    void report(int id, bool ok, std::string const& title,
                std::vector<std::string> const& detail = {}) {
      std::cout << (ok ? "PASS" : "FAIL") << " criterion " << id << ": " << title
                << "\n";
      for (auto const& d : detail) {
        std::cout << "    " << d << "\n";
      }
      failed_ = failed_ || !ok;
    }
    [[nodiscard]] bool failed() const {
      return failed_;
    }

   private:
    bool failed_ = false;
  };

  std::vector<Observed> observed;

  LengthSet observe(Presentation const& p, Word const& a, ExplorationBudget const& b) {
    auto l = length_set(a, p, b);
    if (l.exact) {
      observed.push_back({&p, a, l});
    }
    return l;
  }

  void criterion1(Gate& g, Presentation const& p) {
    auto        x = *p.find("x");
    auto        y = *p.find("y");
    std::size_t words = 0;
    std::vector<std::string> bad;
    for (std::size_t k = 1; k <= 5; ++k) {
      for (std::size_t l = 1; k + l <= 6; ++l) {
        auto a  = power_word(x, k, y, l);
        auto ls = observe(p, a, ExplorationBudget::for_seed(a.length()));
        std::vector<std::size_t> want;
        for (auto n = k + l; n <= 2 * (k + l) - 1; ++n) {
          want.push_back(n);
        }
        ++words;
        if (!ls.exact || ls.values != want) {
          bad.push_back("x^" + std::to_string(k) + " y^" + std::to_string(l) + ": got "
                        + set_string(ls.values) + (ls.exact ? "" : " inexact"));
        }
      }
    }
    g.report(1, bad.empty(),
             "M1: L(x^k y^l) = [k+l, 2(k+l)-1], exact, for k+l <= 6 ("
                 + std::to_string(words) + " words)",
             bad);
  }

  void criterion2(Gate& g, Presentation const& p) {
    auto                     x = *p.find("x");
    auto                     y = *p.find("y");
    std::vector<std::string> bad;
    for (std::size_t k = 1; k <= 5; ++k) {
      for (std::size_t l = 1; k + l <= 6; ++l) {
        auto a = power_word(x, k, y, l);
        auto e = elasticity_of(length_set(a, p, ExplorationBudget::for_seed(a.length())));
        auto want = Rational(2) - Rational(1, static_cast<long long>(k + l));
        if (e.lower_bound_only() || e != Elasticity::finite(want)) {
          bad.push_back("rho(L(x^" + std::to_string(k) + " y^" + std::to_string(l)
                        + ")) = " + e.to_string() + ", expected " + want.to_string());
        }
      }
    }

    // Exhaustive scan over every word of length 1..8.
    std::vector<Letter> alphabet{0, 1, 2};
    BudgetPolicy        policy;
    Elasticity          best;
    std::size_t         scanned = 0;
    bool                attained_by_power = false;
    for (std::size_t n = 1; n <= 8; ++n) {
      auto seeds = words_of_length(alphabet, n);
      auto sets  = batch_length_sets(seeds, p, policy);
      for (std::size_t i = 0; i < seeds.size(); ++i) {
        ++scanned;
        if (!sets[i].exact) {
          bad.push_back("inexact class of " + p.format(seeds[i]));
          continue;
        }
        observed.push_back({&p, seeds[i], sets[i]});
        auto e = elasticity_of(sets[i]);
        if (!(e < Elasticity::finite(Rational(2)))) {
          bad.push_back("elasticity " + e.to_string() + " >= 2 at " + p.format(seeds[i]));
        }
        bool is_power = false;
        for (std::size_t k = 1; k < n; ++k) {
          is_power = is_power || seeds[i] == power_word(x, k, y, n - k);
        }
        if (best < e) {
          best              = e;
          attained_by_power = is_power;
        } else if (e == best && is_power) {
          attained_by_power = true;
        }
      }
    }
    if (!attained_by_power) {
      bad.push_back("maximum " + best.to_string() + " not attained by any x^k y^l");
    }
    g.report(2, bad.empty(),
             "M1: rho(L(x^k y^l)) = 2 - 1/(k+l); scan of " + std::to_string(scanned)
                 + " words of length <= 8 has max " + best.to_string()
                 + " < 2, attained by x^k y^l",
             bad);
  }

  void criterion3(Gate& g, Presentation const& p) {
    auto                     x = *p.find("x");
    auto                     y = *p.find("y");
    std::vector<std::string> bad;
    for (std::size_t k = 1; k <= 4; ++k) {
      auto lhs = power_word(x, k, y, 1);
      auto rhs = power_word(y, ipow(2, k), x, k);
      auto eq  = equal_in_M(lhs, rhs, p, ExplorationBudget::for_seed(lhs.length()));
      if (eq != Equality::yes) {
        bad.push_back("x^" + std::to_string(k) + " y vs y^" + std::to_string(ipow(2, k))
                      + " x^" + std::to_string(k) + ": " + std::string(to_string(eq)));
      }
      observe(p, lhs, ExplorationBudget::for_seed(lhs.length()));
    }
    auto                     prof = unions_profile(p, {1, 4}, BudgetPolicy{});
    std::vector<std::size_t> rho;
    for (auto const& row : prof.rows) {
      rho.push_back(row.rho());
      auto want = ipow(2, row.k - 1) + row.k - 1;
      if (!row.exact || row.rho() != want) {
        bad.push_back("rho_" + std::to_string(row.k) + " = " + std::to_string(row.rho())
                      + ", expected " + std::to_string(want));
      }
    }
    std::size_t prev = 0;
    for (std::size_t k = 2; k <= 4; ++k) {
      auto diff = rho[k - 1] - rho[k - 2];
      if (diff != ipow(2, k - 2) + 1 || diff <= prev) {
        bad.push_back("rho_" + std::to_string(k) + " - rho_" + std::to_string(k - 1)
                      + " = " + std::to_string(diff));
      }
      prev = diff;
    }
    g.report(3, bad.empty(),
             "M2(2): x^k y = y^(2^k) x^k for k <= 4; rho_k = 2^(k-1)+k-1 = "
                 + set_string(rho) + "; differences 2^(k-2)+1 increase",
             bad);
  }

  void criterion4(Gate& g) {
    auto         p = m3(2);
    BudgetPolicy policy;
    policy.max_word_len = 80;
    // Rows 1 and 2 are needed for rho_{k-2} at k = 3, 4.
    auto full = unions_profile(p, {1, 6}, policy);
    UnionsProfile prof;
    prof.range    = {3, 6};
    prof.alphabet = full.alphabet;
    for (auto const& row : full.rows) {
      if (row.k >= 3) {
        prof.rows.push_back(row);
      }
    }

    std::vector<std::string> detail;
    bool exact = full.exact();
    bool rho_ok = exact, pair_ok = exact, mu_ok = exact, trend_ok = exact;
    for (auto const& row : prof.rows) {
      auto want = ipow(2, row.k - 1) + row.k - 1;
      rho_ok    = rho_ok && row.rho() == want;
      pair_ok   = pair_ok && row.contains(row.k) && row.contains(row.k + 1);
    }

    std::ostringstream mu_line;
    mu_line << "mu_k vs rho_{k-2}+4:";
    if (exact) {
      for (auto const& r : mu_gap_analysis(full)) {
        if (r.k < 3) {
          continue;
        }
        mu_line << " k=" << r.k << " " << (r.mu ? std::to_string(*r.mu) : "-") << "<="
                << (r.bound ? std::to_string(*r.bound) : "-");
        mu_ok = mu_ok && r.bound_holds().value_or(false);
      }
    }

    std::optional<StructureCandidate> candidate;
    std::ostringstream trend_line;
    trend_line << "trend m+4 >= rho_k - rho_{k-2}:";
    if (exact) {
      auto rep  = unions_structure_verifier(prof);
      candidate = rep.candidate;
      for (auto const& t : unions_structure_verifier(full).trend) {
        if (t.k < 3) {
          continue;
        }
        auto want = 3 * ipow(2, t.k - 3) + 2;
        trend_line << " k=" << t.k << " "
                   << (t.implied_m ? std::to_string(*t.implied_m + 4) : "-") << "/"
                   << want;
        trend_ok = trend_ok && t.implied_m
                   && *t.implied_m + 4 == static_cast<long>(want);
      }
    }
    bool none = exact && !candidate.has_value();

    std::vector<std::size_t> rho;
    for (auto const& row : prof.rows) {
      rho.push_back(row.rho());
    }
    auto mark = [](bool ok) { return ok ? "ok  " : "FAIL"; };
    detail.push_back(std::string(mark(exact)) + " profile over k in [1,6] exact");
    detail.push_back(std::string(mark(rho_ok)) + " rho_k = 2^(k-1)+k-1: " + set_string(rho));
    detail.push_back(std::string(mark(pair_ok)) + " {k,k+1} in U_k");
    detail.push_back(std::string(mark(mu_ok)) + " " + mu_line.str());
    if (candidate) {
      detail.push_back(std::string(mark(none)) + " no (d,k*,m) with m <= 32: found d="
                       + std::to_string(candidate->d) + " k*="
                       + std::to_string(candidate->k_star)
                       + " m=" + std::to_string(candidate->m));
    } else {
      detail.push_back(std::string(mark(none)) + " no (d,k*,m) with m <= 32");
    }
    detail.push_back(std::string(mark(trend_ok)) + " " + trend_line.str());
    for (auto const& row : prof.rows) {
      detail.push_back("     U_" + std::to_string(row.k) + " = [" + std::to_string(row.lambda())
                       + ", " + std::to_string(row.rho()) + "], "
                       + std::to_string(row.values.size()) + " values");
    }

    // The same construction with n = 3, for comparison only.
    BudgetPolicy big;
    big.max_word_len = 100;
    auto three = unions_profile(m3(3), {1, 5}, big);
    if (three.exact()) {
      auto rep = unions_structure_verifier(three);
      std::ostringstream info;
      info << "info: M3(3), k in [1,5]: rho =";
      for (auto const& row : three.rows) {
        info << " " << row.rho();
      }
      info << "; mu bound";
      bool all = true;
      for (auto const& r : mu_gap_analysis(three)) {
        if (r.k >= 3) {
          all = all && r.bound_holds().value_or(false);
        }
      }
      info << (all ? " holds" : " fails") << "; "
           << (rep.candidate ? "a structure candidate exists" : "no structure candidate");
      detail.push_back(info.str());
    }

    g.report(4, exact && rho_ok && pair_ok && mu_ok && none && trend_ok,
             "M3(2), k in [3,6]: rho_k, {k,k+1} in U_k, mu_k <= rho_{k-2}+4, "
             "no (d,k*,m) within caps, trend m+4 >= 3*2^(k-3)+2",
             detail);
  }

  void criterion5(Gate& g, std::deque<Presentation>& keep) {
    std::mt19937             rng(20240601);
    std::size_t              presentations = 0;
    std::size_t              classes       = 0;
    std::vector<std::string> bad;
    for (int trial = 0; trial < 400 && presentations < 120; ++trial) {
      std::size_t n = 2 + rng() % 2;
      Word        e, f;
      do {
        e = random_word(rng, n, 1, 4);
        f = random_word(rng, n, 1, 4);
      } while (e[0] == f[0] || e[e.length() - 1] == f[f.length() - 1]);
      std::vector<std::string> names;
      for (std::size_t i = 0; i < n; ++i) {
        names.push_back(std::string(1, static_cast<char>('a' + i)));
      }
      auto const& p = keep.emplace_back(names, std::vector<Relation>{{e, f}});
      auto        d = one_relation_analysis(p).d;
      bool        any = false;
      for (int s = 0; s < 5; ++s) {
        auto a = random_word(rng, n, 0, 5);
        auto l = observe(p, a, {30, 100'000, 1'000'000});
        if (!l.exact) {
          continue;
        }
        any = true;
        ++classes;
        bool ok = d == 0 ? l.values == std::vector<std::size_t>{a.length()}
                         : is_arithmetic_progression(l.values, d);
        if (!ok) {
          bad.push_back(serialize(p) + " seed " + p.format(a) + ": "
                        + set_string(l.values) + " d=" + std::to_string(d));
        }
      }
      presentations += any ? 1 : 0;
    }
    g.report(5, bad.empty() && presentations >= 100,
             "random one-relation presentations: exact length sets are APs with "
             "difference d ("
                 + std::to_string(presentations) + " presentations, "
                 + std::to_string(classes) + " classes)",
             bad);
  }

  void criterion6(Gate& g) {
    std::vector<std::string> bad;
    for (auto const& o : observed) {
      auto d   = static_cast<long>(delta_subgroup(*o.p).d);
      auto max = max_relation_delta(*o.p);
      auto const& v = o.lengths.values;
      for (std::size_t i = 0; i < v.size(); ++i) {
        for (std::size_t j = i + 1; j < v.size(); ++j) {
          long diff = static_cast<long>(v[j]) - static_cast<long>(v[i]);
          if (d == 0 ? diff != 0 : diff % d != 0) {
            bad.push_back(o.p->format(o.seed) + ": difference " + std::to_string(diff));
          }
        }
      }
      for (auto gap : distance_set(o.lengths).values) {
        if (gap > max) {
          bad.push_back(o.p->format(o.seed) + ": distance " + std::to_string(gap));
        }
      }
    }
    g.report(6, bad.empty(),
             "differences in dZ and distances <= max delta on "
                 + std::to_string(observed.size()) + " exact classes",
             bad);
  }

  void criterion7(Gate& g) {
    std::vector<std::string> bad;
    std::vector<std::pair<std::string, Presentation>> yes{
        {"M1", m1()},
        {"M2(2)", m2(2)},
        {"M2(3)", m2(3)},
        {"M3(2)", m3(2)},
        {"M3(3)", m3(3)},
        {"<x,y | (y,xyx)>", parse_presentation("gens: x y\nrel: y = x y x\n")}};
    for (auto const& [name, p] : yes) {
      auto r = adyan_check(p);
      if (!r.adyan) {
        bad.push_back(name + " rejected: " + r.reason);
      }
    }
    auto unit = adyan_check(parse_presentation("gens: x\nrel: x = 1\n"));
    if (unit.adyan) {
      bad.push_back("<x | (x,1)> accepted");
    }
    g.report(7, bad.empty(),
             "adyan_check accepts M1, M2(n), M3(n), <x,y | (y,xyx)> and rejects "
             "<x | (x,1)> (" + unit.reason + ")",
             bad);
  }

  void criterion8(Gate& g) {
    auto const* entry = find_entry("elastic");
    auto        p     = entry->presentation();
    auto        x     = *p.find("x");
    auto        c     = p.parse_word("a a");
    BudgetPolicy             policy;
    auto                     lc = length_set(c, p, policy.for_seed(c.length()));
    auto                     top = elasticity_of(lc);
    std::vector<std::string> bad;
    std::vector<std::string> hit;
    for (auto q : {Rational(5, 4), Rational(4, 3), Rational(3, 2), Rational(5, 3),
                   Rational(7, 4)}) {
      if (!(Rational(1) < q) || !(Elasticity::finite(q) < top)) {
        bad.push_back(q.to_string() + " is not strictly inside (1, " + top.to_string() + ")");
        continue;
      }
      auto wit = full_elasticity_witness(p, x, c, q, policy);
      if (wit.verified && !wit.verified->lower_bound_only()
          && *wit.verified == Elasticity::finite(q)) {
        hit.push_back(q.to_string());
      } else {
        bad.push_back(q.to_string() + ": b = " + p.format(wit.word) + " gives "
                      + (wit.verified ? wit.verified->to_string() : "no exact class"));
      }
    }
    std::string list;
    for (auto const& h : hit) {
      list += (list.empty() ? "" : ", ") + h;
    }
    g.report(8, bad.empty() && hit.size() >= 5 && lc.exact,
             "elastic entry, c = a a with L(c) = " + set_string(lc.values)
                 + ": witnesses b with rho(L(b)) = q for q in {" + list + "}",
             bad);
  }

  void criterion9(Gate& g) {
    std::size_t              compared = 0;
    std::size_t              checks   = 0;
    std::vector<std::string> bad;
    for (auto const& rep : run_corpus(100)) {
      compared += rep.classes_compared;
      for (auto const& c : rep.checks) {
        if (c.name.find("naive explorer") == std::string::npos) {
          continue;
        }
        ++checks;
        if (c.outcome == Outcome::fail) {
          bad.push_back(rep.entry + ": " + c.name + " " + c.detail);
        }
      }
    }
    g.report(9, bad.empty() && compared >= 50 && checks > 0,
             "engine and naive explorer agree on " + std::to_string(compared)
                 + " exact corpus classes",
             bad);
  }

  void criterion10(Gate& g) {
    std::mt19937             rng(77);
    std::vector<std::string> bad;
    std::vector<std::string> counts;
    for (auto const& [name, p] : std::vector<std::pair<std::string, Presentation>>{
             {"M1", m1()}, {"M2(2)", m2(2)}}) {
      std::size_t pairs = 0;
      for (int trial = 0; trial < 1000 && pairs < 100; ++trial) {
        auto a  = random_word(rng, p.generator_count(), 1, 4);
        auto b  = random_word(rng, p.generator_count(), 1, 4);
        auto la = length_set(a, p, ExplorationBudget::for_seed(a.length()));
        auto lb = length_set(b, p, ExplorationBudget::for_seed(b.length()));
        auto ab = a * b;
        auto lab = length_set(ab, p, ExplorationBudget::for_seed(ab.length()));
        if (!la.exact || !lb.exact || !lab.exact) {
          continue;
        }
        ++pairs;
        for (auto u : la.values) {
          for (auto v : lb.values) {
            if (!lab.contains(u + v)) {
              bad.push_back(name + ": " + p.format(a) + " | " + p.format(b) + " misses "
                            + std::to_string(u + v));
            }
          }
        }
      }
      counts.push_back(name + " " + std::to_string(pairs));
      if (pairs < 100) {
        bad.push_back(name + ": only " + std::to_string(pairs) + " exact pairs");
      }
    }
    g.report(10, bad.empty(),
             "L(a) + L(b) in L(ab) on random exact pairs (" + counts[0] + ", " + counts[1]
                 + ")",
             bad);
  }

}  // namespace

int main() {
  Gate gate;
  auto p1 = m1();
  auto p2 = m2(2);
  std::deque<Presentation> keep;
  criterion1(gate, p1);
  criterion2(gate, p1);
  criterion3(gate, p2);
  criterion4(gate);
  criterion5(gate, keep);
  criterion6(gate);
  criterion7(gate);
  criterion8(gate);
  criterion9(gate);
  criterion10(gate);
  return gate.failed() ? 1 : 0;
}
