#include "factorlab/structure.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

#include "factorlab/kernels.hpp"

namespace factorlab {

  DeltaSubgroup delta_subgroup(Presentation const& p) {
    std::size_t d = 0;
    for (auto const& rel : p.closure()) {
      d = std::gcd(d, static_cast<std::size_t>(std::labs(rel.delta())));
    }
    return {d};
  }

  std::size_t max_relation_delta(Presentation const& p) {
    std::size_t m = 0;
    for (auto const& rel : p.relations()) {
      m = std::max(m, static_cast<std::size_t>(std::labs(rel.delta())));
    }
    return m;
  }

  OneRelationAnalysis one_relation_analysis(Presentation const& p) {
    if (p.relations().size() != 1) {
      throw std::invalid_argument(
          "one-relation analysis needs exactly one relation, got "
          + std::to_string(p.relations().size()));
    }
    return {static_cast<std::size_t>(std::labs(p.relations()[0].delta()))};
  }

  bool is_arithmetic_progression(std::vector<std::size_t> const& values,
                                 std::size_t                     d) {
    for (std::size_t i = 1; i < values.size(); ++i) {
      if (values[i] - values[i - 1] != d) {
        return false;
      }
    }
    return true;
  }

  AdyanResult adyan_check(Presentation const& p) {
    for (auto const& rel : p.relations()) {
      if (rel.lhs.empty() || rel.rhs.empty()) {
        return {false, "empty relation side"};
      }
    }
    auto [left, right] = side_graphs(p);
    if (left.has_self_loop) {
      return {false, "left graph has a self-loop"};
    }
    if (right.has_self_loop) {
      return {false, "right graph has a self-loop"};
    }
    if (!left.is_acyclic()) {
      return {false, "left graph has a cycle"};
    }
    if (!right.is_acyclic()) {
      return {false, "right graph has a cycle"};
    }
    return {true, {}};
  }

  ////////////////////////////////////////////////////////////////////////
  // Probes
  ////////////////////////////////////////////////////////////////////////

  std::string_view to_string(ProbeVerdict::Verdict v) {
    switch (v) {
      case ProbeVerdict::Verdict::holds:
        return "holds";
      case ProbeVerdict::Verdict::fails:
        return "fails";
      case ProbeVerdict::Verdict::unknown_at_bound:
        return "unknown_at_bound";
    }
    return "unknown_at_bound";
  }

  namespace {

    using Verdict = ProbeVerdict::Verdict;

    ProbeVerdict failed(ExplorationBudget const& bound, ProbeWitness w) {
      ProbeVerdict v;
      v.verdict    = Verdict::fails;
      v.witness    = std::move(w);
      v.bound_used = bound;
      v.definitive = true;
      return v;
    }

    ProbeVerdict held(ExplorationBudget const& bound, bool definitive) {
      ProbeVerdict v;
      v.verdict    = Verdict::holds;
      v.bound_used = bound;
      v.definitive = definitive;
      return v;
    }

    ProbeVerdict unknown(ExplorationBudget const& bound) {
      ProbeVerdict v;
      v.bound_used = bound;
      return v;
    }

    std::size_t longest(std::span<Word const> words) {
      std::size_t n = 0;
      for (auto const& w : words) {
        n = std::max(n, w.length());
      }
      return n;
    }

  }  // namespace

  ProbeVerdict delta_bound_check(Presentation const&   p,
                                 std::span<Word const> samples,
                                 BudgetPolicy const&   policy) {
    auto bound     = policy.for_seed(longest(samples));
    auto max_delta = max_relation_delta(p);
    bool all_exact = true;
    for (auto const& a : samples) {
      auto l = class_lengths(a, p, policy.for_seed(a.length()));
      if (!l.exact) {
        all_exact = false;
        continue;
      }
      for (auto gap : distance_set(l).values) {
        if (gap > max_delta) {
          return failed(bound,
                        {{a},
                         "distance " + std::to_string(gap)
                             + " exceeds the largest relation delta "
                             + std::to_string(max_delta),
                         {}});
        }
      }
    }
    return all_exact ? held(bound, true) : unknown(bound);
  }

  ProbeVerdict atom_probe(Presentation const& p,
                          Letter              x,
                          BudgetPolicy const& policy) {
    Word const a{x};
    auto       bound = policy.for_seed(1);
    auto       cls   = explore_class(a, p, bound);
    for (std::size_t i = 0; i < cls.size(); ++i) {
      auto const& w = cls.members()[i];
      if (w.empty()) {
        return failed(bound,
                      {{a, w}, p.name(x) + " is a unit", cls.path_to(i)});
      }
    }
    if (p.has_empty_side()) {
      // Splits cannot be certified without deciding which words are units.
      return unknown(bound);
    }
    for (std::size_t i = 0; i < cls.size(); ++i) {
      auto const& w = cls.members()[i];
      if (w.length() >= 2) {
        auto b = w.subword(0, 1);
        auto c = w.subword(1, w.length() - 1);
        return failed(bound,
                      {{a, b, c},
                       p.name(x) + " =_M (" + p.format(b) + ")("
                           + p.format(c) + ")",
                       cls.path_to(i)});
      }
    }
    return cls.exact() ? held(bound, true) : unknown(bound);
  }

  ProbeVerdict irredundancy_probe(Presentation const& p,
                                  BudgetPolicy const& policy) {
    auto bound     = policy.for_seed(1);
    bool all_exact = true;
    for (auto const& g : p.generators()) {
      Word const a{g.id};
      auto       cls = explore_class(a, p, bound);
      for (std::size_t i = 0; i < cls.size(); ++i) {
        auto const& w = cls.members()[i];
        if (w.count(g.id) == 0) {
          return failed(bound,
                        {{a, w},
                         g.name + " =_M " + p.format(w),
                         cls.path_to(i)});
        }
      }
      all_exact = all_exact && cls.exact();
    }
    return all_exact ? held(bound, true) : unknown(bound);
  }

  ProbeVerdict reducedness_probe(Presentation const& p) {
    auto bound = ExplorationBudget::for_seed(0);
    auto const& closure = p.closure();
    for (std::size_t r = 0; r < closure.size(); ++r) {
      auto const& rel = closure[r];
      if (!rel.lhs.empty() && rel.rhs.empty()) {
        return failed(bound,
                      {{rel.lhs, rel.rhs},
                       p.format(rel.lhs, "·") + " =_M 1",
                       {{rel.lhs, rel.rhs, r, 0}}});
      }
    }
    // Every transition maps nonempty words to nonempty words, so the only
    // word equal to 1 is 1 itself, and a b = 1 forces a = b = 1.
    return held(bound, true);
  }

  ProbeVerdict acyclicity_probe(Presentation const&   p,
                                std::span<Word const> samples,
                                BudgetPolicy const&   policy) {
    auto bound = policy.for_seed(longest(samples));
    for (auto const& a : samples) {
      auto cls = explore_class(a, p, policy.for_seed(a.length()));
      for (std::size_t i = 0; i < cls.size(); ++i) {
        auto const& w = cls.members()[i];
        for (std::size_t len = 0; len < w.length(); ++len) {
          for (std::size_t pos = 0; pos + len <= w.length(); ++pos) {
            auto inner = w.subword(pos, len);
            auto j     = cls.index_of(inner);
            if (!j) {
              continue;
            }
            auto b = w.subword(0, pos);
            auto c = w.subword(pos + len, w.length() - pos - len);
            auto certificate = cls.path_to(i);
            return failed(bound,
                          {{a, b, inner, c},
                           p.format(a) + " =_M (" + p.format(b) + ")("
                               + p.format(inner) + ")(" + p.format(c)
                               + ") with " + p.format(inner) + " =_M "
                               + p.format(a),
                           std::move(certificate)});
          }
        }
      }
    }
    // Only the sampled classes were searched.
    return held(bound, false);
  }

  ProbeVerdict acyclicity_reducedness_probe(Presentation const&   p,
                                            std::span<Word const> samples,
                                            BudgetPolicy const&   policy) {
    auto reduced = reducedness_probe(p);
    if (reduced.verdict == Verdict::fails) {
      return reduced;
    }
    return acyclicity_probe(p, samples, policy);
  }

  NormalizingProbe normalizing_probe(Presentation const& p,
                                     BudgetPolicy const& policy) {
    auto const n     = p.generator_count();
    auto       bound = policy.for_seed(2);

    NormalizingProbe out{unknown(bound), GeneratorSwapTable(n)};
    // 0: found, 1: exact class without any z x, 2: inconclusive.
    std::vector<int>                       status(n * n, 2);
    std::vector<std::optional<GeneratorSwapTable::Entry>> entries(n * n);
    auto const pairs = static_cast<std::ptrdiff_t>(n * n);

#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t i = 0; i < pairs; ++i) {
      auto const x   = static_cast<Letter>(static_cast<std::size_t>(i) / n);
      auto const y   = static_cast<Letter>(static_cast<std::size_t>(i) % n);
      auto       cls = explore_class(Word{x, y}, p, bound);
      auto&      st  = status[static_cast<std::size_t>(i)];
      st             = cls.exact() ? 1 : 2;
      for (Letter z = 0; z < n; ++z) {
        if (auto j = cls.index_of(Word{z, x})) {
          entries[static_cast<std::size_t>(i)]
              = GeneratorSwapTable::Entry{z, cls.path_to(*j)};
          st = 0;
          break;
        }
      }
    }

    bool complete = true;
    for (std::size_t i = 0; i < n * n; ++i) {
      auto x = static_cast<Letter>(i / n);
      auto y = static_cast<Letter>(i % n);
      if (entries[i]) {
        out.table.set(x, y, std::move(*entries[i]));
        continue;
      }
      complete = false;
      if (status[i] == 1 && out.verdict.verdict != Verdict::fails) {
        Word xy{x, y};
        out.verdict = failed(bound,
                             {{xy},
                              "no generator z with " + p.format(xy)
                                  + " =_M z " + p.name(x),
                              {}});
      }
    }
    if (complete) {
      out.verdict = held(bound, true);
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Unions structure
  ////////////////////////////////////////////////////////////////////////

  namespace {

    bool row_satisfies(UnionsRow const& row, std::size_t d, std::size_t m) {
      for (auto u : row.values) {
        auto diff = u > row.k ? u - row.k : row.k - u;
        if (diff % d != 0) {
          return false;
        }
      }
      if (row.lambda() + 2 * m > row.rho()) {
        return true;
      }
      auto lo = row.lambda() + m;
      auto hi = row.rho() - m;
      // First element of k + dZ at or above lo.
      auto r     = (row.k % d + d - lo % d) % d;
      for (auto t = lo + r; t <= hi; t += d) {
        if (!row.contains(t)) {
          return false;
        }
      }
      return true;
    }

    std::size_t min_window_m(UnionsRow const& row) {
      if (row.values.empty()) {
        return 0;
      }
      for (std::size_t m = 0;; ++m) {
        if (row.lambda() + 2 * m > row.rho()) {
          return m;
        }
        bool ok = true;
        for (auto t = row.lambda() + m; t <= row.rho() - m; ++t) {
          if (!row.contains(t)) {
            ok = false;
            break;
          }
        }
        if (ok) {
          return m;
        }
      }
    }

    void require_exact(UnionsProfile const& profile) {
      if (!profile.exact()) {
        throw std::invalid_argument("unions profile is inexact");
      }
    }

  }  // namespace

  bool satisfies_structure(UnionsProfile const&      profile,
                           StructureCandidate const& c) {
    if (c.d == 0) {
      return false;
    }
    return std::all_of(
        profile.rows.begin(), profile.rows.end(), [&](UnionsRow const& row) {
          return row.k < c.k_star || row.values.empty()
                 || row_satisfies(row, c.d, c.m);
        });
  }

  StructureUnionsReport unions_structure_verifier(UnionsProfile const& profile,
                                                  StructureCaps const& caps) {
    require_exact(profile);
    StructureUnionsReport out;
    out.range = profile.range;
    out.caps  = caps;
    auto kstar_max = caps.kstar_max.value_or(profile.range.hi);
    out.caps.kstar_max = kstar_max;

    for (std::size_t d = 1; d <= caps.d_max && !out.candidate; ++d) {
      for (auto k = profile.range.lo; k <= kstar_max && !out.candidate; ++k) {
        for (std::size_t m = 0; m <= caps.m_max; ++m) {
          StructureCandidate c{d, k, m};
          if (satisfies_structure(profile, c)) {
            out.candidate = c;
            break;
          }
        }
      }
    }

    for (auto const& row : profile.rows) {
      StructureTrendRow t;
      t.k            = row.k;
      t.min_window_m = min_window_m(row);
      if (row.k >= 2) {
        if (auto const* prev = profile.row(row.k - 2);
            prev != nullptr && !prev->values.empty() && !row.values.empty()) {
          t.rho_gap   = row.rho() - prev->rho();
          t.implied_m = static_cast<long>(*t.rho_gap) - 4;
        }
      }
      out.trend.push_back(t);
    }

    if (!out.candidate) {
      std::vector<long> implied;
      for (auto const& t : out.trend) {
        if (t.implied_m) {
          implied.push_back(*t.implied_m);
        }
      }
      out.failure_trend
          = implied.size() >= 2
            && std::adjacent_find(implied.begin(),
                                  implied.end(),
                                  [](long a, long b) { return a >= b; })
                   == implied.end();
    }
    return out;
  }

  std::optional<bool> MuGapRow::bound_holds() const {
    if (!mu || !bound) {
      return std::nullopt;
    }
    return *mu <= *bound;
  }

  std::vector<MuGapRow> mu_gap_analysis(UnionsProfile const& profile) {
    require_exact(profile);
    std::vector<MuGapRow> out;
    for (auto const& row : profile.rows) {
      MuGapRow r;
      r.k = row.k;
      for (std::size_t i = row.values.size(); i-- > 1;) {
        if (row.values[i] == row.values[i - 1] + 1) {
          r.mu = row.values[i];
          break;
        }
      }
      if (row.k >= 2) {
        if (auto const* prev = profile.row(row.k - 2);
            prev != nullptr && !prev->values.empty()) {
          r.bound = prev->rho() + 4;
        }
      }
      out.push_back(r);
    }
    return out;
  }

}  // namespace factorlab
