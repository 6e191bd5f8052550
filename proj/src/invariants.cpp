#include "factorlab/invariants.hpp"

#include <algorithm>
#include <stdexcept>

namespace factorlab {

  LengthSet length_set(FactorizationClass const& cls) {
    return LengthSet{cls.lengths(), cls.exact()};
  }

  LengthSet length_set(Word const&              seed,
                       Presentation const&      p,
                       ExplorationBudget const& budget) {
    return class_lengths(seed, p, budget);
  }

  DistanceSet distance_set(LengthSet const& l) {
    DistanceSet out;
    out.advisory = !l.exact;
    for (std::size_t i = 1; i < l.values.size(); ++i) {
      out.values.push_back(l.values[i] - l.values[i - 1]);
    }
    std::sort(out.values.begin(), out.values.end());
    out.values.erase(std::unique(out.values.begin(), out.values.end()),
                     out.values.end());
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Elasticity
  ////////////////////////////////////////////////////////////////////////

  Elasticity Elasticity::zero(bool lower_bound_only) {
    Elasticity e;
    e.lower_bound_only_ = lower_bound_only;
    return e;
  }

  Elasticity Elasticity::finite(Rational value, bool lower_bound_only) {
    Elasticity e;
    e.kind_             = Kind::finite;
    e.value_            = value;
    e.lower_bound_only_ = lower_bound_only;
    return e;
  }

  Elasticity Elasticity::infinite() {
    Elasticity e;
    e.kind_ = Kind::infinite;
    return e;
  }

  std::string Elasticity::to_string() const {
    std::string out;
    switch (kind_) {
      case Kind::zero:
        out = "0";
        break;
      case Kind::finite:
        out = value_.to_string();
        break;
      case Kind::infinite:
        out = "inf";
        break;
    }
    if (lower_bound_only_ && kind_ != Kind::infinite) {
      out += "+";
    }
    return out;
  }

  std::strong_ordering operator<=>(Elasticity const& a,
                                   Elasticity const& b) noexcept {
    if (a.kind_ != b.kind_) {
      return a.kind_ <=> b.kind_;
    }
    if (a.kind_ == Elasticity::Kind::finite) {
      return a.value_ <=> b.value_;
    }
    return std::strong_ordering::equal;
  }

  Elasticity elasticity_of(LengthSet const& l) {
    auto first_positive
        = std::upper_bound(l.values.begin(), l.values.end(), std::size_t{0});
    if (first_positive == l.values.end()) {
      return Elasticity::zero(!l.exact);
    }
    return Elasticity::finite(
        Rational(static_cast<std::int64_t>(l.values.back()),
                 static_cast<std::int64_t>(*first_positive)),
        !l.exact);
  }

  ////////////////////////////////////////////////////////////////////////
  // Unions
  ////////////////////////////////////////////////////////////////////////

  KRange KRange::parse(std::string const& text) {
    auto to_size = [&](std::string const& part) {
      if (part.empty()
          || part.find_first_not_of("0123456789") != std::string::npos) {
        throw std::invalid_argument("malformed k-range '" + text + "'");
      }
      return static_cast<std::size_t>(std::stoull(part));
    };
    auto dots = text.find("..");
    if (dots == std::string::npos) {
      auto k = to_size(text);
      return {k, k};
    }
    return {to_size(text.substr(0, dots)), to_size(text.substr(dots + 2))};
  }

  bool UnionsRow::contains(std::size_t n) const {
    return std::binary_search(values.begin(), values.end(), n);
  }

  bool UnionsProfile::exact() const {
    return std::all_of(
        rows.begin(), rows.end(), [](auto const& r) { return r.exact; });
  }

  UnionsRow const* UnionsProfile::row(std::size_t k) const {
    for (auto const& r : rows) {
      if (r.k == k) {
        return &r;
      }
    }
    return nullptr;
  }

  std::vector<Letter> reduced_alphabet(Presentation const& p) {
    auto alphabet = p.relation_letters();
    auto free     = p.free_letters();
    if (!free.empty()) {
      alphabet.push_back(free.front());
      std::sort(alphabet.begin(), alphabet.end());
    }
    return alphabet;
  }

  UnionsProfile unions_profile(Presentation const& p,
                               KRange              range,
                               BudgetPolicy const& policy,
                               Execution           exec) {
    if (range.empty()) {
      throw std::invalid_argument("empty k-range");
    }
    if (p.generator_count() == 0) {
      throw std::invalid_argument("unions need a nonempty alphabet");
    }
    UnionsProfile out;
    out.range    = range;
    out.alphabet = reduced_alphabet(p);
    for (std::size_t k = range.lo; k <= range.hi; ++k) {
      auto      seeds = words_of_length(out.alphabet, k);
      auto      u     = union_of_length_sets(seeds, p, policy, exec);
      UnionsRow row;
      row.k      = k;
      row.values = std::move(u.values);
      row.exact  = u.exact;
      row.seeds  = seeds.size();
      out.rows.push_back(std::move(row));
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // System elasticity
  ////////////////////////////////////////////////////////////////////////

  std::string_view to_string(AcceptedElasticity::Verdict v) {
    switch (v) {
      case AcceptedElasticity::Verdict::yes:
        return "yes";
      case AcceptedElasticity::Verdict::no_evidence:
        return "no_evidence";
      case AcceptedElasticity::Verdict::unknown:
        return "unknown";
    }
    return "unknown";
  }

  namespace {

    bool strictly_increasing(std::vector<Rational> const& v) {
      for (std::size_t i = 1; i < v.size(); ++i) {
        if (!(v[i - 1] < v[i])) {
          return false;
        }
      }
      return true;
    }

    std::optional<std::size_t>
    attaining_witness(std::span<LengthSet const> witnesses,
                      Rational const&            target) {
      for (std::size_t i = 0; i < witnesses.size(); ++i) {
        auto e = elasticity_of(witnesses[i]);
        if (witnesses[i].exact && e.kind() == Elasticity::Kind::finite
            && e.value() == target) {
          return i;
        }
      }
      return std::nullopt;
    }

  }  // namespace

  SystemElasticity system_elasticity(UnionsProfile const&       profile,
                                     std::span<LengthSet const> witnesses,
                                     std::optional<Rational>    supremum) {
    SystemElasticity out;
    out.lower_bound = Elasticity::zero();

    std::vector<Rational> witness_values;
    for (auto const& w : witnesses) {
      auto e = elasticity_of(w);
      if (e > out.lower_bound) {
        out.lower_bound = Elasticity::finite(e.value(), true);
      }
      if (e.kind() == Elasticity::Kind::finite && w.exact) {
        witness_values.push_back(e.value());
      }
    }
    // rho_k / k: some length set contains both k and rho_k.
    std::vector<Rational> ratios;
    for (auto const& row : profile.rows) {
      if (row.k == 0 || !row.exact || row.values.empty()) {
        continue;
      }
      Rational r(static_cast<std::int64_t>(row.rho()),
                 static_cast<std::int64_t>(row.k));
      ratios.push_back(r);
      if (Elasticity::finite(r) > out.lower_bound) {
        out.lower_bound = Elasticity::finite(r, true);
      }
    }

    auto& acc = out.accepted;
    if (supremum) {
      acc.supremum = supremum;
      if (auto i = attaining_witness(witnesses, *supremum)) {
        acc.verdict = AcceptedElasticity::Verdict::yes;
        acc.witness = i;
        acc.note    = "witness attains the configured supremum";
        return out;
      }
      bool below = std::all_of(witness_values.begin(),
                               witness_values.end(),
                               [&](auto const& v) { return v < *supremum; });
      if (witness_values.size() >= 3 && below
          && strictly_increasing(witness_values)) {
        acc.verdict = AcceptedElasticity::Verdict::no_evidence;
        acc.pattern = witness_values;
        acc.note = "witness elasticities increase strictly toward the supremum";
        return out;
      }
      acc.note = "no attaining witness and no increasing pattern";
      return out;
    }

    if (ratios.size() >= 2 && ratios[ratios.size() - 1] == ratios[ratios.size() - 2]) {
      acc.supremum = ratios.back();
      if (auto i = attaining_witness(witnesses, ratios.back())) {
        acc.verdict = AcceptedElasticity::Verdict::yes;
        acc.witness = i;
        acc.note    = "rho_k/k plateaus and a witness attains the plateau";
        return out;
      }
    }
    if (ratios.size() >= 3 && strictly_increasing(ratios)) {
      acc.verdict = AcceptedElasticity::Verdict::no_evidence;
      acc.pattern = ratios;
      acc.note    = "rho_k/k increases strictly over the profile";
      return out;
    }
    if (witness_values.size() >= 3 && strictly_increasing(witness_values)) {
      acc.verdict = AcceptedElasticity::Verdict::no_evidence;
      acc.pattern = witness_values;
      acc.note    = "witness elasticities increase strictly";
      return out;
    }
    acc.note = "inconclusive within the computed range";
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Full elasticity witness
  ////////////////////////////////////////////////////////////////////////

  ElasticityWitness full_elasticity_witness(Presentation const& p,
                                            Letter              free_gen,
                                            Word const&         c,
                                            Rational            q,
                                            BudgetPolicy const& policy) {
    auto free = p.free_letters();
    if (!std::binary_search(free.begin(), free.end(), free_gen)) {
      throw std::invalid_argument("generator " + p.name(free_gen)
                                  + " occurs in a relation");
    }
    auto lc = class_lengths(c, p, policy.for_seed(c.length()));
    if (!lc.exact) {
      throw std::invalid_argument("length set of " + p.format(c)
                                  + " is inexact");
    }
    if (q.num() < q.den()) {
      throw std::invalid_argument("q = " + q.to_string() + " is below 1");
    }
    auto r   = q.num();
    auto s   = q.den();
    auto max = static_cast<std::int64_t>(lc.max());
    auto min = static_cast<std::int64_t>(lc.min());
    auto k   = s * max - r * min;
    if (k < 0) {
      throw std::invalid_argument("q = " + q.to_string()
                                  + " exceeds the elasticity of "
                                  + p.format(c));
    }
    ElasticityWitness out;
    out.pad   = static_cast<std::size_t>(k);
    out.power = static_cast<std::size_t>(r - s);
    out.word  = pow(Word{free_gen}, out.pad) * pow(c, out.power);
    auto lb   = class_lengths(out.word, p, policy.for_seed(out.word.length()));
    if (lb.exact) {
      out.verified = elasticity_of(lb);
    }
    return out;
  }

  ElasticityScan max_elasticity_of_length(Presentation const& p,
                                          std::size_t         n,
                                          BudgetPolicy const& policy,
                                          Execution           exec) {
    std::vector<Letter> alphabet;
    for (auto const& g : p.generators()) {
      alphabet.push_back(g.id);
    }
    auto seeds = words_of_length(alphabet, n);
    auto sets  = batch_length_sets(seeds, p, policy, exec);

    ElasticityScan out;
    out.length = n;
    for (std::size_t i = 0; i < seeds.size(); ++i) {
      out.exact = out.exact && sets[i].exact;
      auto e    = elasticity_of(sets[i]);
      if (out.argmax.empty() || e > out.best) {
        out.best = e;
        out.argmax.assign(1, seeds[i]);
      } else if (e == out.best) {
        out.argmax.push_back(seeds[i]);
      }
    }
    return out;
  }

}  // namespace factorlab
