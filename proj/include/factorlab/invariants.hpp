#ifndef FACTORLAB_INVARIANTS_HPP_
#define FACTORLAB_INVARIANTS_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "factorlab/budget.hpp"
#include "factorlab/kernels.hpp"
#include "factorlab/length_set.hpp"
#include "factorlab/presentation.hpp"
#include "factorlab/rational.hpp"
#include "factorlab/rewrite.hpp"

namespace factorlab {

  [[nodiscard]] LengthSet length_set(FactorizationClass const& cls);

  [[nodiscard]] LengthSet length_set(Word const&              seed,
                                     Presentation const&      p,
                                     ExplorationBudget const& budget);

  // Gaps between consecutive elements of a length set. `advisory` is set
  // when the source set was inexact, since unexplored lengths could split a
  // gap.
  struct DistanceSet {
    std::vector<std::size_t> values;
    bool                     advisory = false;

    friend bool operator==(DistanceSet const&, DistanceSet const&) = default;
  };

  [[nodiscard]] DistanceSet distance_set(LengthSet const& l);

  // sup(L ∩ N+) / min(L ∩ N+), or 0 when L has no positive element.
  class Elasticity {
   public:
    enum class Kind { zero, finite, infinite };

    Elasticity() = default;

    [[nodiscard]] static Elasticity zero(bool lower_bound_only = false);
    [[nodiscard]] static Elasticity finite(Rational value,
                                           bool     lower_bound_only = false);
    [[nodiscard]] static Elasticity infinite();

    [[nodiscard]] Kind kind() const noexcept {
      return kind_;
    }
    [[nodiscard]] Rational const& value() const noexcept {
      return value_;
    }
    // Set when computed from an inexact length set: the true value is at
    // least this one.
    [[nodiscard]] bool lower_bound_only() const noexcept {
      return lower_bound_only_;
    }

    // "0", "5/3", "inf"; a trailing "+" marks a lower bound.
    [[nodiscard]] std::string to_string() const;

    // Orders by value; zero < finite < infinite. Ignores the bound flag.
    friend std::strong_ordering operator<=>(Elasticity const& a,
                                            Elasticity const& b) noexcept;
    friend bool operator==(Elasticity const& a, Elasticity const& b) noexcept {
      return (a <=> b) == std::strong_ordering::equal;
    }

   private:
    Kind     kind_             = Kind::zero;
    Rational value_            = Rational(0);
    bool     lower_bound_only_ = false;
  };

  [[nodiscard]] Elasticity elasticity_of(LengthSet const& l);

  // Closed interval [lo, hi] of natural numbers.
  struct KRange {
    std::size_t lo = 0;
    std::size_t hi = 0;

    [[nodiscard]] bool empty() const noexcept {
      return lo > hi;
    }
    // "A..B" or a single "A"; throws std::invalid_argument.
    [[nodiscard]] static KRange parse(std::string const& text);

    friend bool operator==(KRange const&, KRange const&) = default;
  };

  // One k of a unions profile: U_k, with lambda_k = min and rho_k = max.
  // When inexact, rho() is only a lower bound for rho_k.
  struct UnionsRow {
    std::size_t              k = 0;
    std::vector<std::size_t> values;
    bool                     exact = true;
    std::size_t              seeds = 0;  // words of length k enumerated

    [[nodiscard]] std::size_t lambda() const {
      return values.front();
    }
    [[nodiscard]] std::size_t rho() const {
      return values.back();
    }
    [[nodiscard]] bool contains(std::size_t n) const;
  };

  struct UnionsProfile {
    KRange                 range;
    std::vector<UnionsRow> rows;  // one per k in range, ascending
    std::vector<Letter>    alphabet;

    [[nodiscard]] bool                  exact() const;
    [[nodiscard]] UnionsRow const*      row(std::size_t k) const;
  };

  // Generators occurring in relations, plus one representative of the
  // generators that occur in none (when there are any). Replacing every
  // relation-free generator by a single one leaves length sets unchanged, so
  // unions only need words over this alphabet.
  [[nodiscard]] std::vector<Letter> reduced_alphabet(Presentation const& p);

  // U_k for every k in range. Throws std::invalid_argument if the range is
  // empty or the alphabet is.
  [[nodiscard]] UnionsProfile unions_profile(Presentation const& p,
                                             KRange              range,
                                             BudgetPolicy const& policy,
                                             Execution exec = Execution::parallel);

  // Outcome of looking for a length set that attains the elasticity of the
  // whole system. Never a proof: `yes` names a witness, `no_evidence` names
  // the strictly increasing pattern that suggests no witness exists.
  struct AcceptedElasticity {
    enum class Verdict { yes, no_evidence, unknown };

    Verdict                    verdict = Verdict::unknown;
    std::optional<std::size_t> witness;  // index into the witness list
    std::vector<Rational>      pattern;
    std::optional<Rational>    supremum;  // configured or derived target
    std::string                note;
  };

  [[nodiscard]] std::string_view to_string(AcceptedElasticity::Verdict v);

  struct SystemElasticity {
    Elasticity         lower_bound;
    AcceptedElasticity accepted;
  };

  // Lower bound for rho(M) from the witnesses and from rho_k / k of exact
  // profile rows. With `supremum` unset, the target is derived from the
  // profile: a plateau of rho_k / k that some witness attains gives `yes`,
  // a strictly increasing run of at least three values gives `no_evidence`.
  [[nodiscard]] SystemElasticity
  system_elasticity(UnionsProfile const&       profile,
                    std::span<LengthSet const> witnesses,
                    std::optional<Rational>    supremum = std::nullopt);

  // b = x^k c^n with n = r - s and k = s max L(c) - r min L(c), for q = r/s
  // in lowest terms. When L(b) can be explored exactly, `verified` holds its
  // elasticity.
  struct ElasticityWitness {
    Word                      word;
    std::size_t               pad   = 0;  // k
    std::size_t               power = 0;  // n
    std::optional<Elasticity> verified;
  };

  // Throws std::invalid_argument if `free_gen` occurs in a relation, if
  // L(c) is inexact, if q < 1, or if k would be negative.
  [[nodiscard]] ElasticityWitness
  full_elasticity_witness(Presentation const& p,
                          Letter              free_gen,
                          Word const&         c,
                          Rational            q,
                          BudgetPolicy const& policy);

  // Largest elasticity among all words of length n over the full alphabet,
  // with every word attaining it.
  struct ElasticityScan {
    std::size_t       length = 0;
    Elasticity        best;
    std::vector<Word> argmax;
    bool              exact = true;
  };

  [[nodiscard]] ElasticityScan max_elasticity_of_length(
      Presentation const& p,
      std::size_t         n,
      BudgetPolicy const& policy,
      Execution           exec = Execution::parallel);

}  // namespace factorlab

#endif  // FACTORLAB_INVARIANTS_HPP_
