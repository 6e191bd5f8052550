#ifndef FACTORLAB_STRUCTURE_HPP_
#define FACTORLAB_STRUCTURE_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "factorlab/budget.hpp"
#include "factorlab/invariants.hpp"
#include "factorlab/presentation.hpp"
#include "factorlab/rewrite.hpp"
#include "factorlab/word.hpp"

namespace factorlab {

  ////////////////////////////////////////////////////////////////////////
  // Static analyzers
  ////////////////////////////////////////////////////////////////////////

  // N = dZ, the subgroup generated by the relation deltas. d = 0 encodes
  // N = {0}.
  struct DeltaSubgroup {
    std::size_t d = 0;

    friend bool operator==(DeltaSubgroup const&, DeltaSubgroup const&) = default;
  };

  [[nodiscard]] DeltaSubgroup delta_subgroup(Presentation const& p);

  // Largest |delta| over the relations, which bounds every distance.
  [[nodiscard]] std::size_t max_relation_delta(Presentation const& p);

  struct OneRelationAnalysis {
    // d = ||e| - |f||; d = 0 means half-factorial, otherwise every length
    // set is an arithmetic progression with difference d.
    std::size_t d = 0;

    [[nodiscard]] bool half_factorial() const noexcept {
      return d == 0;
    }
  };

  // Throws std::invalid_argument unless p has exactly one relation.
  [[nodiscard]] OneRelationAnalysis one_relation_analysis(Presentation const& p);

  // True if the sorted values form an arithmetic progression with
  // difference d (singletons always do).
  [[nodiscard]] bool is_arithmetic_progression(
      std::vector<std::size_t> const& values,
      std::size_t                     d);

  struct AdyanResult {
    bool        adyan = false;
    std::string reason;  // empty when adyan
  };

  // Decidable: no relation side is empty and both side graphs are acyclic
  // simple graphs.
  [[nodiscard]] AdyanResult adyan_check(Presentation const& p);

  ////////////////////////////////////////////////////////////////////////
  // Bounded probes
  ////////////////////////////////////////////////////////////////////////

  struct ProbeWitness {
    std::vector<Word>           words;
    std::string                 description;
    std::vector<TransitionStep> certificate;  // replayable via is_valid_step
  };

  struct ProbeVerdict {
    enum class Verdict { holds, fails, unknown_at_bound };

    Verdict                     verdict = Verdict::unknown_at_bound;
    std::optional<ProbeWitness> witness;  // always set when verdict is fails
    ExplorationBudget           bound_used;
    // A `holds` that is a proof rather than "no counterexample found".
    bool definitive = false;
  };

  [[nodiscard]] std::string_view to_string(ProbeVerdict::Verdict v);

  // Checks that each exact sample has all distances in [1, max delta].
  // Inexact samples make the verdict unknown unless another sample fails.
  [[nodiscard]] ProbeVerdict delta_bound_check(Presentation const&   p,
                                               std::span<Word const> samples,
                                               BudgetPolicy const&   policy);

  // Looks for x =_M b c with b, c non-units. Without empty relation sides no
  // nonempty word is a unit, so a member of length >= 2 settles the
  // question; an exact class with no such member is a definitive `holds`.
  [[nodiscard]] ProbeVerdict atom_probe(Presentation const& p,
                                        Letter              x,
                                        BudgetPolicy const& policy);

  // Looks for a generator x whose class has a member avoiding x. `holds` is
  // definitive when every generator's class is exact.
  [[nodiscard]] ProbeVerdict irredundancy_probe(Presentation const& p,
                                                BudgetPolicy const& policy);

  // Fails with w =_M 1 when some relation has exactly one empty side; that
  // is also the only way a unit can arise, so the verdict is definitive.
  [[nodiscard]] ProbeVerdict reducedness_probe(Presentation const& p);

  // Looks for a =_M b a' c with a' =_M a and (b, c) != (1, 1) among the
  // classes of the samples. One-sided.
  [[nodiscard]] ProbeVerdict acyclicity_probe(Presentation const&   p,
                                              std::span<Word const> samples,
                                              BudgetPolicy const&   policy);

  // Reducedness first, then acyclicity.
  [[nodiscard]] ProbeVerdict
  acyclicity_reducedness_probe(Presentation const&   p,
                               std::span<Word const> samples,
                               BudgetPolicy const&   policy);

  struct NormalizingProbe {
    ProbeVerdict       verdict;
    GeneratorSwapTable table;
  };

  // For every (x, y) looks for z with x y =_M z x. Fails when some pair has
  // an exact class of x y with no such z.
  [[nodiscard]] NormalizingProbe normalizing_probe(Presentation const& p,
                                                   BudgetPolicy const& policy);

  ////////////////////////////////////////////////////////////////////////
  // Unions structure
  ////////////////////////////////////////////////////////////////////////

  struct StructureCaps {
    std::size_t                d_max = 6;
    std::optional<std::size_t> kstar_max;  // defaults to the largest k
    std::size_t                m_max = 32;
  };

  struct StructureCandidate {
    std::size_t d      = 1;
    std::size_t k_star = 1;
    std::size_t m      = 0;

    friend bool operator==(StructureCandidate const&,
                           StructureCandidate const&) = default;
  };

  // Per-k window data. rho_gap = rho_k - rho_{k-2} is set when row k - 2 is
  // in the profile; a consecutive pair {mu_k - 1, mu_k} in U_k together with
  // mu_k <= rho_{k-2} + 4 forces m >= rho_gap - 4. min_window_m is the
  // smallest m for which [lambda_k + m, rho_k - m] lies inside U_k.
  struct StructureTrendRow {
    std::size_t                k = 0;
    std::optional<std::size_t> rho_gap;
    std::optional<long>        implied_m;
    std::size_t                min_window_m = 0;
  };

  struct StructureUnionsReport {
    KRange                            range;
    StructureCaps                     caps;
    std::optional<StructureCandidate> candidate;
    std::vector<StructureTrendRow>    trend;
    // True when no candidate was found and implied_m grows strictly over
    // the rows that have it.
    bool failure_trend = false;
  };

  // Whether (d, k*, m) satisfies
  //   (k + dZ) ∩ [lambda_k + m, rho_k - m] ⊆ U_k ⊆ k + dZ
  // for every row with k >= k*.
  [[nodiscard]] bool satisfies_structure(UnionsProfile const&      profile,
                                         StructureCandidate const& c);

  // Lexicographically least (d, k*, m) with d in [1, d_max], k* in
  // [range.lo, kstar_max], m in [0, m_max]. Throws std::invalid_argument on
  // an inexact profile.
  [[nodiscard]] StructureUnionsReport
  unions_structure_verifier(UnionsProfile const& profile,
                            StructureCaps const& caps = {});

  struct MuGapRow {
    std::size_t                k = 0;
    std::optional<std::size_t> mu;     // unset: no consecutive pair in U_k
    std::optional<std::size_t> bound;  // rho_{k-2} + 4 when available
    [[nodiscard]] std::optional<bool> bound_holds() const;
  };

  // mu_k = largest u with {u - 1, u} ⊆ U_k. Throws std::invalid_argument on
  // an inexact profile.
  [[nodiscard]] std::vector<MuGapRow> mu_gap_analysis(
      UnionsProfile const& profile);

}  // namespace factorlab

#endif  // FACTORLAB_STRUCTURE_HPP_
