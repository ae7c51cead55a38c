#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "exalg/field.hpp"
#include "exalg/random.hpp"

namespace exalg {

/// Result of one randomized trial. `ok` is false on a violated conclusion.
struct TrialOutcome {
  bool ok = true;
  std::string detail;
};

/// Each check draws one configuration satisfying the theorem's hypotheses
/// (rejection sampling, GeneratorExhausted after 1000 draws) and tests the
/// conclusion.
TrialOutcome check_pappus_proj(const FieldSpec& field, Rng& rng);
TrialOutcome check_pappus_affine(const FieldSpec& field, Rng& rng);
TrialOutcome check_desargues_proj(const FieldSpec& field, Rng& rng);
TrialOutcome check_desargues_affine(const FieldSpec& field, Rng& rng);
/// Product −1 ⇔ collinear, on transversal and on arbitrary side points.
TrialOutcome check_menelaus(const FieldSpec& field, Rng& rng);
/// Product +1 ⇔ concurrent or parallel cevians, on concurrent, parallel and
/// arbitrary side points.
TrialOutcome check_ceva(const FieldSpec& field, Rng& rng);
/// CX ∥ AB ⇔ WC/WA = WX/WB, on parallel and arbitrary X.
TrialOutcome check_similarity(const FieldSpec& field, Rng& rng);
TrialOutcome check_hodge_identities(const FieldSpec& field, Rng& rng);
TrialOutcome check_jacobi(const FieldSpec& field, Rng& rng);
TrialOutcome check_grassmann(const FieldSpec& field, Rng& rng);
TrialOutcome check_regressive_eq(const FieldSpec& field, Rng& rng);

struct TheoremReport {
  std::string name;
  std::string field;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::uint64_t passed = 0;
  std::vector<std::string> failures;  // first few, with trial index

  bool ok() const noexcept { return passed == trials; }
  /// `<name> field=<f> trials=<n> seed=<s>: <passed>/<trials>`.
  std::string summary() const;
};

/// Names accepted by verify_theorem.
const std::vector<std::string>& theorem_names();

/// Runs `trials` trials; trial i uses trial_rng(seed, i). Throws MalformedInput
/// for an unknown name.
TheoremReport verify_theorem(std::string_view name, const FieldSpec& field, std::uint64_t trials,
                             std::uint64_t seed);

}  // namespace exalg
