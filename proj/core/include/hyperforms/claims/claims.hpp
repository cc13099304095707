#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "hyperforms/hyperform/construct.hpp"
#include "hyperforms/symexpr/zero.hpp"

namespace hyperforms::claims {

// Reading of a scalar coefficient written directly against a form: as the
// bare function (f ^ w stays degree of w) or as its differential (df ^ w).
enum class CoeffKind { Differential, Function };

// Side the coefficient factor multiplies from.
enum class MulOrder { Left, Right };

enum class ClaimStatus { HoldsExact, HoldsNumeric, Fails, IllFormed, Underspecified };

const char* coeff_kind_name(CoeffKind k);
const char* mul_order_name(MulOrder o);
const char* claim_status_name(ClaimStatus s);

struct ConventionConfig {
  CoeffKind coeff_kind = CoeffKind::Differential;
  MulOrder mul_order = MulOrder::Left;
  hyperform::BVariant b_variant = hyperform::BVariant::Plain;
  hyperalg::Backend backend = hyperalg::Backend::CayleyDickson;
  std::uint64_t seed = 42;
  int trials = 32;
};

// One verifiable statement.  The anchor is the statement itself (in the
// m = 3 notation where the general shape needs an instance); applicable_m
// lists the ranks it is stated for.  The grid_* flags mark which
// convention axes genuinely change the statement's meaning: the suite
// re-verifies once per combination.
struct ClaimInfo {
  std::string id;
  std::string anchor;
  std::set<int> applicable_m;
  bool grid_coeff_kind = false;
  bool grid_mul_order = false;
  bool grid_b_variant = false;
  std::string notes;
};

struct Witness {
  symexpr::Point point;  // empty when the witness is purely symbolic
  std::string term;      // offending (or, for nonvanishing claims, live) term
};

struct ClaimResult {
  std::string id;
  ClaimStatus status = ClaimStatus::Underspecified;
  double max_residual = 0.0;  // largest sampled |residual| when numeric evidence was used
  std::optional<Witness> witness;
  std::string detail;  // per-equation outcomes, degree reports, pattern notes
  long long ms = 0;
  ConventionConfig convention;
};

const std::vector<ClaimInfo>& registry();
const ClaimInfo& claim_info(const std::string& id);  // throws std::out_of_range on bad id

// Evaluate one claim for one convention cell.  Never throws on a decidable
// configuration: ill-posed readings come back IllFormed, potential sets a
// statement does not cover come back Underspecified.
ClaimResult verify(const std::string& id, const hyperform::PotentialSet& P,
                   const ConventionConfig& cfg);

// Max |coefficientwise derivative of F - transcribed formula| over sampled
// points (central differences, step h).  Feeds C12.  When worst is given it
// receives the argmax point.
double check_dF_consistency(const hyperform::PotentialSet& P, const ConventionConfig& cfg,
                            double h = 1e-5, int points = 24,
                            symexpr::Point* worst = nullptr);

struct SuiteOptions {
  hyperform::PotentialSet P;
  ConventionConfig base;
  bool timing = false;  // when false every ms field is 0 so reports are byte-stable
};

// Runs every claim applicable at P.m over its convention grid.
nlohmann::ordered_json run_suite(const SuiteOptions& opt);

// Human digest of run_suite's JSON; carries no extra information.
std::string render_report_text(const nlohmann::ordered_json& report);

}  // namespace hyperforms::claims
