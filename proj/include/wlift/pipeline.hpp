#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wlift/brandt.hpp"
#include "wlift/congruence.hpp"
#include "wlift/lift.hpp"
#include "wlift/theta.hpp"

namespace wlift {

/// Parses "p:a,p:a,..." (a may be negative).
Eigendata parse_eigendata(const std::string& text);
std::string format_eigendata(const Eigendata& data);

struct JobSpec {
  std::int64_t q = 0;
  std::int64_t m = 1;
  std::optional<std::int64_t> ell;
  long bound = 100;
  std::optional<Eigendata> eigen_f;
  std::optional<Eigendata> eigen_g;
};

/// Cuspidal rational eigensystems with w_q = -1 and w_p = +1 for every p | M.
std::vector<Eigensystem> sign_pattern_newforms(const std::vector<Eigensystem>& systems, const BrandtModule& module);

struct NewformPair {
  RationalVector phi_f;            // primitive
  RationalVector phi_g;            // phi_g_primitive times g_multiplier
  RationalVector phi_g_primitive;
  Integer g_multiplier = 1;        // reduction_multiplier(phi_f, phi_g_primitive, ell), or 1
  bool discovered = false;
};

/// Eigenvectors from user eigendata when given, otherwise from discovery:
/// the unique pair of sign-pattern newforms (ordered by decreasing
/// <phi, phi>), or the unique such pair congruent mod ell.
NewformPair select_newform_pair(const BrandtModule& module, const JobSpec& spec);

struct Pipeline {
  JobSpec spec;
  BrandtModule module;
  std::vector<TernaryLattice> lattices;
  std::vector<QSeries> thetas;
  NewformPair pair;
  LiftResult lift_f;
  LiftResult lift_g;
};

/// Index bound for Brandt counts: covers the Sturm bound and small primes.
std::int64_t brandt_index_bound(std::int64_t level);

/// classes -> Brandt module -> eigenvectors -> theta series -> lifts.
Pipeline run_pipeline(const JobSpec& spec);

/// Congruence report for a computed pipeline; spec.ell must be set.
CongruenceReport congruence_report(const Pipeline& pipeline);

/// Metadata block {N, q, M, form, eigendata, phi, phi_scale, sign_convention}
/// for an exported lift; eigendata lists the eigenvalue at every prime up to
/// the Sturm bound.
nlohmann::ordered_json lift_metadata(const Pipeline& pipeline, const LiftResult& lift, const std::string& label);

/// Text export: "# N=.. q=.. M=.. bound=.." then one "# key=value" line per
/// metadata entry, then the coefficients.
std::string lift_to_text(const Pipeline& pipeline, const LiftResult& lift, const std::string& label);
/// JSON export: the series JSON plus a "metadata" object.
std::string lift_to_json(const Pipeline& pipeline, const LiftResult& lift, const std::string& label);

}  // namespace wlift
