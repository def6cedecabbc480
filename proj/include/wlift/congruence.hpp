#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wlift/brandt.hpp"
#include "wlift/lift.hpp"

namespace wlift {

/// (k N / 12) prod_{p | N} (1 + 1/p), rounded up to an integer.
std::int64_t sturm_bound(int k, std::int64_t level);

struct EigenvalueRow {
  std::int64_t p = 0;
  Integer a_f;
  Integer a_g;
  bool agrees = false;
};

struct EigenvalueCheck {
  bool pass = false;
  std::int64_t bound = 0;
  std::optional<std::int64_t> first_failure;
  std::vector<EigenvalueRow> rows;
};

/// Compares T_p / U_p eigenvalues mod ell for every prime p <= sturm_bound(2, N).
EigenvalueCheck check_eigenvalue_congruence(const BrandtModule& module, const RationalVector& phi_f,
                                            const RationalVector& phi_g, std::int64_t ell);

struct LiftCheck {
  bool pass = false;
  long bound = 0;
  std::optional<std::int64_t> multiplier;       // least c in [1, ell) that works
  std::optional<long> first_failure;            // least n after which no c survives
  bool both_vanish_mod_ell = false;             // the degenerate 0 == 0 case
};

/// Searches c in (Z/ell)^x with a(Wf, n) == c a(Wg, n) mod ell for all n.
LiftCheck check_lift_congruence(const QSeries& wf, const QSeries& wg, std::int64_t ell);
LiftCheck check_lift_congruence(const LiftResult& wf, const LiftResult& wg, std::int64_t ell);

/// ell | <phi, phi>.
bool check_norm_divisibility(const BrandtModule& module, const RationalVector& phi, std::int64_t ell);

struct HypothesisFlags {
  bool ell_odd = false;        // ell > 2
  bool coprime_or_q = false;   // ell does not divide N (q - 1), or ell = q
  bool hold() const { return ell_odd && coprime_or_q; }
};

HypothesisFlags check_hypotheses(std::int64_t level, std::int64_t q, std::int64_t ell);

struct IrreducibilityVerdict {
  bool certified = false;
  std::optional<std::int64_t> witness;  // p with a_p != 1 + p mod ell
};

/// Certifies irreducibility of the mod-ell representation when some p <= bound
/// with p not dividing ell N has a_p != 1 + p (mod ell).
IrreducibilityVerdict irreducibility_heuristic(const BrandtModule& module, const RationalVector& phi,
                                               std::int64_t ell, std::int64_t bound);

/// Least |c| (positive on ties) with c a unit mod ell and phi_f == c phi_g
/// entrywise mod ell; nullopt when the reductions are not proportional.
std::optional<Integer> reduction_multiplier(const RationalVector& phi_f, const RationalVector& phi_g,
                                            std::int64_t ell);

struct CongruenceReport {
  std::int64_t q = 0;
  std::int64_t m = 0;
  std::int64_t ell = 0;
  std::int64_t sturm = 0;
  EigenvalueCheck eigenvalues;
  LiftCheck lift;
  bool ell_divides_norm_f = false;
  bool ell_divides_norm_g = false;
  Integer norm_f;
  Integer norm_g;
  HypothesisFlags hypotheses;
  IrreducibilityVerdict irreducible_f;
  IrreducibilityVerdict irreducible_g;

  /// Eigenvalue, lift and norm checks all pass.
  bool congruence_observed() const;
  /// congruence_observed() and the hypotheses hold.
  bool all_pass() const;

  std::string to_json() const;
  std::string to_text() const;
};

}  // namespace wlift
