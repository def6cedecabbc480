#include "wlift/congruence.hpp"

#include "json.hpp"
#include <sstream>

namespace wlift {

namespace {

Integer mod_ell(const Integer& x, std::int64_t ell) {
  Integer r = x % ell;
  if (r < 0) r += ell;
  return r;
}

Integer integral_eigenvalue(const BrandtModule& module, const RationalVector& phi, std::int64_t p) {
  const Rational a = eigenvalue(module, phi, p);
  if (!is_integral(a)) throw UsageError("non-integral eigenvalue at p=" + std::to_string(p));
  return to_integer(a);
}

void require_prime_ell(std::int64_t ell) {
  if (!is_prime(ell)) throw UsageError("ell must be prime, got " + std::to_string(ell));
}

}  // namespace

std::int64_t sturm_bound(int k, std::int64_t level) {
  if (k <= 0 || level <= 0) throw UsageError("sturm_bound: weight and level must be positive");
  Rational b(Integer(k) * level, 12);
  for (auto p : prime_factors(level)) b *= Rational(p + 1, p);
  b.canonicalize();
  return ceil_div(b).get_si();
}

EigenvalueCheck check_eigenvalue_congruence(const BrandtModule& module, const RationalVector& phi_f,
                                            const RationalVector& phi_g, std::int64_t ell) {
  require_prime_ell(ell);
  EigenvalueCheck out;
  out.bound = sturm_bound(2, module.level());
  if (module.max_index() < out.bound)
    throw UsageError("check_eigenvalue_congruence: Brandt module computed only to " +
                     std::to_string(module.max_index()) + ", Sturm bound is " + std::to_string(out.bound));
  out.pass = true;
  for (auto p : primes_up_to(out.bound)) {
    EigenvalueRow row{p, integral_eigenvalue(module, phi_f, p), integral_eigenvalue(module, phi_g, p), false};
    row.agrees = mod_ell(row.a_f - row.a_g, ell) == 0;
    if (!row.agrees && out.pass) {
      out.pass = false;
      out.first_failure = p;
    }
    out.rows.push_back(row);
  }
  return out;
}

LiftCheck check_lift_congruence(const QSeries& wf, const QSeries& wg, std::int64_t ell) {
  require_prime_ell(ell);
  if (wf.bound() != wg.bound())
    throw UsageError("check_lift_congruence: bounds differ (" + std::to_string(wf.bound()) + " vs " +
                     std::to_string(wg.bound()) + ")");
  LiftCheck out;
  out.bound = wf.bound();
  std::vector<std::int64_t> alive;
  for (std::int64_t c = 1; c < ell; ++c) alive.push_back(c);
  out.both_vanish_mod_ell = true;
  for (long n = 0; n <= out.bound; ++n) {
    const Integer f = mod_ell(wf[n], ell), g = mod_ell(wg[n], ell);
    if (f != 0 || g != 0) out.both_vanish_mod_ell = false;
    std::erase_if(alive, [&](std::int64_t c) { return mod_ell(f - c * g, ell) != 0; });
    if (alive.empty()) {
      out.first_failure = n;
      return out;
    }
  }
  out.pass = true;
  out.multiplier = alive.front();
  return out;
}

LiftCheck check_lift_congruence(const LiftResult& wf, const LiftResult& wg, std::int64_t ell) {
  return check_lift_congruence(wf.series, wg.series, ell);
}

bool check_norm_divisibility(const BrandtModule& module, const RationalVector& phi, std::int64_t ell) {
  const Rational n = pairing(module, phi, phi);
  if (!is_integral(n)) throw UsageError("check_norm_divisibility: phi must be integral");
  return mod_ell(to_integer(n), ell) == 0;
}

HypothesisFlags check_hypotheses(std::int64_t level, std::int64_t q, std::int64_t ell) {
  HypothesisFlags out;
  out.ell_odd = ell > 2;
  out.coprime_or_q = ell == q || (Integer(level) * (q - 1)) % ell != 0;
  return out;
}

IrreducibilityVerdict irreducibility_heuristic(const BrandtModule& module, const RationalVector& phi,
                                               std::int64_t ell, std::int64_t bound) {
  IrreducibilityVerdict out;
  for (auto p : primes_up_to(std::min(bound, module.max_index()))) {
    if (p == ell || module.level() % p == 0) continue;
    if (mod_ell(integral_eigenvalue(module, phi, p) - (p + 1), ell) != 0) {
      out.certified = true;
      out.witness = p;
      break;
    }
  }
  return out;
}

std::optional<Integer> reduction_multiplier(const RationalVector& phi_f, const RationalVector& phi_g,
                                            std::int64_t ell) {
  if (phi_f.size() != phi_g.size()) throw UsageError("reduction_multiplier: length mismatch");
  for (const auto* v : {&phi_f, &phi_g})
    for (const auto& x : *v)
      if (!is_integral(x)) throw UsageError("reduction_multiplier: vectors must be integral");
  for (std::int64_t k = 1; k <= ell / 2; ++k) {
    for (std::int64_t c : {k, -k}) {
      bool ok = true;
      for (std::size_t i = 0; i < phi_f.size() && ok; ++i)
        ok = mod_ell(to_integer(phi_f[i]) - c * to_integer(phi_g[i]), ell) == 0;
      if (ok) return Integer(c);
    }
  }
  return std::nullopt;
}

bool CongruenceReport::congruence_observed() const {
  return eigenvalues.pass && lift.pass && ell_divides_norm_f && ell_divides_norm_g;
}

bool CongruenceReport::all_pass() const { return congruence_observed() && hypotheses.hold(); }

std::string CongruenceReport::to_json() const {
  using nlohmann::ordered_json;
  ordered_json j;
  j["q"] = q;
  j["M"] = m;
  j["N"] = q * m;
  j["ell"] = ell;
  j["sturm_bound"] = sturm;
  ordered_json rows = ordered_json::array();
  for (const auto& r : eigenvalues.rows)
    rows.push_back({{"p", r.p}, {"a_f", r.a_f.get_str()}, {"a_g", r.a_g.get_str()}, {"agrees", r.agrees}});
  j["eigenvalue_check"] = {{"pass", eigenvalues.pass},
                           {"bound", eigenvalues.bound},
                           {"first_failing_prime", eigenvalues.first_failure ? ordered_json(*eigenvalues.first_failure)
                                                                             : ordered_json(nullptr)},
                           {"rows", rows}};
  j["lift_check"] = {{"pass", lift.pass},
                     {"bound", lift.bound},
                     {"multiplier", lift.multiplier ? ordered_json(*lift.multiplier) : ordered_json(nullptr)},
                     {"first_failing_exponent", lift.first_failure ? ordered_json(*lift.first_failure)
                                                                   : ordered_json(nullptr)},
                     {"both_vanish_mod_ell", lift.both_vanish_mod_ell}};
  j["norm_divisibility"] = {{"norm_f", norm_f.get_str()},
                            {"norm_g", norm_g.get_str()},
                            {"ell_divides_norm_f", ell_divides_norm_f},
                            {"ell_divides_norm_g", ell_divides_norm_g}};
  j["hypothesis_flags"] = {{"ell_gt_2", hypotheses.ell_odd},
                           {"ell_coprime_to_N_q_minus_1_or_ell_eq_q", hypotheses.coprime_or_q},
                           {"hold", hypotheses.hold()}};
  auto irr = [](const IrreducibilityVerdict& v) {
    return ordered_json{{"certified", v.certified},
                        {"witness_prime", v.witness ? ordered_json(*v.witness) : ordered_json(nullptr)}};
  };
  j["irreducibility"] = {{"f", irr(irreducible_f)}, {"g", irr(irreducible_g)}};
  j["congruence_observed"] = congruence_observed();
  j["verdict"] = all_pass() ? "pass" : congruence_observed() ? "congruence observed outside hypotheses" : "fail";
  return j.dump(2) + "\n";
}

std::string CongruenceReport::to_text() const {
  std::ostringstream os;
  auto mark = [](bool b) { return b ? "pass" : "FAIL"; };
  os << "N=" << q * m << " q=" << q << " M=" << m << " ell=" << ell << " sturm_bound=" << sturm << "\n";
  os << "eigenvalue congruence up to " << eigenvalues.bound << ": " << mark(eigenvalues.pass);
  if (eigenvalues.first_failure) os << " (first failure at p=" << *eigenvalues.first_failure << ")";
  os << "\n";
  for (const auto& r : eigenvalues.rows)
    os << "  p=" << r.p << " a_f=" << r.a_f << " a_g=" << r.a_g << (r.agrees ? "" : "  <- differs") << "\n";
  os << "lift congruence through n=" << lift.bound << ": " << mark(lift.pass);
  if (lift.multiplier) os << " (c=" << *lift.multiplier << ")";
  if (lift.first_failure) os << " (first failure at n=" << *lift.first_failure << ")";
  if (lift.both_vanish_mod_ell) os << " [both lifts vanish mod ell]";
  os << "\n";
  os << "norm divisibility: <phi_f,phi_f>=" << norm_f << " " << mark(ell_divides_norm_f) << ", <phi_g,phi_g>=" << norm_g
     << " " << mark(ell_divides_norm_g) << "\n";
  os << "hypotheses: ell>2 " << mark(hypotheses.ell_odd) << ", ell does not divide N(q-1) or ell=q "
     << mark(hypotheses.coprime_or_q) << "\n";
  auto irr = [&](const char* name, const IrreducibilityVerdict& v) {
    os << "irreducibility (" << name << "): " << (v.certified ? "certified" : "not certified");
    if (v.witness) os << " via p=" << *v.witness;
    os << "\n";
  };
  irr("f", irreducible_f);
  irr("g", irreducible_g);
  os << "verdict: "
     << (all_pass() ? "pass" : congruence_observed() ? "congruence observed outside hypotheses" : "fail") << "\n";
  return os.str();
}

}  // namespace wlift
