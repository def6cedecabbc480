#include "wlift/pipeline.hpp"

#include <algorithm>
#include <sstream>

namespace wlift {

Eigendata parse_eigendata(const std::string& text) {
  Eigendata out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw UsageError("eigendata item '" + item + "' is not of the form p:a");
    try {
      std::size_t used = 0;
      const std::int64_t p = std::stoll(item.substr(0, colon), &used);
      if (used != colon) throw std::invalid_argument(item);
      const Integer a(item.substr(colon + 1));
      if (!is_prime(p)) throw UsageError("eigendata prime " + std::to_string(p) + " is not prime");
      out.emplace_back(p, a);
    } catch (const UsageError&) {
      throw;
    } catch (const std::exception&) {
      throw UsageError("eigendata item '" + item + "' is not of the form p:a");
    }
  }
  if (out.empty()) throw UsageError("empty eigendata");
  return out;
}

std::string format_eigendata(const Eigendata& data) {
  std::string out;
  for (const auto& [p, a] : data) {
    if (!out.empty()) out += ",";
    out += std::to_string(p) + ":" + a.get_str();
  }
  return out;
}

std::vector<Eigensystem> sign_pattern_newforms(const std::vector<Eigensystem>& systems, const BrandtModule& module) {
  const ClassSet& cs = module.classes();
  std::vector<Eigensystem> out;
  for (const auto& e : systems) {
    if (e.eisenstein) continue;
    bool ok = atkin_lehner_sign(module, e.phi, cs.q) == -1;
    for (auto p : prime_factors(cs.m)) ok = ok && atkin_lehner_sign(module, e.phi, p) == 1;
    if (ok) out.push_back(e);
  }
  return out;
}

namespace {

bool eigensystems_congruent(const BrandtModule& module, const Eigensystem& a, const Eigensystem& b, std::int64_t ell) {
  return check_eigenvalue_congruence(module, a.phi, b.phi, ell).pass;
}

}  // namespace

NewformPair select_newform_pair(const BrandtModule& module, const JobSpec& spec) {
  NewformPair out;
  if (spec.eigen_f.has_value() != spec.eigen_g.has_value())
    throw UsageError("supply both --eigen-f and --eigen-g, or neither");
  if (spec.eigen_f) {
    out.phi_f = eigenvectors(module, *spec.eigen_f);
    out.phi_g_primitive = eigenvectors(module, *spec.eigen_g);
  } else {
    auto candidates = sign_pattern_newforms(discover_rational_eigensystems(module, module.max_index()), module);
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < candidates.size(); ++i)
      for (std::size_t j = i + 1; j < candidates.size(); ++j)
        if (candidates.size() == 2 || (spec.ell && eigensystems_congruent(module, candidates[i], candidates[j], *spec.ell)))
          pairs.emplace_back(i, j);
    if (pairs.size() != 1)
      throw UsageError("eigenform discovery found " + std::to_string(candidates.size()) +
                       " newforms with w_q=-1 and w_p=+1 for p|M and " + std::to_string(pairs.size()) +
                       " candidate pairs; supply --eigen-f and --eigen-g");
    auto [i, j] = pairs.front();
    if (pairing(module, candidates[i].phi, candidates[i].phi) < pairing(module, candidates[j].phi, candidates[j].phi))
      std::swap(i, j);
    out.phi_f = candidates[i].phi;
    out.phi_g_primitive = candidates[j].phi;
    out.discovered = true;
  }
  out.phi_g = out.phi_g_primitive;
  if (spec.ell) {
    if (auto c = reduction_multiplier(out.phi_f, out.phi_g_primitive, *spec.ell)) {
      out.g_multiplier = *c;
      for (auto& x : out.phi_g) x *= *c;
    }
  }
  return out;
}

std::int64_t brandt_index_bound(std::int64_t level) { return std::max<std::int64_t>(sturm_bound(2, level), 20); }

Pipeline run_pipeline(const JobSpec& spec) {
  if (spec.bound < 0) throw UsageError("bound must be non-negative");
  if (spec.ell && !is_prime(*spec.ell)) throw UsageError("ell must be prime, got " + std::to_string(*spec.ell));
  ClassSet cs = build_class_set(spec.q, spec.m);
  const std::int64_t index_bound = brandt_index_bound(cs.level());
  Pipeline out{spec, BrandtModule(std::move(cs), index_bound), {}, {}, {}, {}, {}};
  out.pair = select_newform_pair(out.module, spec);
  for (const auto& order : out.module.classes().left_orders) {
    out.lattices.push_back(trace_zero_lattice(order));
    out.thetas.push_back(theta_series(out.lattices.back(), spec.bound));
  }
  out.lift_f = waldspurger_lift(out.pair.phi_f, out.thetas);
  out.lift_g = waldspurger_lift(out.pair.phi_g, out.thetas);
  return out;
}

CongruenceReport congruence_report(const Pipeline& pipeline) {
  if (!pipeline.spec.ell) throw UsageError("congruence check needs --ell");
  const std::int64_t ell = *pipeline.spec.ell;
  const BrandtModule& module = pipeline.module;
  const auto& pair = pipeline.pair;
  CongruenceReport r;
  r.q = pipeline.spec.q;
  r.m = pipeline.spec.m;
  r.ell = ell;
  r.sturm = sturm_bound(2, module.level());
  r.eigenvalues = check_eigenvalue_congruence(module, pair.phi_f, pair.phi_g, ell);
  r.lift = check_lift_congruence(pipeline.lift_f, pipeline.lift_g, ell);
  r.norm_f = to_integer(pairing(module, pair.phi_f, pair.phi_f));
  r.norm_g = to_integer(pairing(module, pair.phi_g, pair.phi_g));
  r.ell_divides_norm_f = check_norm_divisibility(module, pair.phi_f, ell);
  r.ell_divides_norm_g = check_norm_divisibility(module, pair.phi_g, ell);
  r.hypotheses = check_hypotheses(module.level(), r.q, ell);
  r.irreducible_f = irreducibility_heuristic(module, pair.phi_f, ell, module.max_index());
  r.irreducible_g = irreducibility_heuristic(module, pair.phi_g, ell, module.max_index());
  return r;
}

nlohmann::ordered_json lift_metadata(const Pipeline& pipeline, const LiftResult& lift, const std::string& label) {
  const auto& s = pipeline.spec;
  Eigendata eigendata;
  for (auto p : primes_up_to(sturm_bound(2, pipeline.module.level()))) {
    const Rational a = eigenvalue(pipeline.module, lift.phi, p);
    eigendata.emplace_back(p, to_integer(a));
  }
  nlohmann::ordered_json phi = nlohmann::ordered_json::array();
  for (const auto& x : lift.phi) phi.push_back(to_integer(x).get_si());
  return {{"N", s.q * s.m},
          {"q", s.q},
          {"M", s.m},
          {"form", label},
          {"eigendata", format_eigendata(eigendata)},
          {"phi", phi},
          {"phi_scale", lift.primitive_scale.get_str()},
          {"sign_convention", "first nonzero entry of the primitive eigenvector is positive"}};
}

std::string lift_to_text(const Pipeline& pipeline, const LiftResult& lift, const std::string& label) {
  const auto& s = pipeline.spec;
  std::vector<std::string> header{"N=" + std::to_string(s.q * s.m) + " q=" + std::to_string(s.q) +
                                  " M=" + std::to_string(s.m) + " bound=" + std::to_string(lift.series.bound())};
  const auto metadata = lift_metadata(pipeline, lift, label);
  for (const auto& [key, value] : metadata.items()) {
    if (key == "N" || key == "q" || key == "M") continue;
    if (value.is_string()) {
      header.push_back(key + "=" + value.get<std::string>());
    } else if (value.is_array()) {
      std::string joined;
      for (const auto& x : value) joined += (joined.empty() ? "" : ",") + x.dump();
      header.push_back(key + "=" + joined);
    } else {
      header.push_back(key + "=" + value.dump());
    }
  }
  return to_text(lift.series, header);
}

std::string lift_to_json(const Pipeline& pipeline, const LiftResult& lift, const std::string& label) {
  auto j = to_json(lift.series);
  j["metadata"] = lift_metadata(pipeline, lift, label);
  return j.dump(2) + "\n";
}

}  // namespace wlift
