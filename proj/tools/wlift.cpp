#include <fstream>
#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "json.hpp"
#include "wlift/pipeline.hpp"

using namespace wlift;
using nlohmann::ordered_json;

namespace {

enum ExitCode { kPass = 0, kFail = 1, kUsage = 2, kInternal = 3 };

struct Options {
  std::int64_t q = 0;
  std::int64_t m = 1;
  std::int64_t ell = 0;
  long bound = 100;
  std::string eigen_f;
  std::string eigen_g;
  std::string eigen;
  std::vector<std::int64_t> primes;
  bool json = false;
  bool discover = false;
  std::string out;
};

JobSpec to_spec(const Options& o) {
  JobSpec s;
  s.q = o.q;
  s.m = o.m;
  if (o.ell != 0) s.ell = o.ell;
  s.bound = o.bound;
  if (!o.eigen_f.empty()) s.eigen_f = parse_eigendata(o.eigen_f);
  if (!o.eigen_g.empty()) s.eigen_g = parse_eigendata(o.eigen_g);
  return s;
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw UsageError("cannot write " + o.out);
  f << text;
}

ordered_json rational_matrix_json(const RatMatrix& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    ordered_json row = ordered_json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).get_str());
    rows.push_back(row);
  }
  return rows;
}

ordered_json integer_matrix_json(const IntMatrix& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    ordered_json row = ordered_json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).get_si());
    rows.push_back(row);
  }
  return rows;
}

ordered_json vector_json(const RationalVector& v) {
  ordered_json out = ordered_json::array();
  for (const auto& x : v) {
    if (is_integral(x))
      out.push_back(to_integer(x).get_si());
    else
      out.push_back(x.get_str());
  }
  return out;
}

std::string vector_text(const RationalVector& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
  return s + "]";
}

int cmd_classes(const Options& o) {
  const ClassSet cs = build_class_set(o.q, o.m);
  std::map<int, int> multiset;
  for (int w : cs.weights) ++multiset[w];
  const Rational expected = eichler_mass(o.q, o.m);
  if (o.json) {
    ordered_json classes = ordered_json::array();
    for (std::size_t i = 0; i < cs.size(); ++i)
      classes.push_back({{"ideal_basis", rational_matrix_json(cs.ideals[i].lattice.lattice().basis())},
                         {"ideal_norm", cs.ideals[i].norm.get_str()},
                         {"left_order_basis", rational_matrix_json(cs.left_orders[i].lattice().basis())},
                         {"weight", cs.weights[i]}});
    ordered_json j{{"presentation", {{"a", cs.algebra.a}, {"b", cs.algebra.b}}},
                   {"q", o.q},
                   {"M", o.m},
                   {"N", cs.level()},
                   {"h", cs.size()},
                   {"order_basis", rational_matrix_json(cs.order.lattice.lattice().basis())},
                   {"mass", cs.mass().get_str()},
                   {"expected_mass", expected.get_str()},
                   {"neighbor_prime", cs.neighbor_prime},
                   {"classes", classes}};
    emit(o, j.dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << "N=" << cs.level() << " q=" << o.q << " M=" << o.m << " presentation=(" << cs.algebra.a << ","
       << cs.algebra.b << ")\n";
    os << "h=" << cs.size() << "\n";
    os << "weights:";
    for (auto [w, n] : multiset) os << " " << w << "x" << n;
    os << "\nmass=" << cs.mass() << " expected=" << expected << " " << (cs.mass() == expected ? "ok" : "MISMATCH")
       << "\n";
    emit(o, os.str());
  }
  return cs.mass() == expected ? kPass : kInternal;
}

int cmd_brandt(const Options& o) {
  ClassSet cs = build_class_set(o.q, o.m);
  std::vector<std::int64_t> primes = o.primes;
  if (primes.empty()) primes = primes_up_to(20);
  std::int64_t top = 2;
  for (auto p : primes) {
    if (!is_prime(p)) throw UsageError("not a prime: " + std::to_string(p));
    top = std::max(top, p);
  }
  const BrandtModule module(std::move(cs), top);
  ordered_json all = ordered_json::array();
  std::ostringstream os;
  for (auto p : primes) {
    const HeckeMatrix t = module.brandt_matrix(p);
    const char* kind = t.kind == HeckeKind::Tp ? "T" : "U";
    all.push_back({{"p", p}, {"kind", kind}, {"entries", integer_matrix_json(t.entries)}});
    os << kind << "_" << p << ":\n";
    for (std::size_t r = 0; r < t.entries.rows(); ++r) {
      for (std::size_t c = 0; c < t.entries.cols(); ++c) os << (c ? " " : "") << t.entries(r, c);
      os << "\n";
    }
  }
  emit(o, o.json ? all.dump(2) + "\n" : os.str());
  return kPass;
}

int cmd_eigen(const Options& o) {
  ClassSet cs = build_class_set(o.q, o.m);
  const BrandtModule module(std::move(cs), brandt_index_bound(o.q * o.m));
  std::vector<Eigensystem> systems;
  if (o.discover) {
    systems = discover_rational_eigensystems(module, module.max_index());
  } else {
    if (o.eigen.empty()) throw UsageError("eigen: give --eigen p:a,... or --discover");
    Eigensystem e;
    e.phi = eigenvectors(module, parse_eigendata(o.eigen));
    for (auto p : primes_up_to(module.max_index())) e.eigenvalues.emplace_back(p, to_integer(eigenvalue(module, e.phi, p)));
    systems.push_back(e);
  }
  ordered_json all = ordered_json::array();
  std::ostringstream os;
  for (const auto& e : systems) {
    const Rational norm = pairing(module, e.phi, e.phi);
    all.push_back({{"eigendata", format_eigendata(e.eigenvalues)},
                   {"entries", vector_json(e.phi)},
                   {"pairing", norm.get_str()},
                   {"eisenstein", e.eisenstein}});
    os << (e.eisenstein ? "eisenstein " : "cusp ") << vector_text(e.phi) << " <phi,phi>=" << norm << "\n  "
       << format_eigendata(e.eigenvalues) << "\n";
  }
  emit(o, o.json ? all.dump(2) + "\n" : os.str());
  return kPass;
}

int cmd_lift(const Options& o) {
  const Pipeline pl = run_pipeline(to_spec(o));
  auto render = [&](const LiftResult& l, const std::string& label) {
    return o.json ? lift_to_json(pl, l, label) : lift_to_text(pl, l, label);
  };
  if (o.out.empty()) {
    std::cout << render(pl.lift_f, "f") << render(pl.lift_g, "g");
  } else {
    const std::string ext = o.json ? ".json" : ".txt";
    for (const auto& [lift, label] : {std::pair{&pl.lift_f, "f"}, std::pair{&pl.lift_g, "g"}}) {
      const std::string path = o.out + "-" + label + ext;
      std::ofstream f(path);
      if (!f) throw UsageError("cannot write " + path);
      f << render(*lift, label);
    }
  }
  return kPass;
}

int cmd_check(const Options& o) {
  if (o.ell == 0) throw UsageError("check needs --ell");
  const Pipeline pl = run_pipeline(to_spec(o));
  const CongruenceReport r = congruence_report(pl);
  emit(o, o.json ? r.to_json() : r.to_text());
  return r.all_pass() ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Brandt modules, ternary theta series and Waldspurger lifts for definite quaternion algebras"};
  app.require_subcommand(1);
  Options o;

  auto level_flags = [&](CLI::App* c) {
    c->add_option("--q", o.q, "prime ramified in the quaternion algebra")->required();
    c->add_option("--m", o.m, "square-free level of the Eichler order away from q")->default_val(1);
    c->add_flag("--json", o.json, "emit JSON");
    c->add_option("--out", o.out, "output path (lift: file prefix)");
  };
  auto pair_flags = [&](CLI::App* c) {
    c->add_option("--bound", o.bound, "q-expansion truncation")->default_val(100);
    c->add_option("--eigen-f", o.eigen_f, "eigendata for f as p:a,p:a,...");
    c->add_option("--eigen-g", o.eigen_g, "eigendata for g as p:a,p:a,...");
  };

  auto* classes = app.add_subcommand("classes", "right ideal classes of the Eichler order");
  level_flags(classes);
  auto* brandt = app.add_subcommand("brandt", "Hecke matrices on the Brandt module");
  level_flags(brandt);
  brandt->add_option("--p", o.primes, "primes (default: all up to 20)");
  auto* eigen = app.add_subcommand("eigen", "eigenvectors from eigendata, or all rational eigensystems");
  level_flags(eigen);
  eigen->add_option("--eigen", o.eigen, "eigendata as p:a,p:a,...");
  eigen->add_flag("--discover", o.discover, "exhaustive rational eigensystem search");
  auto* lift = app.add_subcommand("lift", "Waldspurger lifts of the pair (f, g)");
  level_flags(lift);
  pair_flags(lift);
  lift->add_option("--ell", o.ell, "prime used to align the scaling of phi_g with phi_f");
  auto* check = app.add_subcommand("check", "congruence checks mod ell");
  level_flags(check);
  pair_flags(check);
  check->add_option("--ell", o.ell, "congruence prime")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*classes) return cmd_classes(o);
    if (*brandt) return cmd_brandt(o);
    if (*eigen) return cmd_eigen(o);
    if (*lift) return cmd_lift(o);
    if (*check) return cmd_check(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}
