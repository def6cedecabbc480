#include "doctest.h"
#include "fixtures.hpp"

using namespace wlift;
using namespace wlift::testing;

namespace {

IntMatrix weight_diagonal(const ClassSet& cs) {
  IntMatrix g(cs.size(), cs.size());
  for (std::size_t i = 0; i < cs.size(); ++i) g(i, i) = cs.weights[i];
  return g;
}

void check_hecke_properties(const BrandtModule& module) {
  const ClassSet& cs = module.classes();
  const IntMatrix g = weight_diagonal(cs);
  std::vector<IntMatrix> ts;
  for (auto p : primes_up_to(20)) {
    if (cs.level() % p == 0) continue;
    CAPTURE(p);
    const HeckeMatrix t = module.brandt_matrix(p);
    CHECK(t.kind == HeckeKind::Tp);
    for (std::size_t j = 0; j < cs.size(); ++j) {
      Integer col = 0;
      for (std::size_t i = 0; i < cs.size(); ++i) col += t.entries(i, j);
      CHECK(col == p + 1);
    }
    const IntMatrix gt = g * t.entries;
    CHECK(gt == gt.transpose());
    ts.push_back(t.entries);
  }
  for (std::size_t a = 0; a < ts.size(); ++a)
    for (std::size_t b = a + 1; b < ts.size(); ++b) CHECK(ts[a] * ts[b] == ts[b] * ts[a]);
  // the weighted counting vector (1 / w_i) is the Eisenstein eigenvector
  RationalVector eis;
  for (int w : cs.weights) eis.emplace_back(1, w);
  for (auto p : primes_up_to(20))
    if (cs.level() % p != 0) CHECK(eigenvalue(module, eis, p) == p + 1);
}

}  // namespace

TEST_CASE("Hecke operators at level 170") { check_hecke_properties(pipeline_170().module); }
TEST_CASE("Hecke operators at level 174") { check_hecke_properties(pipeline_174().module); }

TEST_CASE("Hecke operators at small levels") {
  for (auto [q, m] : std::vector<std::pair<std::int64_t, std::int64_t>>{{11, 1}, {37, 1}, {2, 15}, {5, 6}, {7, 2}})
    check_hecke_properties(BrandtModule(build_class_set(q, m), 20));
}

TEST_CASE("element counts agree with explicit neighbor enumeration") {
  for (auto [q, m] : std::vector<std::pair<std::int64_t, std::int64_t>>{{11, 1}, {37, 1}, {5, 6}, {3, 58}}) {
    const BrandtModule module(build_class_set(q, m), 7);
    for (auto p : primes_up_to(7)) {
      if ((q * m) % p == 0) continue;
      CAPTURE(q);
      CAPTURE(p);
      CHECK(neighbor_matrix(module.classes(), p) == module.brandt_matrix(p).entries);
    }
  }
}

TEST_CASE("level 37: the two newforms") {
  const BrandtModule module(build_class_set(37, 1), 37);
  CHECK(module.dimension() == 3);
  // 37a has a_2 = -2, 37b has a_2 = 0
  const RationalVector a = eigenvectors(module, {{2, -2}});
  const RationalVector b = eigenvectors(module, {{2, 0}});
  CHECK(eigenvalue(module, a, 3) == -3);
  CHECK(eigenvalue(module, b, 3) == 1);
  CHECK(atkin_lehner_sign(module, a, 37) == 1);
  CHECK(atkin_lehner_sign(module, b, 37) == -1);
  CHECK(pairing(module, a, b) == 0);
  CHECK(is_degree_zero(a));
}

TEST_CASE("eigenvector errors") {
  const BrandtModule& module = pipeline_174().module;
  CHECK_THROWS_WITH_AS(eigenvectors(module, {{5, 100}}), doctest::Contains("no such eigenform"), UsageError);
  CHECK_THROWS_WITH_AS(eigenvectors(module, {{23, 0}}), doctest::Contains("underdetermined"), UsageError);
  RationalVector not_eigen(module.dimension(), Rational(0));
  not_eigen[0] = 1;
  CHECK_THROWS_AS(eigenvalue(module, not_eigen, 5), UsageError);
}

TEST_CASE("quaternionic Atkin-Lehner involutions match -U_p on newforms") {
  for (const Pipeline* pl : {&pipeline_170(), &pipeline_174()}) {
    const BrandtModule& module = pl->module;
    for (auto p : prime_factors(module.level())) {
      CAPTURE(p);
      const IntMatrix w = atkin_lehner_involution(module, p);
      CHECK(w * w == IntMatrix::identity(module.dimension()));
      for (const auto& e : discover_rational_eigensystems(module, 20)) {
        if (e.eisenstein) continue;
        const RationalVector image = to_rational(w).apply(e.phi);
        // W_p acts by w_p for p | M and by -w_q = a_q at the ramified prime
        const int sign = atkin_lehner_sign(module, e.phi, p) * (p == module.classes().q ? -1 : 1);
        RationalVector expected = e.phi;
        for (auto& x : expected) x *= sign;
        CHECK(image == expected);
      }
    }
  }
}

TEST_CASE("U_p column sums at primes dividing M") {
  const BrandtModule& module = pipeline_170().module;
  for (std::int64_t p : {2, 5}) {
    const HeckeMatrix u = module.brandt_matrix(p);
    CHECK(u.kind == HeckeKind::Up);
    for (std::size_t j = 0; j < module.dimension(); ++j) {
      Integer col = 0;
      for (std::size_t i = 0; i < module.dimension(); ++i) col += u.entries(i, j);
      CHECK(col == 2 * p + 1);
    }
  }
  const HeckeMatrix uq = module.brandt_matrix(17);
  CHECK(uq.entries * uq.entries == IntMatrix::identity(module.dimension()));
}

TEST_CASE("discovery splits the Brandt module into rational eigenlines") {
  const BrandtModule& module = pipeline_174().module;
  const auto systems = discover_rational_eigensystems(module, 20);
  int eisenstein = 0;
  for (const auto& e : systems) {
    if (e.eisenstein) ++eisenstein;
    else CHECK(is_degree_zero(e.phi));
  }
  CHECK(eisenstein == 1);
  for (std::size_t a = 0; a < systems.size(); ++a)
    for (std::size_t b = a + 1; b < systems.size(); ++b) CHECK(pairing(module, systems[a].phi, systems[b].phi) == 0);
}
