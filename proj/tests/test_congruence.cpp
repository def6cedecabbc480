#include "doctest.h"
#include "fixtures.hpp"

using namespace wlift;
using namespace wlift::testing;

TEST_CASE("Sturm bounds") {
  CHECK(sturm_bound(2, 170) == 54);
  CHECK(sturm_bound(2, 174) == 60);
  CHECK(sturm_bound(2, 11) == 2);
  CHECK(sturm_bound(2, 1) == 1);
  CHECK(sturm_bound(4, 37) == 13);
}

TEST_CASE("eigenvalue congruences") {
  const Pipeline& a = pipeline_170();
  const Pipeline& b = pipeline_174();
  const auto c170 = check_eigenvalue_congruence(a.module, a.pair.phi_f, a.pair.phi_g, 5);
  CHECK(c170.pass);
  CHECK(c170.bound == 54);
  const auto c174 = check_eigenvalue_congruence(b.module, b.pair.phi_f, b.pair.phi_g, 5);
  CHECK(c174.pass);
  const auto c174_7 = check_eigenvalue_congruence(b.module, b.pair.phi_f, b.pair.phi_g, 7);
  CHECK_FALSE(c174_7.pass);
  CHECK(c174_7.first_failure == 5);
  // symmetric in (f, g)
  const auto swapped = check_eigenvalue_congruence(b.module, b.pair.phi_g, b.pair.phi_f, 7);
  CHECK(swapped.pass == c174_7.pass);
  CHECK(swapped.first_failure == c174_7.first_failure);
  CHECK_THROWS_AS(check_eigenvalue_congruence(b.module, b.pair.phi_f, b.pair.phi_g, 6), UsageError);
}

TEST_CASE("lift congruences") {
  for (const Pipeline* pl : {&pipeline_170(), &pipeline_174()}) {
    const LiftCheck c = check_lift_congruence(pl->lift_f, pl->lift_g, 5);
    CHECK(c.pass);
    CHECK(c.multiplier == 1);
    CHECK_FALSE(c.both_vanish_mod_ell);
    for (long cut : {10L, 40L, 99L}) {
      const LiftCheck t = check_lift_congruence(pl->lift_f.series.truncated(cut), pl->lift_g.series.truncated(cut), 5);
      CHECK(t.pass);
      CHECK(t.multiplier.has_value());
      // the witness found at the full bound still works after truncation
      for (long n = 0; n <= cut; ++n)
        CHECK((pl->lift_f.series[n] - *c.multiplier * pl->lift_g.series[n]) % 5 == 0);
    }
  }
  const QSeries& w = pipeline_174().lift_f.series;
  for (std::int64_t ell : {3, 5, 7, 11, 13}) {
    const LiftCheck same = check_lift_congruence(w, w, ell);
    CHECK(same.pass);
    CHECK(same.multiplier == 1);
  }
  const LiftCheck bad = check_lift_congruence(pipeline_174().lift_f, pipeline_174().lift_g, 7);
  CHECK_FALSE(bad.pass);
  CHECK(bad.first_failure.has_value());
  CHECK_THROWS_AS(check_lift_congruence(w, w.truncated(50), 5), UsageError);
}

TEST_CASE("both lifts vanishing mod ell is reported") {
  QSeries a(10), b(10);
  a[4] = 10;
  b[7] = -5;
  const LiftCheck c = check_lift_congruence(a, b, 5);
  CHECK(c.pass);
  CHECK(c.both_vanish_mod_ell);
}

TEST_CASE("proportional reductions imply the lift congruence with the same multiplier") {
  for (const Pipeline* pl : {&pipeline_170(), &pipeline_174()}) {
    const auto c = reduction_multiplier(pl->pair.phi_f, pl->pair.phi_g, 5);
    REQUIRE(c.has_value());
    CHECK(*c == 1);
    const auto raw = reduction_multiplier(pl->pair.phi_f, pl->pair.phi_g_primitive, 5);
    REQUIRE(raw.has_value());
    const LiftResult wg = waldspurger_lift(pl->pair.phi_g_primitive, pl->thetas);
    const LiftCheck lc = check_lift_congruence(pl->lift_f, wg, 5);
    CHECK(lc.pass);
    CHECK((*raw - *lc.multiplier) % 5 == 0);
  }
  CHECK(reduction_multiplier(pipeline_174().pair.phi_f, pipeline_174().pair.phi_g_primitive, 5) == 2);
  CHECK_FALSE(reduction_multiplier(pipeline_174().pair.phi_f, pipeline_174().pair.phi_g_primitive, 7).has_value());
}

TEST_CASE("norm divisibility") {
  const Pipeline& a = pipeline_170();
  const Pipeline& b = pipeline_174();
  CHECK(check_norm_divisibility(a.module, a.pair.phi_f, 5));
  CHECK(check_norm_divisibility(a.module, a.pair.phi_g, 5));
  CHECK_FALSE(check_norm_divisibility(a.module, a.pair.phi_g, 3));
  CHECK(check_norm_divisibility(b.module, b.pair.phi_f, 5));
  CHECK(check_norm_divisibility(b.module, b.pair.phi_g, 5));
}

TEST_CASE("hypothesis flags") {
  CHECK_FALSE(check_hypotheses(170, 17, 5).hold());
  CHECK(check_hypotheses(174, 3, 5).hold());
  CHECK(check_hypotheses(174, 3, 3).hold());
  CHECK(check_hypotheses(174, 3, 3).coprime_or_q);
  CHECK_FALSE(check_hypotheses(174, 3, 2).hold());
  CHECK_FALSE(check_hypotheses(174, 3, 29).coprime_or_q);
}

TEST_CASE("irreducibility heuristic") {
  const Pipeline& b = pipeline_174();
  const auto f = irreducibility_heuristic(b.module, b.pair.phi_f, 5, 60);
  CHECK(f.certified);
  CHECK(f.witness == 7);
  CHECK(irreducibility_heuristic(b.module, b.pair.phi_g, 5, 60).certified);
  const Pipeline& a = pipeline_170();
  const auto g = irreducibility_heuristic(a.module, a.pair.phi_g, 5, 60);
  CHECK(g.certified);
  CHECK(g.witness == 3);
  RationalVector eis;
  for (int w : b.module.classes().weights) eis.emplace_back(1, w);
  for (std::int64_t ell : {3, 5, 7, 11}) CHECK_FALSE(irreducibility_heuristic(b.module, eis, ell, 60).certified);
}

TEST_CASE("congruence reports") {
  const CongruenceReport r174 = congruence_report(pipeline_174());
  CHECK(r174.all_pass());
  CHECK(r174.norm_f == 1320);
  CHECK(r174.norm_g == 80);
  const CongruenceReport r170 = congruence_report(pipeline_170());
  CHECK(r170.congruence_observed());
  CHECK_FALSE(r170.all_pass());
  const auto j = nlohmann::json::parse(r170.to_json());
  CHECK(j["hypothesis_flags"]["hold"] == false);
  CHECK(j["lift_check"]["multiplier"] == 1);
  CHECK(j["sturm_bound"] == 54);
  CHECK(r170.to_text().find("congruence observed outside hypotheses") != std::string::npos);
}
