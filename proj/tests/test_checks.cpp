#include "twinv/checks.hpp"
#include "twinv/errors.hpp"

#include <doctest.h>

using namespace twinv;

TEST_CASE("corrupted Cartan matrix fails reflection closure") {
  auto good = build_root_system("A2");
  auto cartan = good->cartan();
  cartan[0][1] = -2;
  auto bad = std::make_shared<const RootSystem>("A2*", good->components(), cartan, good->symmetrizer(),
                                                good->positive_roots());
  CheckReport report;
  check_root_system(bad, report);
  const auto* closure = report.find("rootsys.reflection_closure");
  REQUIRE(closure != nullptr);
  CHECK_FALSE(closure->pass());
  CHECK_FALSE(closure->counterexamples.empty());
  CHECK_FALSE(report.all_pass());

  CheckReport clean;
  check_root_system(good, clean);
  CHECK(clean.all_pass());
}

TEST_CASE("simply-laced types pass every invariant") {
  auto report = run_checks({"A1", "A2", "A3", "D4"});
  for (const auto& r : report.results()) {
    CAPTURE(r.name);
    CHECK(r.pass());
  }
  CHECK(report.all_pass());
  CHECK(report.find("orbitgraph.weight_step")->cases > 0);
  CHECK(report.find("twist.maximal_involutions")->cases > 0);
}

TEST_CASE("default matrix: only lift independence of relative coroots fails") {
  auto report = run_checks(default_check_types());
  for (const auto& r : report.results()) {
    CAPTURE(r.name);
    if (r.name == "rootsys.coroot_well_defined") {
      CHECK_FALSE(r.pass());
      CHECK(r.failures == 20);
    } else {
      CHECK(r.pass());
    }
  }
  const auto* info = report.find("orbitgraph.length_step_not_two");
  REQUIRE(info != nullptr);
  CHECK(info->informational);
  CHECK(info->failures == 64);
  CHECK(report.find("orbitgraph.dcmin_changes_transport")->failures == 0);
}

TEST_CASE("cap is enforced before any check runs") {
  CHECK_THROWS_AS(run_checks({"A2"}, 1), CapExceeded);
}

TEST_CASE("report renderings") {
  CheckReport r;
  r.record("x.ok", true, [] { return std::string("never"); });
  r.record("x.bad", false, [] { return std::string("counterexample here"); });
  r.note("x.info", true, [] { return std::string("noted"); });
  CHECK_FALSE(r.all_pass());
  auto txt = r.to_text();
  CHECK(txt.find("FAIL  x.bad") != std::string::npos);
  CHECK(txt.find("counterexample here") != std::string::npos);
  CHECK(txt.find("never") == std::string::npos);
  auto j = r.to_json();
  CHECK(j["pass"] == false);
  CHECK(j["invariants"].size() == 3);
  r.guard("x.throws", "ctx", [] { throw std::runtime_error("boom"); });
  CHECK_FALSE(r.find("x.throws")->pass());
}
