#include <doctest.h>

#include <json.hpp>

#include "d4quad/pipeline.hpp"

using namespace d4quad;
using tuples::Family;

TEST_CASE("verdict names") {
  CHECK(pipeline::verdict_name(pipeline::Verdict::REGULAR_CONFIRMED) ==
        "REGULAR_CONFIRMED");
  CHECK(pipeline::verdict_name(pipeline::Verdict::COUNTEREXAMPLE) ==
        "COUNTEREXAMPLE");
  CHECK(pipeline::verdict_name(pipeline::Verdict::INCONCLUSIVE) ==
        "INCONCLUSIVE");
}

TEST_CASE("family verification over a small index range") {
  auto report = pipeline::verify_family(2, Family::c1p, 3);
  CHECK(report.k == 2);
  CHECK(report.family == Family::c1p);
  CHECK(report.verdict == pipeline::Verdict::REGULAR_CONFIRMED);
  REQUIRE(report.records.size() == 3);
  for (const auto& rec : report.records) {
    CHECK(rec.branch == "a");
    CHECK((rec.status == "residual_checked" ||
           rec.status == "closed_after_reduction" ||
           rec.status == "closed_by_gap" || rec.status == "degenerate"));
    for (const auto& rr : rec.residual) {
      // only regular extensions may survive
      CHECK((rr.d_class == "zero" || rr.d_class == "d-" || rr.d_class == "d+"));
    }
  }
}

TEST_CASE("first-index degenerate branches are reported, not skipped") {
  auto report = pipeline::verify_family(2, Family::c1m, 2);
  REQUIRE(report.records.size() == 2);
  CHECK(report.records[0].p == 1);
  CHECK(report.records[0].status == "degenerate");
  CHECK(report.records[1].p == 2);
  CHECK(report.records[1].status != "degenerate");
  CHECK(report.verdict == pipeline::Verdict::REGULAR_CONFIRMED);
}

TEST_CASE("two-branch families carry both solution configurations") {
  auto report = pipeline::verify_family(3, Family::c2p, 2);
  REQUIRE(report.records.size() == 4);  // two branches per p
  CHECK(report.records[0].branch == "a");
  CHECK(report.records[1].branch == "b");
  CHECK(report.verdict == pipeline::Verdict::REGULAR_CONFIRMED);
}

TEST_CASE("largest-element families run both parities") {
  auto report = pipeline::verify_family(6, Family::c3p, 1);
  REQUIRE(report.records.size() == 2);
  CHECK(report.records[0].branch == "vw_even");
  CHECK(report.records[1].branch == "vw_odd");
  CHECK(report.verdict == pipeline::Verdict::REGULAR_CONFIRMED);
}

TEST_CASE("reports serialize deterministically with decimal-string integers") {
  auto report = pipeline::verify_family(2, Family::c1p, 2);
  std::string one = pipeline::to_json(report);
  std::string two = pipeline::to_json(report);
  CHECK(one == two);
  CHECK(one.back() == '\n');
  auto parsed = nlohmann::json::parse(one);
  CHECK(parsed["k"] == "2");
  CHECK(parsed["family"] == "c1+");
  CHECK(parsed["verdict"] == "REGULAR_CONFIRMED");
  REQUIRE(parsed["records"].is_array());
  for (const auto& rec : parsed["records"]) {
    CHECK(rec["a"].is_string());
    CHECK(rec["bounds"]["matveev_l"].is_string());
    for (const auto& rr : rec["residual"]) {
      CHECK(rr["x"].is_string());
    }
  }
}

TEST_CASE("window sweeps serialize to CSV and JSON") {
  auto sweep =
      oracle::quadruples_containing_pair(2, Int(30), Int(1000), Int(100000));
  std::string csv = pipeline::sweep_to_csv(sweep);
  CHECK(csv.rfind("a,b,c,d,d_class\n", 0) == 0);
  auto parsed = nlohmann::json::parse(pipeline::sweep_to_json(sweep));
  CHECK(parsed["k"] == "2");
  CHECK(parsed["irregular"] == "0");
  CHECK(parsed["rows"].is_array());
}
