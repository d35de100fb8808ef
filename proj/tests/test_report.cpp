#include <catch2/catch.hpp>

#include "cubecover/report.hpp"

using namespace cubecover;

namespace {

Report sample_report() {
  Report r;
  r.command = "verify-involution";
  r.params = {{"n", "6"}, {"r", "2"}, {"dim", "22"}};
  DetailRecord ok;
  ok.params = {{"cells", "484"}};
  ok.note = "M*M = I exactly";
  r.details.push_back(ok);
  DetailRecord info;
  info.informational = true;
  info.got = "true";
  info.note = "measured, not asserted";
  r.details.push_back(info);
  r.finalize();
  return r;
}

}  // namespace

TEST_CASE("report JSON round trip") {
  const Report r = sample_report();
  const auto j = to_json(r);
  CHECK(report_from_json(nlohmann::json::parse(j.dump())) == r);

  Report failing = r;
  failing.details.front().pass = false;
  failing.details.front().expected = "1";
  failing.details.front().got = "-1";
  failing.finalize();
  CHECK(failing.status == ReportStatus::fail);
  CHECK(report_from_json(nlohmann::json::parse(to_json(failing).dump())) == failing);
}

TEST_CASE("serialization is stable with fixed field order") {
  const Report r = sample_report();
  const std::string a = report_to_json_string(r);
  const std::string b = report_to_json_string(r);
  CHECK(a == b);

  const auto pos_command = a.find("\"command\"");
  const auto pos_params = a.find("\"params\"");
  const auto pos_status = a.find("\"status\"");
  const auto pos_details = a.find("\"details\"");
  const auto pos_timing = a.find("\"timing_ms\"");
  REQUIRE(pos_command != std::string::npos);
  CHECK(pos_command < pos_params);
  CHECK(pos_params < pos_status);
  CHECK(pos_status < pos_details);
  CHECK(pos_details < pos_timing);

  // params keys are emitted sorted (std::map order).
  CHECK(a.find("\"dim\"") < a.find("\"n\""));
  CHECK(a.find("\"n\"") < a.find("\"r\""));
}

TEST_CASE("status rules") {
  Report r;
  r.command = "x";
  DetailRecord d;
  d.pass = false;
  d.informational = true;
  r.details.push_back(d);
  r.finalize();
  CHECK(r.status == ReportStatus::pass);  // informational rows never fail a run

  r.details.front().informational = false;
  r.finalize();
  CHECK(r.status == ReportStatus::fail);
  CHECK_FALSE(r.passed());

  Report e;
  e.command = "y";
  e.finalize(/*exploratory=*/true);
  CHECK(e.status == ReportStatus::exploratory);
  CHECK(e.passed());

  CHECK(to_string(ReportStatus::exploratory) == "exploratory");
  CHECK(report_status_from_string("pass") == ReportStatus::pass);
  CHECK_THROWS_AS(report_status_from_string("maybe"), std::invalid_argument);
}
