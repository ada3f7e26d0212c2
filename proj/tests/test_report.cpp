#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include "zigzag/report.hpp"

using namespace zigzag;

namespace {

ClaimVerdict sample(Status s) {
  VerdictBuilder b("S-1", "a, \"quoted\" statement");
  b.param("n", "4");
  b.check("x=1", s == Status::pass, {{"lhs", "1"}, {"rhs", s == Status::pass ? "1" : "2"}});
  ClaimVerdict v = std::move(b).finish();
  v.group = "S";
  v.location = "Topic";
  return v;
}

}  // namespace

TEST(Report, EmptyDocuments) {
  const auto j = nlohmann::json::parse(render_report({}, ReportFormat::json));
  EXPECT_EQ(j["schema_version"], 1);
  EXPECT_TRUE(j["claims"].empty());
  EXPECT_EQ(render_report({}, ReportFormat::csv),
            "claim_id,group,status,anchor,checked,discrepancies,instance,fields\n");
  EXPECT_EQ(render_report({}, ReportFormat::text), "");
}

TEST(Report, SinglePassVerdict) {
  const auto j = nlohmann::json::parse(render_report({sample(Status::pass)}, ReportFormat::json));
  ASSERT_EQ(j["claims"].size(), 1u);
  EXPECT_EQ(j["claims"][0]["status"], "pass");
  EXPECT_TRUE(j["claims"][0]["evidence"].empty());
  EXPECT_EQ(j["summary"]["pass"], 1);
}

TEST(Report, JsonFieldOrderIsStable) {
  const std::string s = render_report({sample(Status::fail)}, ReportFormat::json);
  const auto pos = [&](const char* key) { return s.find(std::string("\"") + key + "\""); };
  EXPECT_LT(pos("schema_version"), pos("summary"));
  EXPECT_LT(pos("claim_id"), pos("group"));
  EXPECT_LT(pos("status"), pos("parameters"));
  EXPECT_LT(pos("evidence"), pos("measurements"));
  EXPECT_EQ(s, render_report({sample(Status::fail)}, ReportFormat::json));
}

TEST(Report, CsvQuotesAndRows) {
  const std::string csv = render_report({sample(Status::fail), sample(Status::pass)},
                                        ReportFormat::csv);
  EXPECT_NE(csv.find("S-1,S,fail,false,1,1,x=1,lhs=1; rhs=2\n"), std::string::npos) << csv;
  EXPECT_NE(csv.find("S-1,S,pass,false,1,0,,\n"), std::string::npos) << csv;
}

TEST(Report, TextGroupsByLocation) {
  ClaimVerdict a = sample(Status::pass);
  ClaimVerdict b = sample(Status::fail);
  b.location = "Other";
  ClaimVerdict c = sample(Status::pass);
  c.claim_id = "S-2";
  const std::string t = render_report({a, b, c}, ReportFormat::text);
  const auto topic = t.find("== Topic ==");
  const auto other = t.find("== Other ==");
  ASSERT_NE(topic, std::string::npos);
  ASSERT_NE(other, std::string::npos);
  EXPECT_LT(t.find("S-2"), other);
}

TEST(Report, FormatNames) {
  for (auto f : {ReportFormat::json, ReportFormat::csv, ReportFormat::text}) {
    EXPECT_EQ(parse_report_format(to_string(f)), f);
  }
  EXPECT_FALSE(parse_report_format("xml"));
}
