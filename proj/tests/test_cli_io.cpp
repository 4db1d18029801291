#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "yosp/hw/linear.hpp"
#include "yosp/hw/reflections.hpp"
#include "yosp/io/json_io.hpp"

using namespace yosp;
using namespace yosp::io;

namespace {

FactoredSeries lin(long a) { return FactoredSeries::linear(Rational(a)); }

std::string location_of(const std::string& text) {
  try {
    parse_document(text);
  } catch (const DocumentError& e) {
    return e.location();
  }
  return "<parsed>";
}

std::string sample(const std::string& name) {
  std::ifstream in(std::string(YOSP_SOURCE_DIR) + "/docs/samples/" + name);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST(Document, RoundTrip) {
  const auto u = Polynomial::variable();
  const FactoredSeries tail = FactoredSeries::from_rational(RationalFunction(u * u + u + Polynomial(1), u * u));
  HighestWeight hw(AlgebraContext::make(2, 1, "101"), {lin(-1) * lin(3), tail, FactoredSeries()},
                   FactoredSeries::from_rational(RationalFunction(u - Polynomial(1), u + Polynomial(make_rational(5, 2)))));
  const json j = document_json(WeightDocument::from_highest_weight(hw));
  EXPECT_EQ(parse_document(j).to_highest_weight(), hw);
  EXPECT_EQ(parse_document(j.dump()).to_highest_weight(), hw);
  EXPECT_EQ(j["parity"], "101");
  EXPECT_EQ(j["components"][0]["roots"], (json{"-1", "3"}));
}

TEST(Document, LinearWeightRoundTrip) {
  for (int m = 1; m <= 2; ++m)
    for (int n = 1; n <= 2; ++n)
      for (const auto& g : hook_diagrams(m, n, 3)) {
        auto s = sharp(g, m, n);
        auto hw = LinearWeight(AlgebraContext::standard(m, n), std::vector<Rational>(s.begin(), s.end())).highest_weight();
        EXPECT_EQ(parse_document(document_json(WeightDocument::from_highest_weight(hw)).dump()).to_highest_weight(), hw);
      }
}

TEST(Document, ErrorLocations) {
  EXPECT_EQ(location_of("{"), "byte 2");
  EXPECT_EQ(location_of(R"({"n":1,"parity":"10","components":[],"last":{}})"), "/m");
  EXPECT_EQ(location_of(R"({"m":1,"n":1,"parity":"12","components":[],"last":{}})"), "/parity");
  EXPECT_EQ(location_of(R"({"m":1,"n":1,"parity":"10","components":[],"last":{}})"), "/components");
  const std::string one = R"({"roots":[],"tail":{"num":["1"],"den":["1"]}})";
  EXPECT_EQ(location_of(R"({"m":1,"n":1,"parity":"10","components":[)" + one + R"(,{"roots":["1/0"],"tail":{"num":["1"],"den":["1"]}}],"last":)" + one + "}"),
            "/components/1/roots/0");
  EXPECT_EQ(location_of(R"({"m":1,"n":1,"parity":"10","components":[)" + one + "," + one + R"(],"last":{"roots":[],"tail":{"num":["1"],"den":["0"]}}})"),
            "/last/tail/den");
  EXPECT_EQ(location_of(R"({"m":1,"n":1,"parity":"10","components":[)" + one + "," + one + R"(],"last":{"roots":[],"tail":{"num":["1"]}}})"),
            "/last/tail/den");
  EXPECT_EQ(location_of(sample("malformed.json")), "/components/0/roots/0");
}

TEST(Document, SamplesParse) {
  for (auto name : {"osp42_vector.json", "linear_pass.json", "linear_fail.json", "osp22_shifted.json", "osp22_vector.json", "irrational_pair.json"})
    EXPECT_NO_THROW(parse_document(sample(name))) << name;
}

TEST(Document, ReflectedDocumentRoundTrips) {
  const HighestWeight hw = parse_document(sample("osp22_shifted.json")).to_highest_weight();
  const Osp22Reflection r = odd_reflection_osp22(hw.lambda(1), hw.lambda(2), hw.last);
  HighestWeight out(AlgebraContext::make(1, 1, "01"), {r.lambda1, r.lambda2}, r.lambda2p);
  EXPECT_EQ(parse_document(document_json(WeightDocument::from_highest_weight(out)).dump()).to_highest_weight(), out);
  EXPECT_EQ(r.lambda1, lin(1));
  EXPECT_EQ(r.lambda2, lin(4));
}

TEST(ReportJson, FieldsAndWitnesses) {
  Report r;
  r.command = "check test";
  r.info["k"] = "v";
  r.add("a", true).witness("P", Polynomial({Rational(1), make_rational(-1, 2)}));
  r.add_not_applicable("b", "why");
  r.skip("c", "pole");
  const json j = report_json(r);
  EXPECT_EQ(j["verdict"], "not-applicable");
  EXPECT_EQ(j["checks"][0]["witnesses"]["P"], (json{"1", "-1/2"}));
  EXPECT_EQ(j["checks"][1]["verdict"], "not-applicable");
  EXPECT_EQ(j["info"]["k"], "v");
  EXPECT_EQ(j["notes"][0], "c: pole");
  const std::string text = report_text(r);
  EXPECT_NE(text.find("[pass] a"), std::string::npos);
  EXPECT_NE(text.find("P = [1, -1/2]"), std::string::npos);
  r.add("d", false, "bad");
  EXPECT_EQ(report_json(r)["verdict"], "fail");
  EXPECT_EQ(report_json(Report{})["verdict"], "not-applicable");
}
