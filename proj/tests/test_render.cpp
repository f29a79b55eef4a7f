#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include "kgamma/render.hpp"

using namespace kgamma;

TEST_CASE("format names") {
  CHECK(parse_format("text") == OutputFormat::Text);
  CHECK(parse_format("json") == OutputFormat::Json);
  CHECK(parse_format("csv") == OutputFormat::Csv);
  CHECK_THROWS_AS(parse_format("yaml"), std::invalid_argument);
}

TEST_CASE("text report carries the headline facts") {
  const std::string s = render_report(verdict(7, 3), OutputFormat::Text);
  CHECK(s.find("K = 20\n") != std::string::npos);
  CHECK(s.find("PossiblyFree") != std::string::npos);
  CHECK(s.find("bound = 8 (2n+2)") != std::string::npos);
  const std::string s3 = render_report(verdict(3, 2), OutputFormat::Text);
  CHECK(s3.find("bound = 21 (7n+7)") != std::string::npos);
  // congruence line appears only when the check ran
  CHECK(s.find("congruence") == std::string::npos);
  const std::string sc = render_report(verdict(3, 2, true), OutputFormat::Text);
  CHECK(sc.find("congruence K = n+1 (mod 6): yes") != std::string::npos);
}

TEST_CASE("json schema is exactly the seven stable keys") {
  const nlohmann::json j = nlohmann::json::parse(render_report(verdict(3, 9), OutputFormat::Json));
  CHECK(j.size() == 7);
  CHECK(j.at("d") == 3);
  CHECK(j.at("n") == 9);
  CHECK(j.at("k_exact") == "5698/61");
  CHECK(j.at("bound") == 70);
  CHECK(j.at("is_integer") == false);
  CHECK(j.at("verdict") == "NotFree");
  CHECK(j.at("k_float").is_number());
}

TEST_CASE("json round trip is exact (property over the verdict grid)") {
  for (long d : supported_fields())
    for (int n = 2; n <= 8; ++n) {
      const KReport r = verdict(d, n);
      const KReport back = parse_report_json(render_report(r, OutputFormat::Json));
      CAPTURE(d);
      CAPTURE(n);
      CHECK(back == r);
    }
}

TEST_CASE("csv rendering") {
  const std::string s = render_report(verdict(7, 5), OutputFormat::Csv);
  CHECK(s == "d,n,k_exact,k_float,bound,is_integer,verdict\n"
             "7,5,1008/43,23.4419,12,false,NotFree\n");
  const std::string s3 = render_report(verdict(7, 5), OutputFormat::Csv, 3);
  CHECK(s3.find("23.4,") != std::string::npos);
}

TEST_CASE("table rendering") {
  const VerdictTable t = sweep({7}, 6);
  const std::string text = render_table(t, OutputFormat::Text);
  CHECK(text.find(" 14") != std::string::npos);
  CHECK(text.find("1008/43") != std::string::npos);
  CHECK(text.find("possibly free only for n in {2, 3, 4}") != std::string::npos);

  const std::string csv = render_table(t, OutputFormat::Csv);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 6);  // header + 5 rows

  const nlohmann::json j = nlohmann::json::parse(render_table(t, OutputFormat::Json));
  CHECK(j.at("reports").size() == 5);
  CHECK(j.at("summary").size() == 1);
  CHECK(j.at("reports")[1].at("k_exact") == "20");
}

TEST_CASE("parse_report_json rejects junk") {
  CHECK_THROWS(parse_report_json("{}"));
  CHECK_THROWS(parse_report_json("not json"));
  CHECK_THROWS_AS(
      parse_report_json(R"({"d":7,"n":3,"k_exact":"20","k_float":20.0,"bound":8,"is_integer":true,"verdict":"Maybe"})"),
      std::invalid_argument);
}
