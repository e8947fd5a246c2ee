#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "ramapoly/render.hpp"

using namespace ramapoly;

namespace {

// Test-only inverse of poly_to_text: parses "4 + 2x^2 - 2x^4" back into
// coefficients so the round trip pins the text grammar down exactly.
IntPoly parse_text_poly(const std::string& s) {
  if (s == "0") return IntPoly{};
  std::vector<Int> coeffs;
  std::size_t i = 0;
  int sign = 1;
  if (s[i] == '-') {
    sign = -1;
    ++i;
  }
  while (i < s.size()) {
    std::string digits;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
      digits += s[i++];
    Int mag = digits.empty() ? Int(1) : Int(digits);
    std::uint64_t exp = 0;
    if (i < s.size() && s[i] == 'x') {
      ++i;
      exp = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::string e;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
          e += s[i++];
        REQUIRE(!e.empty());
        exp = std::stoull(e);
      }
    }
    if (coeffs.size() <= exp) coeffs.resize(exp + 1, Int(0));
    coeffs[exp] += sign * mag;
    if (i == s.size()) break;
    REQUIRE(s[i] == ' ');
    REQUIRE(i + 2 < s.size());
    REQUIRE((s[i + 1] == '+' || s[i + 1] == '-'));
    sign = s[i + 1] == '-' ? -1 : 1;
    REQUIRE(s[i + 2] == ' ');
    i += 3;
  }
  return IntPoly(std::move(coeffs));
}

}  // namespace

TEST_CASE("format names") {
  CHECK(format_from_name("text") == OutputFormat::Text);
  CHECK(format_from_name("json") == OutputFormat::Json);
  CHECK(format_from_name("csv") == OutputFormat::Csv);
  CHECK_THROWS_AS(format_from_name("yaml"), std::invalid_argument);
}

TEST_CASE("poly_to_text fixed forms") {
  CHECK(poly_to_text(IntPoly{}) == "0");
  CHECK(poly_to_text(IntPoly{1}) == "1");
  CHECK(poly_to_text(IntPoly{-1}) == "-1");
  CHECK(poly_to_text(IntPoly{0, 1}) == "x");
  CHECK(poly_to_text(IntPoly{0, -1}) == "-x");
  CHECK(poly_to_text(IntPoly{2, -1, -1}) == "2 - x - x^2");
  CHECK(poly_to_text(IntPoly{4, 0, 2, 0, -2, 0, -4, 0, -2, 0, 2}) ==
        "4 + 2x^2 - 2x^4 - 4x^6 - 2x^8 + 2x^10");
  CHECK(table_row_text(Family::R, 1, IntPoly{1}) == "R_1(x) = 1");
  CHECK(table_row_text(Family::Phi, 6, IntPoly{1, -1, 1}) ==
        "Phi_6(x) = 1 - x + x^2");
}

TEST_CASE("text form round-trips through the parser") {
  FamilyCache F;
  for (std::uint64_t n = 1; n <= 120; ++n)
    for (Family f : {Family::R, Family::T, Family::V, Family::Phi, Family::Psi,
                     Family::P, Family::Q}) {
      IntPoly p = F.get(f, n);
      CHECK(parse_text_poly(poly_to_text(p)) == p);
    }
}

TEST_CASE("csv rows pad r/t/v to length n, others stay canonical") {
  FamilyCache F;
  CHECK(table_row_csv(Family::R, 4, F.r(4)) == "4,2,0,-2,0");
  CHECK(table_row_csv(Family::R, 1, F.r(1)) == "1,1");
  CHECK(table_row_csv(Family::Phi, 6, F.phi(6)) == "6,1,-1,1");
  CHECK(table_row_csv(Family::Psi, 4, F.psi(4)) == "4,0,1,0,1");
  std::istringstream rows(render_table(Family::T, 1, 20, OutputFormat::Csv, F));
  std::string line;
  std::uint64_t n = 0;
  while (std::getline(rows, line)) {
    ++n;
    CHECK(std::count(line.begin(), line.end(), ',') == static_cast<long>(n));
  }
  CHECK(n == 20);
}

TEST_CASE("json table shape and stability") {
  FamilyCache F;
  std::string a = render_table(Family::R, 1, 12, OutputFormat::Json, F);
  std::string b = render_table(Family::R, 1, 12, OutputFormat::Json, F);
  CHECK(a == b);
  auto doc = nlohmann::json::parse(a);
  REQUIRE(doc.is_array());
  REQUIRE(doc.size() == 12);
  CHECK(doc[0]["n"] == 1);
  CHECK(doc[0]["coefficients"] == nlohmann::json::array({1}));
  CHECK(doc[11]["n"] == 12);
  CHECK(doc[11]["coefficients"] ==
        nlohmann::json::array({4, 0, 2, 0, -2, 0, -4, 0, -2, 0, 2}));
}

TEST_CASE("report rendering") {
  VerificationReport rep = run_suite_serial(1, 12);
  std::string text = render_report(rep, OutputFormat::Text);
  CHECK(text.find("verify range [1, 12]") != std::string::npos);
  CHECK(text.find("0 failures") != std::string::npos);
  CHECK(text.find("FAIL") == std::string::npos);

  std::string csv = render_report(rep, OutputFormat::Csv);
  CHECK(csv.rfind("claim,n,params,status\n", 0) == 0);
  std::istringstream lines(csv);
  std::string line;
  std::size_t count = 0;
  while (std::getline(lines, line)) ++count;
  CHECK(count == rep.results.size() + 1);

  auto doc = nlohmann::json::parse(render_report(rep, OutputFormat::Json));
  CHECK(doc["range"] == nlohmann::json::array({1, 12}));
  CHECK(doc["results"].size() == rep.results.size());
  for (const auto& item : doc["results"]) {
    CHECK(item["witness"].is_null());
    std::string st = item["status"];
    CHECK((st == "pass" || st == "na"));
  }
  for (const auto& [claim, s] : rep.summary)
    CHECK(doc["summary"][claim]["fail"] == 0);
}
