#include "aqc/render.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include "aqc/errors.hpp"
#include "aqc/permanent.hpp"

namespace aqc {
namespace {

using nlohmann::json;

TEST(Render, TriangleJsonSchemaAndExactValues) {
  const CountTable t = count_table(5, 13);
  const json j = json::parse(render_triangle(t, Format::kJson));
  EXPECT_EQ(j.at("q"), 5);
  ASSERT_EQ(j.at("rows").size(), 14u);
  EXPECT_EQ(j["rows"][13], json({"6226657980", "362760", "60"}));
  EXPECT_EQ(j["rows"][11][2], "3");
  for (std::size_t n = 0; n < t.rows.size(); ++n) {
    for (std::size_t k = 0; k < t.rows[n].size(); ++k) {
      EXPECT_EQ(Nat::parse(j["rows"][n][k].get<std::string>()), t.rows[n][k]);
    }
  }
}

TEST(Render, JsonRoundTripIsIdempotent) {
  for (const std::string& text :
       {render_triangle(count_table(3, 40), Format::kJson),
        render_free(2, "formula", {Nat(1), Nat(1), Nat(1)}, Format::kJson),
        render_multi(5, MultiSpec::first(5), multi_distribution(5, MultiSpec::first(5)), Format::kJson)}) {
    EXPECT_EQ(json::parse(text).dump() + "\n", text);
  }
  // Values beyond 64 bits survive as strings.
  const json j = json::parse(render_triangle(count_table(1, 30), Format::kJson));
  EXPECT_EQ(Nat::parse(j["rows"][30][0].get<std::string>()), count_aqc(30, 0, 1));
}

TEST(Render, TrianglePlainIsAlignedAndPadded) {
  const std::string text = render_triangle(count_table(2, 3), Format::kPlain);
  EXPECT_EQ(text,
            "n  k=0  k=1\n"
            "0    1    0\n"
            "1    1    0\n"
            "2    1    1\n"
            "3    4    2\n");
}

TEST(Render, TriangleCsv) {
  EXPECT_EQ(render_triangle(count_table(2, 2), Format::kCsv), "n,k,value\n0,0,1\n1,0,1\n2,0,1\n2,1,1\n");
}

TEST(Render, FreeFormats) {
  const std::vector<Nat> v = {1, 0, 1, 2, 9};
  EXPECT_EQ(render_free(1, "formula", v, Format::kPlain), "1,0,1,2,9\n");
  EXPECT_EQ(render_free(1, "formula", {1, 0}, Format::kCsv), "n,k,value\n0,0,1\n1,0,0\n");
  EXPECT_EQ(render_free(1, "both", {1}, Format::kJson), "{\"method\":\"both\",\"q\":1,\"values\":[\"1\"]}\n");
}

TEST(Render, MultiFormats) {
  const auto terms = multi_distribution(0, MultiSpec({2}));
  EXPECT_EQ(render_multi(0, MultiSpec({2}), terms, Format::kPlain), "(0) 1\n");
  const std::string csv = render_multi(3, MultiSpec({1, 2}), multi_distribution(3, MultiSpec({1, 2})), Format::kCsv);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "n,k_1,k_2,value");
}

TEST(Render, Polynomial) {
  const MPoly p = generating_polynomial(6, 3);
  EXPECT_EQ(render_polynomial(p, {{"x", 3}}, Format::kPlain), "697 + 22x + x^2\n");
  EXPECT_EQ(render_polynomial(p, {{"x", 3}}, Format::kCsv), "monomial,value\n1,697\nx,22\nx^2,1\n");
  const json j = json::parse(render_polynomial(p, {{"x", 3}}, Format::kJson));
  EXPECT_EQ(j["terms"][1]["value"], "22");
}

TEST(Render, ParseHelpers) {
  EXPECT_EQ(parse_lengths("1,2,5").lengths(), (std::vector<unsigned>{1, 2, 5}));
  EXPECT_THROW(parse_lengths("2,1"), InvalidArgument);
  EXPECT_THROW(parse_lengths("1,,2"), InvalidArgument);
  EXPECT_THROW(parse_lengths("a"), InvalidArgument);
  EXPECT_THROW(parse_lengths(""), InvalidArgument);
  EXPECT_EQ(parse_format("csv"), Format::kCsv);
  EXPECT_FALSE(parse_format("xml").has_value());
}

}  // namespace
}  // namespace aqc
