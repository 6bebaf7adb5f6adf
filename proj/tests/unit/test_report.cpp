#include <gtest/gtest.h>

#include <sstream>

#include "afrokhlin/citations.hpp"
#include "afrokhlin/report.hpp"
#include "afrokhlin/spec_io.hpp"

using namespace afrokhlin;

TEST(Report, ClassificationRoundTrip) {
  for (const auto &name : fixture_names()) {
    auto r = classify(builtin_fixture(name));
    auto j = to_json(r);
    EXPECT_EQ(to_json(classification_from_json(j)), j) << name;
  }
}

TEST(Report, CitationsResolve) {
  for (const auto &name : fixture_names()) {
    auto j = classify_report(builtin_fixture(name), classify(builtin_fixture(name)));
    ASSERT_TRUE(j.contains("citation_statements"));
    for (auto &[key, statement] : j["citation_statements"].items()) {
      EXPECT_NO_THROW(cite(key));
      EXPECT_FALSE(statement.get<std::string>().empty());
    }
  }
  EXPECT_THROW(cite("no-such-anchor"), std::invalid_argument);
}

TEST(Report, ParseElement) {
  auto el = parse_element("1,-1@1");
  EXPECT_EQ(el.a, 1);
  EXPECT_EQ(el.b, -1);
  EXPECT_EQ(el.stage, 1u);
  EXPECT_EQ(parse_element(" +3 , 4 @ 0").a, 3);
  EXPECT_EQ(format_element(el), "1,-1@1");
  EXPECT_THROW(parse_element("1,-1"), InputError);
  EXPECT_THROW(parse_element("a,b@1"), InputError);
  EXPECT_THROW(parse_element("1,1@-2"), InputError);
}

TEST(Report, BratteliDot) {
  std::string car2 = bratteli_dot(builtin_fixture("car2"), 2);
  EXPECT_NE(car2.find("L1 -> L2 [label=\"3\"]"), std::string::npos) << car2;
  EXPECT_NE(car2.find("L1 -> R2 [label=\"1\", style=dashed]"), std::string::npos);
  std::istringstream car1(bratteli_dot(builtin_fixture("car1"), 2));
  int edges = 0;
  for (std::string line; std::getline(car1, line);)
    if (line.find("->") != std::string::npos) {
      ++edges;
      EXPECT_NE(line.find("label=\"1\""), std::string::npos) << line;
    }
  EXPECT_EQ(edges, 4);
  std::string one = bratteli_dot(builtin_fixture("car3"), 1);
  EXPECT_EQ(one.find("->"), std::string::npos);
  EXPECT_NE(one.find("L1"), std::string::npos);
  EXPECT_NE(one.find("R1"), std::string::npos);
}

TEST(Report, IntervalDecimalsRoundOutward) {
  auto j = to_json(RationalInterval{Rational(1, 3), Rational(2, 3)});
  EXPECT_EQ(j["lo_decimal"], "0.333333333333");
  EXPECT_EQ(j["hi_decimal"], "0.666666666667");
}
