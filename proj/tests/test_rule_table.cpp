#include "doctest.h"

#include <array>
#include <stdexcept>
#include <string>

#include "ccoef/rule_table.hpp"

using namespace ccoef;

TEST_CASE("rule 0 maps every neighbourhood to 0") {
  const auto rule = RuleTable::elementary(0);
  CHECK(rule.size() == 8);
  for (std::size_t d = 0; d < 8; ++d) CHECK(rule.at(d) == 0);
}

TEST_CASE("rule 255 maps every neighbourhood to 1") {
  const auto rule = RuleTable::elementary(255);
  for (std::size_t d = 0; d < 8; ++d) CHECK(rule.at(d) == 1);
}

TEST_CASE("rule 110 table") {
  const auto rule = RuleTable::elementary(110);
  const std::array<std::pair<const char*, int>, 8> expected{{
      {"111", 0}, {"110", 1}, {"101", 1}, {"100", 0}, {"011", 1}, {"010", 1}, {"001", 1}, {"000", 0}}};
  for (const auto& [pattern, out] : expected) {
    const std::string s = pattern;
    const std::array<std::uint8_t, 3> nb{static_cast<std::uint8_t>(s[0] - '0'), static_cast<std::uint8_t>(s[1] - '0'),
                                         static_cast<std::uint8_t>(s[2] - '0')};
    CAPTURE(s);
    CHECK(rule(nb) == out);
  }
}

TEST_CASE("number round-trips") {
  for (unsigned n = 0; n < 256; ++n) CHECK(RuleTable::elementary(n).number() == n);
  const RuleNumber big("6967601357985");  // below 3^27
  CHECK(RuleTable::from_number(big, 3, 1).number() == big);
  RuleNumber r2 = 1;
  r2 <<= 31;
  r2 += 12345;
  CHECK(RuleTable::from_number(r2, 2, 2).number() == r2);
}

TEST_CASE("out-of-range numbers name the interval") {
  CHECK_THROWS_AS(RuleTable::from_number(256), std::out_of_range);
  CHECK_THROWS_AS(RuleTable::from_number(-1), std::out_of_range);
  try {
    RuleTable::from_number(256);
  } catch (const std::out_of_range& e) {
    CHECK(std::string(e.what()).find("[0, 256)") != std::string::npos);
  }
}

TEST_CASE("invalid shapes are rejected") {
  CHECK_THROWS(RuleTable(1, 1, {0, 0, 0}));
  CHECK_THROWS(RuleTable(2, 0, {0, 1}));
  CHECK_THROWS(RuleTable(2, 1, std::vector<std::uint8_t>(7, 0)));
  CHECK_THROWS(RuleTable(2, 1, {0, 0, 0, 0, 0, 0, 0, 2}));
}

TEST_CASE("ids") {
  CHECK(RuleTable::elementary(110).id() == "eca:110");
  CHECK(RuleTable::from_number(5, 3, 1).id() == "ca:k3:r1:5");
}

TEST_CASE("complement and mirror of elementary rules") {
  // Known equivalence classes: 110 mirrors to 124 and complements to 137.
  CHECK(RuleTable::elementary(110).mirror().number() == 124);
  CHECK(RuleTable::elementary(110).complement().number() == 137);
  CHECK(RuleTable::elementary(30).mirror().number() == 86);
  CHECK(RuleTable::elementary(204).complement().number() == 204);
  for (unsigned n = 0; n < 256; ++n) {
    const auto rule = RuleTable::elementary(n);
    CHECK(rule.mirror().mirror() == rule);
    CHECK(rule.complement().complement() == rule);
  }
}
