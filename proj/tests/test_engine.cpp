#include "doctest.h"

#include <random>
#include <stdexcept>

#include "ccoef/engine.hpp"
#include "reference.hpp"

using namespace ccoef;

TEST_CASE("identity rule leaves rows unchanged") {
  const auto c = Configuration::from_string("0110100111010");
  CHECK(step(c, RuleTable::elementary(204)) == c);
}

TEST_CASE("rule 255 fills the row") { CHECK(step(Configuration(5), RuleTable::elementary(255)).to_string() == "11111"); }

TEST_CASE("rule 110 on 00100") {
  CHECK(step(Configuration::from_string("00100"), RuleTable::elementary(110)).to_string() == "01100");
}

TEST_CASE("rule 0 clears every row after the first") {
  const auto evo = evolve(RuleTable::elementary(0), Configuration::from_string("1011"), 3);
  REQUIRE(evo.rows().size() == 4);
  CHECK(evo.row(0).to_string() == "1011");
  for (std::size_t s = 1; s <= 3; ++s) CHECK(evo.row(s).count(1) == 0);
}

TEST_CASE("evolve needs at least one step") {
  CHECK_THROWS_AS(evolve(RuleTable::elementary(30), Configuration(8), 0), std::invalid_argument);
}

TEST_CASE("colour mismatch is a domain error") {
  CHECK_THROWS_AS(step(Configuration(8, 3), RuleTable::elementary(30)), std::domain_error);
}

TEST_CASE("rule 132 erodes blocks down to their parity") {
  for (std::size_t size : {4u, 5u}) {
    Configuration c(32);
    for (std::size_t i = 0; i < size; ++i) c.set(10 + i, 1);
    const auto evo = evolve(RuleTable::elementary(132), c, 16);
    CHECK(evo.rows().back().count(1) == size % 2);
  }
}

TEST_CASE("fixed boundaries feed the background colour") {
  const auto c = Configuration::from_string("00000", 2, Boundary::fixed(1));
  // Rule 2 copies the right neighbour when it is the only 1 in view.
  CHECK(step(c, RuleTable::elementary(2)).to_string() == "00001");
  const auto d = Configuration::from_string("00000", 2, Boundary::fixed(0));
  CHECK(step(d, RuleTable::elementary(2)).to_string() == "00000");
  const auto e = Configuration::from_string("10001", 2, Boundary::cyclic());
  CHECK(step(e, RuleTable::elementary(2)).to_string() == "00010");
}

TEST_CASE("packed fast path agrees with the byte-per-cell reference") {
  std::mt19937_64 gen(3);
  for (int trial = 0; trial < 64; ++trial) {
    const unsigned number = static_cast<unsigned>(gen() % 256);
    const std::size_t width = 1 + gen() % 70;
    reference::Row row(width);
    for (auto& c : row) c = static_cast<std::uint8_t>(gen() & 1);
    const auto evo = evolve(RuleTable::elementary(number), Configuration::from_cells(row), 20);
    const auto expected = reference::run(reference::decode(number), row, 20);
    CAPTURE(number);
    CAPTURE(width);
    for (std::size_t s = 0; s < expected.size(); ++s) CHECK(evo.row(s).cells() == expected[s]);
  }
}

TEST_CASE("general k and r agree with the reference") {
  std::mt19937_64 gen(5);
  for (int trial = 0; trial < 24; ++trial) {
    const int k = 2 + static_cast<int>(gen() % 2);
    const int r = k == 2 ? 2 : 1;
    const std::uint64_t limit = k == 2 ? (std::uint64_t{1} << 32) : 7625597484987ull;  // 2^32, 3^27
    const std::uint64_t number = gen() % limit;
    const std::size_t width = 3 + gen() % 40;
    reference::Row row(width);
    for (auto& c : row) c = static_cast<std::uint8_t>(gen() % static_cast<unsigned>(k));
    const auto evo = evolve(RuleTable::from_number(number, k, r), Configuration::from_cells(row, k), 15);
    const auto expected = reference::run(reference::decode(number, k, r), row, 15);
    for (std::size_t s = 0; s < expected.size(); ++s) CHECK(evo.row(s).cells() == expected[s]);
  }
}

TEST_CASE("replays accepts real evolutions and rejects tampered ones") {
  const auto rule = RuleTable::elementary(110);
  const auto evo = evolve(rule, Configuration::from_string("0001000100110"), 10);
  CHECK(replays(evo, rule));
  auto rows = evo.rows();
  rows[5].set(3, rows[5][3] ^ 1);
  CHECK_FALSE(replays(Evolution(evo.rule_id(), rows), rule));
}

TEST_CASE("light cone width") {
  static_assert(light_cone_width(6, 1, 200) == 406);
  CHECK(light_cone_width(1, 2, 10) == 41);
}
