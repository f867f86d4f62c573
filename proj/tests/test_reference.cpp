#include "doctest.h"

#include <random>

#include "ccoef/coefficient.hpp"
#include "ccoef/enumeration.hpp"
#include "reference.hpp"

using namespace ccoef;

TEST_CASE("reference Gray rows match the library family") {
  for (std::size_t n : {2u, 3u, 16u, 40u, 100u}) {
    const auto f = gray_initials(n, 61);
    const auto rows = reference::gray_rows(n, 61);
    for (std::size_t j = 0; j < n; ++j) CHECK(f.members[j].cells() == rows[j]);
  }
}

TEST_CASE("optimised and reference coefficients agree bit for bit") {
  std::mt19937_64 gen(2718);
  for (int trial = 0; trial < 8; ++trial) {
    const unsigned number = static_cast<unsigned>(gen() % 256);
    const std::size_t n = 2 + gen() % 20;
    const std::size_t t = 8 + gen() % 50;
    const std::size_t width = bit_width_of(n - 1) + gen() % 40;
    const double fast = coefficient_C(RuleTable::elementary(number), gray_initials(n, width), t).c_value;
    const double slow = reference::coefficient(reference::decode(number), reference::gray_rows(n, width), t);
    CAPTURE(number);
    CAPTURE(n);
    CAPTURE(t);
    CHECK(fast == slow);
  }
}
