#include <doctest.h>

#include <cmath>

#include "rmatch/bigcount.hpp"

using rmatch::BigCount;

TEST_CASE("bigcount arithmetic and ordering") {
  BigCount a(7), b(5);
  CHECK((a + b).str() == "12");
  CHECK((a * b).str() == "35");
  CHECK(a > b);
  CHECK(BigCount() == BigCount(0));
  CHECK(BigCount().is_zero());
  CHECK(BigCount(0).str() == "0");

  // 2^200 by repeated squaring-free multiplication, against the known value.
  BigCount p(1);
  for (int i = 0; i < 200; ++i) p *= BigCount(2);
  CHECK(p.str() ==
        "1606938044258990275541962092341162602522202993782792835301376");
  CHECK(p == BigCount::from_decimal(
                 "1606938044258990275541962092341162602522202993782792835301376"));
  CHECK(p.bit_width() == 201);
}

TEST_CASE("bigcount decimal parse rejects junk") {
  CHECK_THROWS(BigCount::from_decimal(""));
  CHECK_THROWS(BigCount::from_decimal("12x3"));
  CHECK_THROWS(BigCount::from_decimal("-5"));
}

TEST_CASE("bigcount log and double conversion") {
  CHECK(BigCount(1).log() == doctest::Approx(0.0));
  CHECK(BigCount(1000000).log() == doctest::Approx(std::log(1e6)).epsilon(1e-14));
  BigCount p(1);
  for (int i = 0; i < 333; ++i) p *= BigCount(10);
  CHECK(p.log() == doctest::Approx(333 * std::log(10.0)).epsilon(1e-13));
  CHECK(BigCount(123456789).to_double() == doctest::Approx(1.23456789e8));
  CHECK_THROWS(BigCount(0).log());
}
