#include "sunchaser/oracle.hpp"

#include <doctest.h>

#include "sunchaser/generate.hpp"
#include "sunchaser/recognize.hpp"
#include "test_helpers.hpp"

using namespace sunchaser;
using namespace sunchaser::testing;

TEST_CASE("brute_force_coupon") {
  CHECK_FALSE(brute_force_coupon(mk3(), 2).has_value());
  CHECK_FALSE(brute_force_coupon(mg5(), 2).has_value());

  const auto f4 = brute_force_coupon(fan(4), 2);
  REQUIRE(f4.has_value());
  CHECK(f4->colors == std::vector<std::uint8_t>{0, 0, 1, 1});
  CHECK(verify_coupon(fan(4), *f4).valid);

  CHECK(brute_force_coupon(fan(4), 1).has_value());
  CHECK_THROWS_AS(brute_force_coupon(fan(30), 2), Error);
  CHECK_THROWS_AS(brute_force_coupon(fan(16), 3), Error);
}

TEST_CASE("oracle colorings verify") {
  for (int n = 4; n <= 9; ++n)
    enumerate_triangulations(n, [&](const OuterplanarTriangulation& g) {
      if (const auto c = brute_force_coupon(g, 2)) REQUIRE(verify_coupon(g, *c).valid);
      return true;
    });
}

TEST_CASE("total_domatic_number") {
  CHECK(total_domatic_number(mk3()) == 1);
  CHECK(total_domatic_number(fan(4)) == 2);
  CHECK_THROWS_AS(total_domatic_number(fan(16)), Error);

  // Never above 2 for maximal outerplanar graphs in range.
  for (int n = 5; n <= 12; ++n)
    enumerate_triangulations(n, [&](const OuterplanarTriangulation& g) {
      const int d = total_domatic_number(g);
      REQUIRE(d >= 1);
      REQUIRE(d <= 2);
      return true;
    });
}

TEST_CASE("check_characterization") {
  const CheckReport r6 = check_characterization(6);
  CHECK(r6.total == 14);
  CHECK(r6.generalized_suns == 2);
  CHECK(r6.colorable == 12);
  CHECK(r6.discrepancies.empty());

  const CheckReport r8 = check_characterization(8);
  CHECK(r8.total == 132);
  CHECK(r8.generalized_suns == 0);
  CHECK(r8.colorable == 132);
  CHECK(r8.discrepancies.empty());

  CHECK_THROWS_AS(check_characterization(3), Error);
  CHECK_THROWS_AS(check_characterization(15), Error);
}

TEST_CASE("check reports are identical across job counts") {
  const CheckReport serial = check_characterization(9, 1);
  const CheckReport parallel = check_characterization(9, 3);
  CHECK(serial.total == parallel.total);
  CHECK(serial.generalized_suns == parallel.generalized_suns);
  CHECK(serial.colorable == parallel.colorable);
  CHECK(serial.discrepancies == parallel.discrepancies);
}
