#include "doctest.h"
#include "wignerd/half_int.hpp"

using namespace wigner;

TEST_CASE("half-integers store doubled values exactly") {
  const HalfInt three_halves = HalfInt::from_twice(3);
  CHECK(three_halves.twice() == 3);
  CHECK(!three_halves.is_integer());
  CHECK(three_halves.value() == 1.5);
  CHECK(three_halves.str() == "3/2");

  const HalfInt two = HalfInt::whole(2);
  CHECK(two.twice() == 4);
  CHECK(two.is_integer());
  CHECK(two.str() == "2");

  CHECK((three_halves + three_halves).twice() == 6);
  CHECK((-three_halves).twice() == -3);
  CHECK(HalfInt::from_twice(-1) < HalfInt::from_twice(1));
}

TEST_CASE("parity rules are enforced, never coerced") {
  CHECK(same_parity(HalfInt::from_twice(3), HalfInt::from_twice(-1)));
  CHECK(!same_parity(HalfInt::from_twice(3), HalfInt::whole(1)));

  CHECK_NOTHROW(require_projection(HalfInt::from_twice(3), HalfInt::from_twice(-3)));
  // m = 0 is not a valid projection of j = 1/2
  CHECK_THROWS_AS(require_projection(HalfInt::from_twice(1), HalfInt::whole(0)),
                  domain_error);
  // |m| > j
  CHECK_THROWS_AS(require_projection(HalfInt::whole(1), HalfInt::whole(2)),
                  domain_error);
  // negative spin
  CHECK_THROWS_AS(require_spin(HalfInt::from_twice(-1)), domain_error);
}

TEST_CASE("quarter turns") {
  CHECK(quarter_turns(0) == 0);
  CHECK(quarter_turns(2) == 1);
  CHECK(quarter_turns(-2) == 3);
  CHECK(quarter_turns(8) == 0);
  CHECK(quarter_turns(-10) == 3);
  CHECK_THROWS_AS(quarter_turns(1), domain_error);
}
