#ifndef WIGNERD_HALF_INT_HPP
#define WIGNERD_HALF_INT_HPP

#include <compare>
#include <cstdint>
#include <string>

#include "wignerd/errors.hpp"

namespace wigner {

/// Exact half-integer quantum number (j, m, n, mu). Stores twice the value,
/// so 3/2 is stored as 3 and -1 as -2; all arithmetic on quantum numbers is
/// exact integer arithmetic.
class HalfInt {
 public:
  constexpr HalfInt() = default;

  static constexpr HalfInt from_twice(std::int64_t twice) {
    return HalfInt(twice);
  }

  /// A whole (integer) value, e.g. whole(3) == 3.
  static constexpr HalfInt whole(std::int64_t v) { return HalfInt(2 * v); }

  constexpr std::int64_t twice() const { return twice_; }

  constexpr bool is_integer() const { return twice_ % 2 == 0; }

  constexpr double value() const { return static_cast<double>(twice_) / 2.0; }

  constexpr HalfInt operator-() const { return HalfInt(-twice_); }

  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) {
    return HalfInt(a.twice_ + b.twice_);
  }
  friend constexpr HalfInt operator-(HalfInt a, HalfInt b) {
    return HalfInt(a.twice_ - b.twice_);
  }

  friend constexpr auto operator<=>(HalfInt, HalfInt) = default;

  /// True when a - b is a whole integer (same parity class).
  friend constexpr bool same_parity(HalfInt a, HalfInt b) {
    return (a.twice_ - b.twice_) % 2 == 0;
  }

  std::string str() const {
    if (is_integer()) return std::to_string(twice_ / 2);
    return std::to_string(twice_) + "/2";
  }

 private:
  constexpr explicit HalfInt(std::int64_t twice) : twice_(twice) {}

  std::int64_t twice_ = 0;
};

/// Quarter-turn count ((twice_diff/2) mod 4, in [0,3]) of an integer
/// difference of half-integers given as its doubled value. Encodes a power
/// of i so all heavy arithmetic stays real.
inline int quarter_turns(std::int64_t twice_diff) {
  if (twice_diff % 2 != 0)
    throw domain_error("quarter phase requires an integer difference");
  const std::int64_t q = (twice_diff / 2) % 4;
  return static_cast<int>(q < 0 ? q + 4 : q);
}

/// Rejects j < 0.
inline void require_spin(HalfInt j) {
  if (j.twice() < 0)
    throw domain_error("spin j must be nonnegative, got " + j.str());
}

/// Rejects (j, m) pairs with |m| > j or mismatched parity. m must range over
/// -j, -j+1, ..., j; violations are never silently coerced.
inline void require_projection(HalfInt j, HalfInt m) {
  require_spin(j);
  if (!same_parity(j, m))
    throw domain_error("projection m=" + m.str() + " has wrong parity for j=" +
                       j.str());
  if (m.twice() < -j.twice() || m.twice() > j.twice())
    throw domain_error("projection m=" + m.str() + " out of range for j=" +
                       j.str());
}

}  // namespace wigner

#endif  // WIGNERD_HALF_INT_HPP
