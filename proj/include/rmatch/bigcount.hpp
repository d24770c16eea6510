#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <string>

namespace rmatch {

// Exact non-negative matching count. Counts grow like 1.47^n already for
// r = 2, so 64-bit arithmetic overflows around n = 120; every count in the
// library goes through this type.
class BigCount {
 public:
  BigCount() : v_(0) {}
  BigCount(std::uint64_t v) : v_(v) {}

  BigCount& operator+=(const BigCount& o) {
    v_ += o.v_;
    return *this;
  }
  BigCount& operator*=(const BigCount& o) {
    v_ *= o.v_;
    return *this;
  }
  friend BigCount operator+(BigCount a, const BigCount& b) {
    a += b;
    return a;
  }
  friend BigCount operator*(BigCount a, const BigCount& b) {
    a *= b;
    return a;
  }

  friend bool operator==(const BigCount& a, const BigCount& b) {
    return a.v_ == b.v_;
  }
  friend std::strong_ordering operator<=>(const BigCount& a,
                                          const BigCount& b) {
    int c = a.v_.compare(b.v_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  bool is_zero() const { return v_.is_zero(); }

  // Full decimal representation, never scientific notation.
  std::string str() const { return v_.str(); }

  static BigCount from_decimal(const std::string& s);

  // Rounds to the nearest double; +inf when the value exceeds double range.
  double to_double() const;

  // Natural log. Requires a positive value; accurate to ~1e-14 absolute,
  // which is what the growth-ratio checks rely on.
  double log() const;

  std::size_t bit_width() const {
    return v_.is_zero() ? 0 : msb(v_) + 1;
  }

 private:
  boost::multiprecision::cpp_int v_;
};

}  // namespace rmatch
