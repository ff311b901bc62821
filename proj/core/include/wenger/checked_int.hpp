#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace wenger {

/// Exact signed 128-bit integer. Every arithmetic operation checks for
/// overflow and throws std::overflow_error instead of wrapping.
class CheckedInt {
 public:
  constexpr CheckedInt() : v_(0) {}
  constexpr CheckedInt(long long v) : v_(v) {}  // NOLINT: implicit on purpose

  static CheckedInt pow(CheckedInt base, int exp);
  /// Binomial coefficient with the extended convention C(n,k) = 0 for
  /// k < 0, k > n, or n < 0.
  static CheckedInt binomial(long long n, long long k);

  CheckedInt operator-() const;
  CheckedInt operator+(CheckedInt o) const;
  CheckedInt operator-(CheckedInt o) const;
  CheckedInt operator*(CheckedInt o) const;
  /// Exact division; throws std::invalid_argument if the quotient is not exact.
  CheckedInt operator/(CheckedInt o) const;
  CheckedInt& operator+=(CheckedInt o) { return *this = *this + o; }
  CheckedInt& operator-=(CheckedInt o) { return *this = *this - o; }
  CheckedInt& operator*=(CheckedInt o) { return *this = *this * o; }

  friend bool operator==(CheckedInt a, CheckedInt b) { return a.v_ == b.v_; }
  friend bool operator!=(CheckedInt a, CheckedInt b) { return a.v_ != b.v_; }
  friend bool operator<(CheckedInt a, CheckedInt b) { return a.v_ < b.v_; }
  friend bool operator<=(CheckedInt a, CheckedInt b) { return a.v_ <= b.v_; }
  friend bool operator>(CheckedInt a, CheckedInt b) { return a.v_ > b.v_; }
  friend bool operator>=(CheckedInt a, CheckedInt b) { return a.v_ >= b.v_; }

  /// Throws std::overflow_error if the value does not fit in 64 bits.
  long long to_int64() const;
  bool fits_int64() const;
  double to_double() const { return static_cast<double>(v_); }
  std::string to_string() const;

 private:
  __int128 v_;
};

}  // namespace wenger
