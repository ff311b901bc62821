#include "wenger/checked_int.hpp"

#include <limits>

namespace wenger {

CheckedInt CheckedInt::operator-() const {
  CheckedInt r;
  if (__builtin_sub_overflow(static_cast<__int128>(0), v_, &r.v_))
    throw std::overflow_error("CheckedInt: negation overflow");
  return r;
}

CheckedInt CheckedInt::operator+(CheckedInt o) const {
  CheckedInt r;
  if (__builtin_add_overflow(v_, o.v_, &r.v_))
    throw std::overflow_error("CheckedInt: addition overflow");
  return r;
}

CheckedInt CheckedInt::operator-(CheckedInt o) const {
  CheckedInt r;
  if (__builtin_sub_overflow(v_, o.v_, &r.v_))
    throw std::overflow_error("CheckedInt: subtraction overflow");
  return r;
}

CheckedInt CheckedInt::operator*(CheckedInt o) const {
  CheckedInt r;
  if (__builtin_mul_overflow(v_, o.v_, &r.v_))
    throw std::overflow_error("CheckedInt: multiplication overflow");
  return r;
}

CheckedInt CheckedInt::operator/(CheckedInt o) const {
  if (o.v_ == 0) throw std::invalid_argument("CheckedInt: division by zero");
  if (v_ % o.v_ != 0)
    throw std::invalid_argument("CheckedInt: inexact division");
  CheckedInt r;
  r.v_ = v_ / o.v_;
  return r;
}

CheckedInt CheckedInt::pow(CheckedInt base, int exp) {
  if (exp < 0) throw std::invalid_argument("CheckedInt: negative exponent");
  CheckedInt r{1};
  for (int i = 0; i < exp; ++i) r = r * base;
  return r;
}

CheckedInt CheckedInt::binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return CheckedInt{0};
  if (k > n - k) k = n - k;
  CheckedInt r{1};
  for (long long j = 1; j <= k; ++j) {
    r = r * CheckedInt{n - k + j};
    r = r / CheckedInt{j};  // exact: product of j consecutive integers
  }
  return r;
}

bool CheckedInt::fits_int64() const {
  return v_ >= std::numeric_limits<long long>::min() &&
         v_ <= std::numeric_limits<long long>::max();
}

long long CheckedInt::to_int64() const {
  if (!fits_int64())
    throw std::overflow_error("CheckedInt: value exceeds 64 bits");
  return static_cast<long long>(v_);
}

std::string CheckedInt::to_string() const {
  if (v_ == 0) return "0";
  bool negative = v_ < 0;
  // Avoid negating INT128_MIN: accumulate digits from the negative side.
  __int128 x = negative ? v_ : -v_;
  std::string digits;
  while (x != 0) {
    digits.push_back(static_cast<char>('0' - static_cast<int>(x % 10)));
    x /= 10;
  }
  if (negative) digits.push_back('-');
  return {digits.rbegin(), digits.rend()};
}

}  // namespace wenger
