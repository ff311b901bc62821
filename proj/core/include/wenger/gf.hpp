#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace wenger {

bool is_prime(long long n);

struct PrimePower {
  int p;
  int e;
};

/// Factors q as p^e with p prime, or nullopt when q is not a prime power.
std::optional<PrimePower> factor_prime_power(long long q);

/// Irreducibility test for a monic polynomial over GF(p), coefficients
/// constant term first. Uses trial division by all monic polynomials of
/// degree at most deg/2.
bool is_irreducible_mod_p(const std::vector<int>& coeffs, int p);

/// The lexicographically smallest monic irreducible of degree e over GF(p),
/// where the order is on the canonical integer sum(c[i] * p^i) of the
/// non-leading coefficients. Deterministic across runs.
/// Requires p prime and 1 <= e <= 6.
std::vector<int> find_irreducible(int p, int e);

/// All monic irreducibles of degree e over GF(p), in the same order.
std::vector<std::vector<int>> all_irreducibles(int p, int e);

/// Renders coefficients (constant first) as "X^2+2X+1" style text.
std::string poly_to_string(const std::vector<int>& coeffs);

class FieldSpec;
class FieldElement;
using FieldSpecPtr = std::shared_ptr<const FieldSpec>;

/// An explicit model of GF(p^e): a fixed monic irreducible modulus plus
/// precomputed arithmetic tables on the canonical integer encoding
/// sum(digit[i] * p^i) in {0, ..., q-1}. Immutable after construction and
/// safe to share across threads; all operations are pure.
class FieldSpec : public std::enable_shared_from_this<FieldSpec> {
 public:
  /// GF(p^e) with the deterministic lex-smallest modulus.
  static FieldSpecPtr make(int p, int e);
  /// GF(p^e) with an explicit monic irreducible modulus (constant term
  /// first, e+1 coefficients). Irreducibility is checked.
  static FieldSpecPtr make(int p, int e, std::vector<int> modulus);
  /// Factors q as a prime power; throws std::invalid_argument otherwise.
  static FieldSpecPtr from_order(long long q);

  int p() const { return p_; }
  int e() const { return e_; }
  int q() const { return q_; }
  const std::vector<int>& modulus() const { return modulus_; }

  /// True when the other spec models the same field the same way
  /// (equal p, e and modulus).
  bool same_field(const FieldSpec& o) const;

  // Arithmetic on canonical integers; the fast path for enumeration loops.
  int add(int a, int b) const { return add_[a * q_ + b]; }
  int sub(int a, int b) const { return add_[a * q_ + neg_[b]]; }
  int neg(int a) const { return neg_[a]; }
  int mul(int a, int b) const { return mul_[a * q_ + b]; }
  int inv(int a) const;
  int pow(int a, unsigned long long n) const;
  /// Absolute trace, valued in the prime subfield {0, ..., p-1}.
  int trace(int a) const { return trace_[a]; }

  std::vector<int> digits(int a) const;
  int from_digits(const std::vector<int>& d) const;

  FieldElement element(int canonical) const;
  FieldElement zero() const;
  FieldElement one() const;
  /// All q elements in canonical order 0, 1, ..., q-1.
  std::vector<FieldElement> enumerate() const;

 private:
  FieldSpec(int p, int e, std::vector<int> modulus);
  void build_tables();

  int p_, e_, q_;
  std::vector<int> modulus_;
  std::vector<int> add_, mul_;  // q*q, flattened row-major
  std::vector<int> neg_, inv_, trace_;
};

/// One element of a FieldSpec, stored as its canonical integer.
class FieldElement {
 public:
  FieldElement() = default;

  int canonical() const { return value_; }
  std::vector<int> digits() const;
  const FieldSpecPtr& field() const { return spec_; }
  bool is_zero() const { return value_ == 0; }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  FieldElement operator-() const;
  FieldElement inverse() const;
  FieldElement pow(unsigned long long n) const;
  FieldElement trace() const;
  int trace_int() const;

  /// Equal iff the specs model the same field and the canonical integers
  /// agree. Elements of different fields are unequal, never an error.
  friend bool operator==(const FieldElement& a, const FieldElement& b);
  friend bool operator!=(const FieldElement& a, const FieldElement& b) {
    return !(a == b);
  }

 private:
  friend class FieldSpec;
  FieldElement(FieldSpecPtr s, int v) : spec_(std::move(s)), value_(v) {}

  FieldSpecPtr spec_;
  int value_ = 0;
};

}  // namespace wenger
