#pragma once

// Truncated p-adic integers: residues in Z/p^K, and 2x2 matrices over them.

#include <array>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <string>

#include "metacomm/error.hpp"

namespace metacomm {

/// Valuation returned for the zero residue, meaning "at least K".
inline constexpr int kInfiniteValuation = std::numeric_limits<int>::max();

bool is_prime(std::uint64_t p);

/// The ring Z/p^K. Construct through make(); p^K must stay below 2^62.
class Modulus {
 public:
  static Modulus make(std::uint64_t p, int precision);

  std::uint64_t prime() const noexcept { return p_; }
  int precision() const noexcept { return k_; }
  std::uint64_t order() const noexcept { return pk_; }
  /// p^e for 0 <= e <= K.
  std::uint64_t power(int e) const;

  friend bool operator==(const Modulus&, const Modulus&) = default;

 private:
  Modulus(std::uint64_t p, int k, std::uint64_t pk) : p_(p), k_(k), pk_(pk) {}

  std::uint64_t p_ = 2;
  int k_ = 1;
  std::uint64_t pk_ = 2;
};

class PAdicScalar {
 public:
  PAdicScalar(const Modulus& mod, std::int64_t value);
  static PAdicScalar from_residue(const Modulus& mod, std::uint64_t residue);

  const Modulus& modulus() const noexcept { return mod_; }
  std::uint64_t value() const noexcept { return value_; }
  bool is_zero() const noexcept { return value_ == 0; }

  /// Largest e < K with p^e | value, or kInfiniteValuation for zero.
  int val() const;
  /// val() >= t. Throws PrecisionExhausted when t >= K.
  bool val_at_least(int t) const;
  bool is_unit() const { return value_ % mod_.prime() != 0; }

  /// Residue modulo p^e as a plain integer.
  std::uint64_t residue_mod_p_pow(int e) const;

  /// value / p^e, requiring p^e | value. The top e digits of the result are
  /// unknown and set to zero, so it is only meaningful modulo p^(K-e).
  PAdicScalar div_p_pow(int e) const;

  PAdicScalar operator-() const;
  PAdicScalar& operator+=(const PAdicScalar& rhs);
  PAdicScalar& operator-=(const PAdicScalar& rhs);
  PAdicScalar& operator*=(const PAdicScalar& rhs);
  friend PAdicScalar operator+(PAdicScalar a, const PAdicScalar& b) { return a += b; }
  friend PAdicScalar operator-(PAdicScalar a, const PAdicScalar& b) { return a -= b; }
  friend PAdicScalar operator*(PAdicScalar a, const PAdicScalar& b) { return a *= b; }

  friend bool operator==(const PAdicScalar& a, const PAdicScalar& b) {
    return a.value_ == b.value_ && a.mod_ == b.mod_;
  }

 private:
  PAdicScalar(const Modulus& mod, std::uint64_t residue, bool) : mod_(mod), value_(residue) {}
  void check_same(const PAdicScalar& rhs) const;

  Modulus mod_;
  std::uint64_t value_;
};

/// Inverse of a unit. Throws NotAUnit when p | x.
PAdicScalar unit_inv(const PAdicScalar& x);

/// Quadratic character of x mod p: 0, +1 or -1. CharacterUndefined for p = 2.
int quad_char(std::int64_t x, std::uint64_t p);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// 2x2 matrix over Z/p^K, row-major entries.
class Mat2 {
 public:
  Mat2(const Modulus& mod, std::int64_t a11, std::int64_t a12, std::int64_t a21, std::int64_t a22);
  Mat2(const PAdicScalar& a11, const PAdicScalar& a12, const PAdicScalar& a21,
       const PAdicScalar& a22);

  static Mat2 identity(const Modulus& mod) { return Mat2(mod, 1, 0, 0, 1); }
  static Mat2 scalar(const PAdicScalar& c);

  const Modulus& modulus() const noexcept { return e_[0].modulus(); }
  /// Zero-based (row, col).
  const PAdicScalar& at(int row, int col) const { return e_[2 * row + col]; }
  PAdicScalar& at(int row, int col) { return e_[2 * row + col]; }

  PAdicScalar trace() const { return e_[0] + e_[3]; }
  PAdicScalar det() const { return e_[0] * e_[3] - e_[1] * e_[2]; }
  Mat2 adjugate() const;
  Mat2 transpose() const;

  /// Same integer representatives read in Z/p^k (k <= K).
  Mat2 reduce(int precision) const;
  /// Scalar modulo p^e: off-diagonal divisible by p^e and diagonal congruent.
  bool is_scalar_mod_p_pow(int e) const;

  Mat2& operator*=(const Mat2& rhs);
  friend Mat2 operator*(Mat2 a, const Mat2& b) { return a *= b; }
  friend Mat2 operator*(const PAdicScalar& c, const Mat2& m);
  friend Mat2 operator+(const Mat2& a, const Mat2& b);
  friend bool operator==(const Mat2& a, const Mat2& b) { return a.e_ == b.e_; }

  std::string to_string() const;

 private:
  std::array<PAdicScalar, 4> e_;
};

inline Mat2 adjugate(const Mat2& m) { return m.adjugate(); }

std::ostream& operator<<(std::ostream& os, const Mat2& m);

}  // namespace metacomm
