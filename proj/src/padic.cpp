#include "metacomm/padic.hpp"

#include <ostream>
#include <sstream>

namespace metacomm {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  if (m <= (std::uint64_t{1} << 32)) return (a * b) % m;
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

// ---------------------------------------------------------------------------
// Modulus

Modulus Modulus::make(std::uint64_t p, int precision) {
  if (!is_prime(p)) {
    throw Error(ErrorKind::InvalidArgument, "modulus base " + std::to_string(p) + " is not prime");
  }
  if (precision < 1) {
    throw Error(ErrorKind::InvalidArgument, "precision must be >= 1");
  }
  constexpr std::uint64_t kLimit = std::uint64_t{1} << 62;
  std::uint64_t pk = 1;
  for (int i = 0; i < precision; ++i) {
    if (pk > kLimit / p) {
      throw Error(ErrorKind::PrecisionUnsupported,
                  std::to_string(p) + "^" + std::to_string(precision) + " exceeds 2^62");
    }
    pk *= p;
  }
  return Modulus(p, precision, pk);
}

std::uint64_t Modulus::power(int e) const {
  if (e < 0 || e > k_) {
    throw Error(ErrorKind::PrecisionExhausted,
                "p^" + std::to_string(e) + " outside precision " + std::to_string(k_));
  }
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) r *= p_;
  return r;
}

// ---------------------------------------------------------------------------
// PAdicScalar

namespace {

std::uint64_t reduce_signed(std::int64_t v, std::uint64_t m) {
  if (v >= 0) return static_cast<std::uint64_t>(v) % m;
  // -(v+1) avoids overflow at INT64_MIN.
  std::uint64_t mag = static_cast<std::uint64_t>(-(v + 1)) + 1;
  std::uint64_t r = mag % m;
  return r == 0 ? 0 : m - r;
}

}  // namespace

PAdicScalar::PAdicScalar(const Modulus& mod, std::int64_t value)
    : mod_(mod), value_(reduce_signed(value, mod.order())) {}

PAdicScalar PAdicScalar::from_residue(const Modulus& mod, std::uint64_t residue) {
  return PAdicScalar(mod, residue % mod.order(), true);
}

void PAdicScalar::check_same(const PAdicScalar& rhs) const {
  if (!(mod_ == rhs.mod_)) {
    throw Error(ErrorKind::InvalidArgument, "mixed moduli in p-adic arithmetic");
  }
}

int PAdicScalar::val() const {
  if (value_ == 0) return kInfiniteValuation;
  int e = 0;
  std::uint64_t v = value_;
  while (v % mod_.prime() == 0) {
    v /= mod_.prime();
    ++e;
  }
  return e;
}

bool PAdicScalar::val_at_least(int t) const {
  if (t >= mod_.precision()) {
    throw Error(ErrorKind::PrecisionExhausted,
                "divisibility by p^" + std::to_string(t) + " undecidable at precision " +
                    std::to_string(mod_.precision()));
  }
  if (t <= 0) return true;
  return value_ % mod_.power(t) == 0;
}

std::uint64_t PAdicScalar::residue_mod_p_pow(int e) const { return value_ % mod_.power(e); }

PAdicScalar PAdicScalar::div_p_pow(int e) const {
  if (e == 0) return *this;
  std::uint64_t pe = mod_.power(e);
  if (value_ % pe != 0) {
    throw Error(ErrorKind::InvalidArgument,
                "residue " + std::to_string(value_) + " not divisible by p^" + std::to_string(e));
  }
  return PAdicScalar(mod_, value_ / pe, true);
}

PAdicScalar PAdicScalar::operator-() const {
  return PAdicScalar(mod_, value_ == 0 ? 0 : mod_.order() - value_, true);
}

PAdicScalar& PAdicScalar::operator+=(const PAdicScalar& rhs) {
  check_same(rhs);
  value_ += rhs.value_;
  if (value_ >= mod_.order()) value_ -= mod_.order();
  return *this;
}

PAdicScalar& PAdicScalar::operator-=(const PAdicScalar& rhs) {
  check_same(rhs);
  value_ = value_ >= rhs.value_ ? value_ - rhs.value_ : value_ + mod_.order() - rhs.value_;
  return *this;
}

PAdicScalar& PAdicScalar::operator*=(const PAdicScalar& rhs) {
  check_same(rhs);
  value_ = mul_mod(value_, rhs.value_, mod_.order());
  return *this;
}

PAdicScalar unit_inv(const PAdicScalar& x) {
  if (!x.is_unit()) {
    throw Error(ErrorKind::NotAUnit, std::to_string(x.value()) + " is divisible by p");
  }
  // Extended Euclid on (value, p^K).
  std::int64_t old_r = static_cast<std::int64_t>(x.value());
  std::int64_t r = static_cast<std::int64_t>(x.modulus().order());
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::int64_t t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  return PAdicScalar(x.modulus(), old_s);
}

int quad_char(std::int64_t x, std::uint64_t p) {
  if (p == 2) {
    throw Error(ErrorKind::CharacterUndefined, "quadratic character needs an odd prime");
  }
  std::uint64_t r = reduce_signed(x, p);
  if (r == 0) return 0;
  // Euler's criterion.
  return pow_mod(r, (p - 1) / 2, p) == 1 ? 1 : -1;
}

// ---------------------------------------------------------------------------
// Mat2

Mat2::Mat2(const Modulus& mod, std::int64_t a11, std::int64_t a12, std::int64_t a21,
           std::int64_t a22)
    : e_{PAdicScalar(mod, a11), PAdicScalar(mod, a12), PAdicScalar(mod, a21),
         PAdicScalar(mod, a22)} {}

Mat2::Mat2(const PAdicScalar& a11, const PAdicScalar& a12, const PAdicScalar& a21,
           const PAdicScalar& a22)
    : e_{a11, a12, a21, a22} {
  if (!(a11.modulus() == a12.modulus() && a11.modulus() == a21.modulus() &&
        a11.modulus() == a22.modulus())) {
    throw Error(ErrorKind::InvalidArgument, "matrix entries with mixed moduli");
  }
}

Mat2 Mat2::scalar(const PAdicScalar& c) {
  PAdicScalar zero(c.modulus(), 0);
  return Mat2(c, zero, zero, c);
}

Mat2 Mat2::adjugate() const { return Mat2(e_[3], -e_[1], -e_[2], e_[0]); }

Mat2 Mat2::transpose() const { return Mat2(e_[0], e_[2], e_[1], e_[3]); }

Mat2 Mat2::reduce(int precision) const {
  Modulus small = Modulus::make(modulus().prime(), precision);
  if (precision > modulus().precision()) {
    throw Error(ErrorKind::PrecisionExhausted, "cannot raise precision by reduction");
  }
  return Mat2(PAdicScalar::from_residue(small, e_[0].value()),
              PAdicScalar::from_residue(small, e_[1].value()),
              PAdicScalar::from_residue(small, e_[2].value()),
              PAdicScalar::from_residue(small, e_[3].value()));
}

bool Mat2::is_scalar_mod_p_pow(int e) const {
  // Reduction modulo p^e with e <= K is exact, unlike a valuation bound.
  return e_[1].residue_mod_p_pow(e) == 0 && e_[2].residue_mod_p_pow(e) == 0 &&
         (e_[0] - e_[3]).residue_mod_p_pow(e) == 0;
}

Mat2& Mat2::operator*=(const Mat2& rhs) {
  Mat2 out(e_[0] * rhs.e_[0] + e_[1] * rhs.e_[2], e_[0] * rhs.e_[1] + e_[1] * rhs.e_[3],
           e_[2] * rhs.e_[0] + e_[3] * rhs.e_[2], e_[2] * rhs.e_[1] + e_[3] * rhs.e_[3]);
  *this = out;
  return *this;
}

Mat2 operator*(const PAdicScalar& c, const Mat2& m) {
  return Mat2(c * m.e_[0], c * m.e_[1], c * m.e_[2], c * m.e_[3]);
}

Mat2 operator+(const Mat2& a, const Mat2& b) {
  return Mat2(a.e_[0] + b.e_[0], a.e_[1] + b.e_[1], a.e_[2] + b.e_[2], a.e_[3] + b.e_[3]);
}

std::string Mat2::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Mat2& m) {
  return os << "[[" << m.at(0, 0).value() << "," << m.at(0, 1).value() << "],["
            << m.at(1, 0).value() << "," << m.at(1, 1).value() << "]]";
}

}  // namespace metacomm
