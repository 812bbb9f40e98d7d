#pragma once

// The local Eichler order O = [[R, R], [p^n R, R]] over R = Z_p, and the
// census of its principal left ideals of reduced norm p.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "metacomm/padic.hpp"

namespace metacomm {

enum class Side { S1, S2, Rad };

/// Canonical name of a norm-p left ideal: S1(s), S2(s) or Rad.
struct IdealLabel {
  Side side = Side::S1;
  std::uint64_t s = 0;

  static IdealLabel s1(std::uint64_t s) { return {Side::S1, s}; }
  static IdealLabel s2(std::uint64_t s) { return {Side::S2, s}; }
  static IdealLabel rad() { return {Side::Rad, 0}; }

  std::string to_string() const;
  /// Inverse of to_string. Throws InvalidArgument.
  static IdealLabel parse(const std::string& text);

  friend bool operator==(const IdealLabel&, const IdealLabel&) = default;
};

struct NormPIdeal {
  IdealLabel label;
  Mat2 generator;
};

class EichlerContext {
 public:
  /// precision defaults to n + 12. Requires p prime, n >= 1, precision >= n + 2.
  EichlerContext(std::uint64_t p, int n, std::optional<int> precision = std::nullopt);

  std::uint64_t p() const noexcept { return modulus_.prime(); }
  int n() const noexcept { return n_; }
  int precision() const noexcept { return modulus_.precision(); }
  const Modulus& modulus() const noexcept { return modulus_; }

  PAdicScalar scalar(std::int64_t v) const { return PAdicScalar(modulus_, v); }
  Mat2 matrix(std::int64_t a11, std::int64_t a12, std::int64_t a21, std::int64_t a22) const {
    return Mat2(modulus_, a11, a12, a21, a22);
  }

  /// S1(0..p-1), S2(0..p-1), then Rad when n = 1.
  const std::vector<NormPIdeal>& census() const noexcept { return census_; }
  std::size_t census_size() const noexcept { return census_.size(); }
  /// Position of a label in census order.
  std::size_t index_of(const IdealLabel& label) const;
  const Mat2& generator(const IdealLabel& label) const { return census_[index_of(label)].generator; }

 private:
  Modulus modulus_;
  int n_;
  std::vector<NormPIdeal> census_;
};

/// gamma = [[0, 1], [p^n, 0]].
Mat2 gamma_of(const EichlerContext& ctx);
/// gamma_i = [[0, 1], [p^i, 0]] for 0 <= i <= n.
Mat2 gamma_i(const EichlerContext& ctx, int i);
/// alpha_s = [[1, s], [0, p]].
Mat2 alpha_gen(const EichlerContext& ctx, std::uint64_t s);
/// beta_s = gamma^-1 alpha_s gamma = [[p, 0], [s p^n, 1]].
Mat2 beta_gen(const EichlerContext& ctx, std::uint64_t s);

bool contains(const EichlerContext& ctx, const Mat2& m);
bool is_unit(const EichlerContext& ctx, const Mat2& m);

const std::vector<NormPIdeal>& enumerate_ideals(const EichlerContext& ctx);

/// O g1 == O g2, for g1, g2 in O with det of valuation exactly 1.
bool ideal_equal(const EichlerContext& ctx, const Mat2& g1, const Mat2& g2);

/// Census label of O g. Throws BadGenerator, or InternalCensusError when the
/// census does not contain exactly one match.
IdealLabel identify_ideal(const EichlerContext& ctx, const Mat2& g);

}  // namespace metacomm
