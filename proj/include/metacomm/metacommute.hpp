#pragma once

// The metacommutation permutation sigma_omega on the norm-p ideal census, its
// projective-line counterpart tau, and the cycle-structure statements about them.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "metacomm/eichler.hpp"
#include "metacomm/padic.hpp"

namespace metacomm {

/// Point of P^1(F_p) as a row vector class: [1 : b], or [0 : 1] when infinite.
struct ProjPoint {
  bool infinite = false;
  std::uint64_t b = 0;

  static ProjPoint finite(std::uint64_t b) { return {false, b}; }
  static ProjPoint at_infinity() { return {true, 0}; }

  /// [1 : b] -> b, [0 : 1] -> p.
  std::size_t index(std::uint64_t p) const { return infinite ? p : b; }
  static ProjPoint from_index(std::size_t i, std::uint64_t p) {
    return i == p ? at_infinity() : finite(i);
  }
  std::string to_string() const;

  friend bool operator==(const ProjPoint&, const ProjPoint&) = default;
};

/// Permutation of P^1(F_p), indexed as ProjPoint::index.
struct ProjPermutation {
  std::uint64_t p = 0;
  std::vector<std::size_t> image;

  ProjPoint apply(const ProjPoint& x) const { return ProjPoint::from_index(image[x.index(p)], p); }
};

struct PermutationReport {
  /// mapping[i] is the image of census entry i.
  std::vector<IdealLabel> labels;
  std::vector<IdealLabel> mapping;
  /// Full cycle decomposition in census order, fixed points included.
  std::vector<std::vector<IdealLabel>> cycles;
  std::size_t fixed_s1 = 0;
  std::size_t fixed_s2 = 0;
  /// Length of the first non-trivial cycle on each side; absent if that side is fixed.
  std::optional<std::size_t> ell1;
  std::optional<std::size_t> ell2;

  bool is_identity() const { return labels == mapping; }
  /// Sorted cycle lengths on one side.
  std::vector<std::size_t> cycle_type(Side side) const;
  /// All non-trivial cycles on each side share one length.
  bool uniform_cycle_lengths() const;
};

/// gamma^-1 omega gamma = [[d, c], [b p^n, a]] for omega = [[a, b], [c p^n, d]].
/// c is recovered by exact division, so the (1,2) entry is known modulo p^(K-n).
Mat2 conj_by_gamma(const EichlerContext& ctx, const Mat2& omega);

IdealLabel sigma_apply(const EichlerContext& ctx, const Mat2& omega, const IdealLabel& label);
PermutationReport sigma_perm(const EichlerContext& ctx, const Mat2& omega);
/// Stops at the first moved label.
bool sigma_is_identity(const EichlerContext& ctx, const Mat2& omega);

/// v -> v * omega_bar on row vectors. Throws SingularModP.
ProjPermutation tau_perm(const Mat2& omega);
std::vector<std::size_t> tau_cycle_type_excluding_infinity(const ProjPermutation& tau);

IdealLabel phi_gamma(const IdealLabel& label);
ProjPoint varphi(const IdealLabel& label);

struct DiagramCheck {
  bool a = false;
  bool b = false;
  bool c = false;
  bool all() const { return a && b && c; }
};
DiagramCheck check_diagrams(const EichlerContext& ctx, const Mat2& omega);

/// Quadratic character of trd^2 - 4 nrd. Throws ScalarModP, CharacterUndefined.
int fixed_count_formula(const EichlerContext& ctx, const Mat2& omega);
/// Number of finite points [1 : b] fixed by tau, by direct enumeration.
std::size_t eigen_fixed_count(const Mat2& omega);

/// Least l >= 1 with omega^l scalar mod p. Throws SingularModP.
std::size_t pgl_order(const Mat2& omega);

bool kernel_member(const EichlerContext& ctx, const Mat2& omega);

struct EllPair {
  std::optional<std::size_t> ell1;
  std::optional<std::size_t> ell2;
  bool equal = true;
};
EllPair ell_pair(const PermutationReport& report);

/// Uniformly random element of O^x at the context's precision.
Mat2 random_unit(const EichlerContext& ctx, std::mt19937_64& rng);

}  // namespace metacomm
