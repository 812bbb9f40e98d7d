#pragma once

// Independent route to sigma_omega: the module P*omega + O*p is built from
// explicit generators, brought to Hermite normal form in coordinates over the
// basis {E11, E12, p^n E21, E22} of O, and matched against the census forms.

#include <array>
#include <vector>

#include "metacomm/eichler.hpp"
#include "metacomm/padic.hpp"

namespace metacomm {

/// Row-style Hermite normal form over Z/p^K. Row i has zeros before column i,
/// a p-power pivot p^exponent(i), and entries above each pivot reduced modulo it.
class ModuleBasis {
 public:
  using Row = std::array<std::uint64_t, 4>;

  const std::array<Row, 4>& rows() const noexcept { return rows_; }
  const std::array<int, 4>& exponents() const noexcept { return exponents_; }
  int exponent_sum() const;

  friend bool operator==(const ModuleBasis&, const ModuleBasis&) = default;

 private:
  friend ModuleBasis module_hnf(const EichlerContext&, const std::vector<Mat2>&);
  std::array<Row, 4> rows_{};
  std::array<int, 4> exponents_{};
};

/// Coordinates of m in the O-basis. Throws NotInOrder.
ModuleBasis::Row order_coordinates(const EichlerContext& ctx, const Mat2& m);

ModuleBasis module_hnf(const EichlerContext& ctx, const std::vector<Mat2>& generators);
bool module_contains(const EichlerContext& ctx, const ModuleBasis& basis, const Mat2& m);

/// {E11, E12, p^n E21, E22}
std::vector<Mat2> order_basis(const EichlerContext& ctx);

/// Hermite forms of every census ideal, in census order.
class CensusForms {
 public:
  explicit CensusForms(const EichlerContext& ctx);
  const std::vector<ModuleBasis>& forms() const noexcept { return forms_; }

 private:
  std::vector<ModuleBasis> forms_;
};

/// Hermite form of P*omega + O*p for P = O*gen(label).
ModuleBasis sigma_module(const EichlerContext& ctx, const Mat2& omega, const IdealLabel& label);

IdealLabel brute_sigma(const EichlerContext& ctx, const CensusForms& forms, const Mat2& omega,
                       const IdealLabel& label);
IdealLabel brute_sigma(const EichlerContext& ctx, const Mat2& omega, const IdealLabel& label);

/// Census size after checking the forms are pairwise distinct. Throws CensusCollision.
std::size_t verify_census(const EichlerContext& ctx);

}  // namespace metacomm
