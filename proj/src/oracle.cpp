#include "metacomm/oracle.hpp"

#include <algorithm>

namespace metacomm {

namespace {

using Row = ModuleBasis::Row;

struct RowOps {
  const Modulus& mod;

  PAdicScalar at(const Row& row, int col) const { return PAdicScalar::from_residue(mod, row[col]); }

  // row -= factor * pivot
  void subtract(Row& row, const PAdicScalar& factor, const Row& pivot) const {
    for (int k = 0; k < 4; ++k) row[k] = (at(row, k) - factor * at(pivot, k)).value();
  }

  Row scaled(const Row& row, const PAdicScalar& factor) const {
    Row out{};
    for (int k = 0; k < 4; ++k) out[k] = (factor * at(row, k)).value();
    return out;
  }

  bool is_zero(const Row& row) const {
    return std::all_of(row.begin(), row.end(), [](std::uint64_t x) { return x == 0; });
  }
};

}  // namespace

int ModuleBasis::exponent_sum() const {
  int sum = 0;
  for (int e : exponents_) sum += e;
  return sum;
}

ModuleBasis::Row order_coordinates(const EichlerContext& ctx, const Mat2& m) {
  if (!contains(ctx, m)) throw Error(ErrorKind::NotInOrder, m.to_string() + " not in O");
  return {m.at(0, 0).value(), m.at(0, 1).value(), m.at(1, 0).div_p_pow(ctx.n()).value(),
          m.at(1, 1).value()};
}

std::vector<Mat2> order_basis(const EichlerContext& ctx) {
  const auto pn = static_cast<std::int64_t>(ctx.modulus().power(ctx.n()));
  return {ctx.matrix(1, 0, 0, 0), ctx.matrix(0, 1, 0, 0), ctx.matrix(0, 0, pn, 0),
          ctx.matrix(0, 0, 0, 1)};
}

ModuleBasis module_hnf(const EichlerContext& ctx, const std::vector<Mat2>& generators) {
  const Modulus& mod = ctx.modulus();
  const RowOps ops{mod};
  std::vector<Row> pool;
  pool.reserve(generators.size() + 4);
  for (const auto& g : generators) pool.push_back(order_coordinates(ctx, g));

  ModuleBasis basis;
  for (int col = 0; col < 4; ++col) {
    auto best = pool.end();
    int best_val = kInfiniteValuation;
    for (auto it = pool.begin(); it != pool.end(); ++it) {
      const int v = ops.at(*it, col).val();
      if (v < best_val) {
        best_val = v;
        best = it;
      }
    }
    if (best == pool.end()) {
      // Column is zero modulo p^K in every remaining row.
      basis.rows_[col] = Row{};
      basis.exponents_[col] = mod.precision();
      continue;
    }
    Row pivot = *best;
    pool.erase(best);
    pivot = ops.scaled(pivot, unit_inv(ops.at(pivot, col).div_p_pow(best_val)));

    for (auto& row : pool) {
      const PAdicScalar x = ops.at(row, col);
      if (!x.is_zero()) ops.subtract(row, x.div_p_pow(best_val), pivot);
    }
    // p^(K-v) * pivot vanishes in this column but may not lie in the span of the rest.
    if (best_val > 0) {
      Row saturation =
          ops.scaled(pivot, PAdicScalar::from_residue(mod, mod.power(mod.precision() - best_val)));
      if (!ops.is_zero(saturation)) pool.push_back(saturation);
    }
    std::erase_if(pool, [&](const Row& row) { return ops.is_zero(row); });

    const std::uint64_t pe = mod.power(best_val);
    for (int above = 0; above < col; ++above) {
      const std::uint64_t x = basis.rows_[above][col];
      if (x >= pe) ops.subtract(basis.rows_[above], PAdicScalar::from_residue(mod, x / pe), pivot);
    }
    basis.rows_[col] = pivot;
    basis.exponents_[col] = best_val;
  }
  return basis;
}

bool module_contains(const EichlerContext& ctx, const ModuleBasis& basis, const Mat2& m) {
  const RowOps ops{ctx.modulus()};
  Row row = order_coordinates(ctx, m);
  for (int col = 0; col < 4; ++col) {
    const PAdicScalar x = ops.at(row, col);
    if (x.is_zero()) continue;
    const int e = basis.exponents()[col];
    if (e >= ctx.precision() || x.val() < e) return false;
    ops.subtract(row, x.div_p_pow(e), basis.rows()[col]);
  }
  return ops.is_zero(row);
}

namespace {

std::vector<Mat2> left_ideal_generators(const EichlerContext& ctx, const Mat2& element) {
  std::vector<Mat2> gens;
  const PAdicScalar p = ctx.scalar(static_cast<std::int64_t>(ctx.p()));
  for (const auto& b : order_basis(ctx)) {
    gens.push_back(b * element);
    gens.push_back(p * b);
  }
  return gens;
}

IdealLabel match_census(const EichlerContext& ctx, const CensusForms& forms,
                        const ModuleBasis& basis) {
  const auto& all = forms.forms();
  auto it = std::find(all.begin(), all.end(), basis);
  if (it == all.end()) {
    throw Error(ErrorKind::NoCensusMatch, "module matches no census ideal");
  }
  if (std::find(it + 1, all.end(), basis) != all.end()) {
    throw Error(ErrorKind::NoCensusMatch, "module matches several census ideals");
  }
  return ctx.census()[static_cast<std::size_t>(it - all.begin())].label;
}

}  // namespace

CensusForms::CensusForms(const EichlerContext& ctx) {
  forms_.reserve(ctx.census_size());
  for (const auto& ideal : ctx.census()) {
    forms_.push_back(module_hnf(ctx, left_ideal_generators(ctx, ideal.generator)));
  }
}

ModuleBasis sigma_module(const EichlerContext& ctx, const Mat2& omega, const IdealLabel& label) {
  if (!is_unit(ctx, omega)) throw Error(ErrorKind::NotAUnit, omega.to_string() + " not in O^x");
  return module_hnf(ctx, left_ideal_generators(ctx, ctx.generator(label) * omega));
}

IdealLabel brute_sigma(const EichlerContext& ctx, const CensusForms& forms, const Mat2& omega,
                       const IdealLabel& label) {
  return match_census(ctx, forms, sigma_module(ctx, omega, label));
}

IdealLabel brute_sigma(const EichlerContext& ctx, const Mat2& omega, const IdealLabel& label) {
  return brute_sigma(ctx, CensusForms(ctx), omega, label);
}

std::size_t verify_census(const EichlerContext& ctx) {
  const CensusForms forms(ctx);
  const auto& all = forms.forms();
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      if (all[i] == all[j]) {
        throw Error(ErrorKind::CensusCollision, ctx.census()[i].label.to_string() + " and " +
                                                    ctx.census()[j].label.to_string() +
                                                    " have the same module");
      }
    }
  }
  return all.size();
}

}  // namespace metacomm
