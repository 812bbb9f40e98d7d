#include "metacomm/metacommute.hpp"

#include <algorithm>

namespace metacomm {

std::string ProjPoint::to_string() const {
  return infinite ? "[0:1]" : "[1:" + std::to_string(b) + "]";
}

std::vector<std::size_t> PermutationReport::cycle_type(Side side) const {
  std::vector<std::size_t> lengths;
  for (const auto& cycle : cycles) {
    if (cycle.front().side == side) lengths.push_back(cycle.size());
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

bool PermutationReport::uniform_cycle_lengths() const {
  for (Side side : {Side::S1, Side::S2}) {
    std::optional<std::size_t> seen;
    for (std::size_t len : cycle_type(side)) {
      if (len == 1) continue;
      if (seen && *seen != len) return false;
      seen = len;
    }
  }
  return true;
}

namespace {

void require_unit(const EichlerContext& ctx, const Mat2& omega) {
  if (!(omega.modulus() == ctx.modulus())) {
    throw Error(ErrorKind::NotAUnit, "element modulus differs from context");
  }
  if (!contains(ctx, omega)) {
    throw Error(ErrorKind::NotAUnit,
                omega.to_string() + " not in O: lower-left entry not divisible by p^" +
                    std::to_string(ctx.n()));
  }
  if (!omega.det().is_unit()) {
    throw Error(ErrorKind::NotAUnit, omega.to_string() + " has determinant divisible by p");
  }
}

std::uint64_t entry_mod_p(const Mat2& m, int i, int j) {
  return m.at(i, j).value() % m.modulus().prime();
}

}  // namespace

Mat2 conj_by_gamma(const EichlerContext& ctx, const Mat2& omega) {
  if (!contains(ctx, omega)) {
    throw Error(ErrorKind::BadElement, omega.to_string() + " not in O");
  }
  const PAdicScalar c = omega.at(1, 0).div_p_pow(ctx.n());
  const PAdicScalar pn = PAdicScalar::from_residue(ctx.modulus(), ctx.modulus().power(ctx.n()));
  return Mat2(omega.at(1, 1), c, omega.at(0, 1) * pn, omega.at(0, 0));
}

IdealLabel sigma_apply(const EichlerContext& ctx, const Mat2& omega, const IdealLabel& label) {
  require_unit(ctx, omega);
  return identify_ideal(ctx, ctx.generator(label) * omega);
}

PermutationReport sigma_perm(const EichlerContext& ctx, const Mat2& omega) {
  require_unit(ctx, omega);
  PermutationReport report;
  const auto& census = ctx.census();
  const std::size_t size = census.size();
  report.labels.reserve(size);
  report.mapping.reserve(size);
  std::vector<std::size_t> image(size);
  for (std::size_t i = 0; i < size; ++i) {
    report.labels.push_back(census[i].label);
    report.mapping.push_back(identify_ideal(ctx, census[i].generator * omega));
    image[i] = ctx.index_of(report.mapping.back());
  }

  std::vector<bool> visited(size, false);
  for (std::size_t start = 0; start < size; ++start) {
    if (visited[start]) continue;
    std::vector<IdealLabel> cycle;
    for (std::size_t i = start; !visited[i]; i = image[i]) {
      visited[i] = true;
      cycle.push_back(census[i].label);
    }
    const Side side = cycle.front().side;
    if (cycle.size() == 1) {
      if (side == Side::S1) ++report.fixed_s1;
      if (side == Side::S2) ++report.fixed_s2;
    } else {
      if (side == Side::S1 && !report.ell1) report.ell1 = cycle.size();
      if (side == Side::S2 && !report.ell2) report.ell2 = cycle.size();
    }
    report.cycles.push_back(std::move(cycle));
  }
  return report;
}

bool sigma_is_identity(const EichlerContext& ctx, const Mat2& omega) {
  require_unit(ctx, omega);
  for (const auto& ideal : ctx.census()) {
    if (!(identify_ideal(ctx, ideal.generator * omega) == ideal.label)) return false;
  }
  return true;
}

ProjPermutation tau_perm(const Mat2& omega) {
  const std::uint64_t p = omega.modulus().prime();
  const std::uint64_t a = entry_mod_p(omega, 0, 0), b = entry_mod_p(omega, 0, 1);
  const std::uint64_t c = entry_mod_p(omega, 1, 0), d = entry_mod_p(omega, 1, 1);
  if ((a * d + p * p - (b * c) % p) % p == 0) {
    throw Error(ErrorKind::SingularModP, omega.to_string() + " is singular mod p");
  }
  const Modulus fp = Modulus::make(p, 1);
  ProjPermutation tau{p, std::vector<std::size_t>(p + 1)};
  for (std::size_t i = 0; i <= p; ++i) {
    const ProjPoint pt = ProjPoint::from_index(i, p);
    const std::uint64_t x = pt.infinite ? 0 : 1;
    const std::uint64_t y = pt.infinite ? 1 : pt.b;
    // (x, y) * omega_bar
    const std::uint64_t u = (x * a + y * c) % p;
    const std::uint64_t v = (x * b + y * d) % p;
    if (u == 0) {
      tau.image[i] = p;
    } else {
      const PAdicScalar ratio =
          PAdicScalar::from_residue(fp, v) * unit_inv(PAdicScalar::from_residue(fp, u));
      tau.image[i] = ratio.value();
    }
  }
  return tau;
}

std::vector<std::size_t> tau_cycle_type_excluding_infinity(const ProjPermutation& tau) {
  const std::size_t p = tau.p;
  if (tau.image[p] != p) {
    throw Error(ErrorKind::InvalidArgument, "tau does not fix [0:1]");
  }
  std::vector<bool> visited(p, false);
  std::vector<std::size_t> lengths;
  for (std::size_t start = 0; start < p; ++start) {
    if (visited[start]) continue;
    std::size_t len = 0;
    for (std::size_t i = start; !visited[i]; i = tau.image[i]) {
      visited[i] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

IdealLabel phi_gamma(const IdealLabel& label) {
  if (label.side != Side::S2) {
    throw Error(ErrorKind::WrongSide, "phi_gamma expects an S2 label, got " + label.to_string());
  }
  return IdealLabel::s1(label.s);
}

ProjPoint varphi(const IdealLabel& label) {
  if (label.side != Side::S1) {
    throw Error(ErrorKind::WrongSide, "varphi expects an S1 label, got " + label.to_string());
  }
  return ProjPoint::finite(label.s);
}

DiagramCheck check_diagrams(const EichlerContext& ctx, const Mat2& omega) {
  require_unit(ctx, omega);
  const Mat2 conj = conj_by_gamma(ctx, omega);
  const ProjPermutation tau = tau_perm(omega);
  const ProjPermutation tau_conj = tau_perm(conj);
  DiagramCheck check{true, true, true};
  for (std::uint64_t s = 0; s < ctx.p(); ++s) {
    const IdealLabel s1 = IdealLabel::s1(s);
    const IdealLabel s2 = IdealLabel::s2(s);
    const IdealLabel image_s1 = sigma_apply(ctx, omega, s1);
    const IdealLabel image_s2 = sigma_apply(ctx, omega, s2);
    try {
      check.a = check.a && phi_gamma(image_s2) == sigma_apply(ctx, conj, phi_gamma(s2));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::WrongSide) throw;
      check.a = false;
    }
    try {
      check.b = check.b && varphi(image_s1) == tau.apply(varphi(s1));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::WrongSide) throw;
      check.b = false;
    }
    try {
      check.c = check.c &&
                varphi(phi_gamma(image_s2)) == tau_conj.apply(varphi(phi_gamma(s2)));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::WrongSide) throw;
      check.c = false;
    }
  }
  return check;
}

int fixed_count_formula(const EichlerContext& ctx, const Mat2& omega) {
  if (omega.is_scalar_mod_p_pow(1)) {
    throw Error(ErrorKind::ScalarModP, omega.to_string() + " is scalar mod p");
  }
  const PAdicScalar disc = omega.trace() * omega.trace() - ctx.scalar(4) * omega.det();
  return quad_char(static_cast<std::int64_t>(disc.value() % ctx.p()), ctx.p());
}

std::size_t eigen_fixed_count(const Mat2& omega) {
  const ProjPermutation tau = tau_perm(omega);
  std::size_t fixed = 0;
  for (std::size_t i = 0; i < tau.p; ++i) fixed += tau.image[i] == i ? 1 : 0;
  return fixed;
}

std::size_t pgl_order(const Mat2& omega) {
  const std::uint64_t p = omega.modulus().prime();
  const Mat2 base = omega.reduce(1);
  if (base.det().is_zero()) {
    throw Error(ErrorKind::SingularModP, omega.to_string() + " is singular mod p");
  }
  // |PGL2(F_p)| bounds every element order.
  const std::uint64_t group_order = p * (p * p - 1);
  Mat2 power = base;
  for (std::size_t ell = 1; ell <= group_order; ++ell) {
    if (power.is_scalar_mod_p_pow(1)) return ell;
    power *= base;
  }
  throw Error(ErrorKind::InvalidArgument, "order search exceeded |PGL2(F_p)|");
}

bool kernel_member(const EichlerContext& ctx, const Mat2& omega) {
  require_unit(ctx, omega);
  return (omega.at(0, 0) - omega.at(1, 1)).residue_mod_p_pow(1) == 0 &&
         omega.at(0, 1).residue_mod_p_pow(1) == 0 && omega.at(1, 0).val_at_least(ctx.n() + 1);
}

EllPair ell_pair(const PermutationReport& report) {
  EllPair pair{report.ell1, report.ell2, true};
  if (pair.ell1 && pair.ell2) pair.equal = *pair.ell1 == *pair.ell2;
  return pair;
}

Mat2 random_unit(const EichlerContext& ctx, std::mt19937_64& rng) {
  const Modulus& mod = ctx.modulus();
  std::uniform_int_distribution<std::uint64_t> full(0, mod.order() - 1);
  std::uniform_int_distribution<std::uint64_t> lower(0, mod.power(mod.precision() - ctx.n()) - 1);
  const std::uint64_t pn = mod.power(ctx.n());
  for (;;) {
    const std::uint64_t a = full(rng), b = full(rng), c = lower(rng), d = full(rng);
    Mat2 omega(PAdicScalar::from_residue(mod, a), PAdicScalar::from_residue(mod, b),
               PAdicScalar::from_residue(mod, c * pn), PAdicScalar::from_residue(mod, d));
    if (omega.det().is_unit()) return omega;
  }
}

}  // namespace metacomm
