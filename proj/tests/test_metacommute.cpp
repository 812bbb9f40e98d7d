#include "doctest.h"
#include "generators.hpp"
#include "metacomm/metacommute.hpp"
#include "naive_oracle.hpp"

using namespace metacomm;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::InvalidArgument;
}

using L = IdealLabel;

}  // namespace

TEST_CASE("conjugation by gamma") {
  const EichlerContext ctx(3, 1);
  CHECK(conj_by_gamma(ctx, ctx.matrix(1, 1, 0, 1)) == ctx.matrix(1, 0, 3, 1));
  CHECK(conj_by_gamma(ctx, ctx.matrix(5, 0, 0, 5)) == ctx.matrix(5, 0, 0, 5));
  CHECK(kind_of([&] { conj_by_gamma(ctx, ctx.matrix(1, 0, 1, 1)); }) == ErrorKind::BadElement);
  auto r = gen::rng(41);
  for (const auto& level : gen::small_levels()) {
    const EichlerContext c(level.p, level.n);
    const Mat2 g = gamma_of(c);
    const int digits = c.precision() - c.n();
    for (int i = 0; i < 50; ++i) {
      const Mat2 w = gen::unit(c, r);
      // gamma (gamma^-1 w gamma) = w gamma, up to the entries lost to division.
      CHECK((g * conj_by_gamma(c, w)).reduce(digits) == (w * g).reduce(digits));
    }
  }
}

TEST_CASE("example permutation: unipotent") {
  const EichlerContext ctx(3, 1);
  const Mat2 w = ctx.matrix(1, 1, 0, 1);
  CHECK(sigma_apply(ctx, w, L::s1(0)) == L::s1(1));
  CHECK(sigma_apply(ctx, w, L::s1(1)) == L::s1(2));
  CHECK(sigma_apply(ctx, w, L::s1(2)) == L::s1(0));
  for (std::uint64_t s = 0; s < 3; ++s) CHECK(sigma_apply(ctx, w, L::s2(s)) == L::s2(s));
  CHECK(sigma_apply(ctx, w, L::rad()) == L::rad());

  const PermutationReport report = sigma_perm(ctx, w);
  CHECK(report.ell1 == std::optional<std::size_t>(3));
  CHECK_FALSE(report.ell2.has_value());
  CHECK(report.fixed_s1 == 0);
  CHECK(report.fixed_s2 == 3);
  CHECK(report.cycle_type(Side::S1) == std::vector<std::size_t>{3});
  CHECK(report.cycle_type(Side::S2) == std::vector<std::size_t>{1, 1, 1});
  REQUIRE(report.cycles.size() == 5);
  CHECK(report.cycles[0] == std::vector<L>{L::s1(0), L::s1(1), L::s1(2)});
  CHECK_FALSE(report.is_identity());
  CHECK(check_diagrams(ctx, w).all());
  const EllPair ell = ell_pair(report);
  CHECK(ell.equal);
  CHECK(ell.ell1 == std::optional<std::size_t>(3));
}

TEST_CASE("example permutation: diagonal") {
  const EichlerContext ctx(3, 1);
  const Mat2 w = ctx.matrix(2, 0, 0, 1);
  const PermutationReport report = sigma_perm(ctx, w);
  CHECK(report.mapping ==
        std::vector<L>{L::s1(0), L::s1(2), L::s1(1), L::s2(0), L::s2(2), L::s2(1), L::rad()});
  CHECK(report.fixed_s1 == 1);
  CHECK(report.fixed_s2 == 1);
  CHECK(report.ell1 == std::optional<std::size_t>(2));
  CHECK(report.ell2 == std::optional<std::size_t>(2));
  CHECK(ell_pair(report).equal);
  CHECK(fixed_count_formula(ctx, w) == 1);
  CHECK(pgl_order(w) == 2);
}

TEST_CASE("identity element") {
  const EichlerContext ctx(3, 1);
  const Mat2 id = Mat2::identity(ctx.modulus());
  const PermutationReport report = sigma_perm(ctx, id);
  CHECK(report.is_identity());
  CHECK(sigma_is_identity(ctx, id));
  CHECK(kernel_member(ctx, id));
  CHECK(check_diagrams(ctx, id).all());
  CHECK(pgl_order(id) == 1);
  const EllPair ell = ell_pair(report);
  CHECK_FALSE(ell.ell1.has_value());
  CHECK_FALSE(ell.ell2.has_value());
  CHECK(kind_of([&] { fixed_count_formula(ctx, id); }) == ErrorKind::ScalarModP);
  CHECK(kind_of([&] { sigma_perm(ctx, alpha_gen(ctx, 0)); }) == ErrorKind::NotAUnit);
}

TEST_CASE("tau on the projective line") {
  const EichlerContext ctx(3, 1);
  const ProjPermutation shift = tau_perm(ctx.matrix(1, 1, 0, 1));
  for (std::uint64_t b = 0; b < 3; ++b) {
    CHECK(shift.apply(ProjPoint::finite(b)) == ProjPoint::finite((b + 1) % 3));
  }
  CHECK(shift.apply(ProjPoint::at_infinity()) == ProjPoint::at_infinity());
  CHECK(tau_cycle_type_excluding_infinity(shift) == std::vector<std::size_t>{3});

  const ProjPermutation scale = tau_perm(ctx.matrix(2, 0, 0, 1));
  for (std::uint64_t b = 0; b < 3; ++b) {
    CHECK(scale.apply(ProjPoint::finite(b)) == ProjPoint::finite((2 * b) % 3));
  }
  const ProjPermutation scalar = tau_perm(ctx.matrix(4, 3, 0, 7));
  for (std::size_t i = 0; i <= 3; ++i) CHECK(scalar.image[i] == i);
  CHECK(kind_of([&] { tau_perm(ctx.matrix(1, 1, 1, 1)); }) == ErrorKind::SingularModP);
  CHECK(ProjPoint::finite(2).to_string() == "[1:2]");
  CHECK(ProjPoint::at_infinity().to_string() == "[0:1]");
}

TEST_CASE("phi and varphi") {
  CHECK(phi_gamma(L::s2(0)) == L::s1(0));
  CHECK(phi_gamma(L::s2(2)) == L::s1(2));
  CHECK(kind_of([] { phi_gamma(L::rad()); }) == ErrorKind::WrongSide);
  CHECK(varphi(L::s1(0)) == ProjPoint::finite(0));
  CHECK(varphi(L::s1(2)) == ProjPoint::finite(2));
  CHECK(kind_of([] { varphi(L::s2(1)); }) == ErrorKind::WrongSide);
}

TEST_CASE("fixed point formula examples") {
  const EichlerContext ctx(3, 1);
  CHECK(fixed_count_formula(ctx, ctx.matrix(1, 1, 0, 1)) == 0);
  CHECK(fixed_count_formula(ctx, ctx.matrix(2, 0, 0, 1)) == 1);
  const EichlerContext c2(2, 1);
  CHECK(kind_of([&] { fixed_count_formula(c2, c2.matrix(1, 1, 0, 1)); }) ==
        ErrorKind::CharacterUndefined);
  CHECK(eigen_fixed_count(ctx.matrix(2, 0, 0, 1)) == 1);
  CHECK(eigen_fixed_count(ctx.matrix(1, 1, 0, 1)) == 0);
}

TEST_CASE("PGL2 order by powering") {
  const EichlerContext ctx(3, 1);
  CHECK(pgl_order(Mat2::identity(ctx.modulus())) == 1);
  CHECK(pgl_order(ctx.matrix(1, 1, 0, 1)) == 3);
  CHECK(pgl_order(ctx.matrix(2, 0, 0, 1)) == 2);
  auto r = gen::rng(43);
  for (const auto& level : gen::small_levels()) {
    const EichlerContext c(level.p, level.n);
    for (int i = 0; i < 30; ++i) {
      const Mat2 w = gen::unit(c, r);
      const std::size_t order = pgl_order(w);
      Mat2 power = Mat2::identity(c.modulus());
      for (std::size_t k = 1; k < order; ++k) {
        power = power * w;
        CHECK_FALSE(power.reduce(1).is_scalar_mod_p_pow(1));
      }
      CHECK((power * w).reduce(1).is_scalar_mod_p_pow(1));
    }
  }
}

TEST_CASE("kernel membership") {
  const EichlerContext ctx(3, 1);
  CHECK_FALSE(kernel_member(ctx, ctx.matrix(1, 1, 0, 1)));
  const Mat2 w = ctx.matrix(4, 6, 27 * 5, 7);
  CHECK(kernel_member(ctx, w));
  CHECK(sigma_perm(ctx, w).is_identity());
  CHECK(sigma_is_identity(ctx, w));
}

TEST_CASE("sigma agrees with the residue-set oracle") {
  auto r = gen::rng(47);
  for (const auto& level : gen::small_levels()) {
    const EichlerContext ctx(level.p, level.n);
    for (int i = 0; i < 20; ++i) {
      const Mat2 w = gen::unit(ctx, r);
      for (const auto& ideal : ctx.census()) {
        CHECK(sigma_apply(ctx, w, ideal.label) == naive::sigma(ctx, w, ideal.label));
      }
    }
  }
}

TEST_CASE("sigma is a right action") {
  auto r = gen::rng(53);
  for (const auto& level : gen::small_levels()) {
    const EichlerContext ctx(level.p, level.n);
    for (int i = 0; i < 30; ++i) {
      const Mat2 w1 = gen::unit(ctx, r);
      const Mat2 w2 = gen::unit(ctx, r);
      const PAdicScalar c = ctx.scalar(static_cast<std::int64_t>(1 + ctx.p() * (r() % 5)));
      for (const auto& ideal : ctx.census()) {
        const L once = sigma_apply(ctx, w1, ideal.label);
        CHECK(sigma_apply(ctx, w1 * w2, ideal.label) == sigma_apply(ctx, w2, once));
        CHECK(sigma_apply(ctx, c * w1, ideal.label) == once);
      }
    }
  }
}

TEST_CASE("random units lie in the unit group") {
  auto r = gen::rng(59);
  for (const auto& level : gen::small_levels()) {
    const EichlerContext ctx(level.p, level.n);
    for (int i = 0; i < 100; ++i) CHECK(is_unit(ctx, random_unit(ctx, r)));
  }
}
