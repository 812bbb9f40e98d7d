#pragma once

// Executable forms of the structural statements about sigma_omega. Each
// *_case function checks one element and returns its counterexamples; the
// run_verification driver feeds them through the sweep kernels.

#include <cstdint>
#include <optional>
#include <vector>

#include "metacomm/eichler.hpp"
#include "metacomm/oracle.hpp"
#include "metacomm/sweep.hpp"

namespace metacomm {

/// Diagrams (a), (b), (c) commute pointwise on the census.
std::vector<Counterexample> diagrams_case(const EichlerContext& ctx, const Mat2& omega);
/// Side stability, uniform non-trivial cycle length per side equal to the PGL2
/// order of the matching reduction, and cycle type = tau type (+) tau^gamma type.
std::vector<Counterexample> cycle_structure_case(const EichlerContext& ctx, const Mat2& omega);
/// Fixed points on S1 against the quadratic character (odd p) or eigenvector
/// count (p = 2), and equal counts on both sides when neither reduction is scalar.
std::vector<Counterexample> fixed_points_case(const EichlerContext& ctx, const Mat2& omega);
/// kernel_member(omega) <=> sigma_omega is the identity.
std::vector<Counterexample> kernel_case(const EichlerContext& ctx, const Mat2& omega);
std::vector<Counterexample> ell_case(const EichlerContext& ctx, const Mat2& omega);
/// omega = a mod p implies gamma^-1 omega gamma = [[a, c], [0, a]] mod p.
std::vector<Counterexample> scalar_conjugate_case(const EichlerContext& ctx, const Mat2& omega);
/// brute_sigma = sigma_apply on the census, index 2, and O p within P omega + O p within O.
std::vector<Counterexample> oracle_case(const EichlerContext& ctx, const CensusForms& forms,
                                        const Mat2& omega);
/// The segment of brute_sigma(omega, P) is the image of P's segment under omega,
/// and omega fixes O's segment vertexwise.
std::vector<Counterexample> segment_action_case(const EichlerContext& ctx, const CensusForms& forms,
                                                const Mat2& omega);
/// Canonicity of u g p^k, isometry of u and gamma, geodesic additivity.
std::vector<Counterexample> tree_metric_case(const EichlerContext& ctx, const Mat2& u);

/// Census size, pairwise distinctness, and beta_s = gamma^-1 alpha_s gamma.
SuiteOutcome census_suite(const EichlerContext& ctx);
/// Segment lengths and endpoints, injectivity, Rad segment, regularity.
SuiteOutcome segment_census_suite(const EichlerContext& ctx);

struct VerifyOptions {
  std::size_t trials = 1000;
  std::uint64_t seed = 42;
  /// Additionally sweep every unit residue mod p^k.
  std::optional<int> exhaustive_mod;
  bool parallel = true;
};

std::vector<SuiteOutcome> run_verification(const EichlerContext& ctx, const VerifyOptions& options);

}  // namespace metacomm
