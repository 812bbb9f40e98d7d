#include "metacomm/verify.hpp"

#include <algorithm>
#include <sstream>

#include "metacomm/metacommute.hpp"
#include "metacomm/tree.hpp"

namespace metacomm {

namespace {

template <class T>
std::string str(const T& value) {
  std::ostringstream os;
  os << value;
  return os.str();
}

std::string str(const std::optional<std::size_t>& value) {
  return value ? std::to_string(*value) : "none";
}

std::string str(const std::vector<std::size_t>& values) {
  std::string out = "{";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(values[i]);
  }
  return out + "}";
}

std::string str(bool value) { return value ? "true" : "false"; }

class Findings {
 public:
  explicit Findings(const Mat2& omega) : omega_(omega.to_string()) {}

  template <class A, class B>
  void expect_eq(const std::string& what, const A& expected, const B& actual) {
    if (!(expected == actual)) add(what, str(expected), str(actual));
  }
  void add(const std::string& what, const std::string& expected, const std::string& actual) {
    found_.push_back(Counterexample{0, omega_, what, expected, actual});
  }
  std::vector<Counterexample> take() { return std::move(found_); }

 private:
  std::string omega_;
  std::vector<Counterexample> found_;
};

std::string label_str(const IdealLabel& l) { return l.to_string(); }

}  // namespace

std::vector<Counterexample> diagrams_case(const EichlerContext& ctx, const Mat2& omega) {
  Findings f(omega);
  const DiagramCheck check = check_diagrams(ctx, omega);
  f.expect_eq("diagram a", true, check.a);
  f.expect_eq("diagram b", true, check.b);
  f.expect_eq("diagram c", true, check.c);
  return f.take();
}

std::vector<Counterexample> cycle_structure_case(const EichlerContext& ctx, const Mat2& omega) {
  Findings f(omega);
  const PermutationReport report = sigma_perm(ctx, omega);
  for (std::size_t i = 0; i < report.labels.size(); ++i) {
    if (report.labels[i].side != report.mapping[i].side) {
      f.add("side of image of " + label_str(report.labels[i]), label_str(report.labels[i]),
            label_str(report.mapping[i]));
    }
  }
  f.expect_eq("uniform cycle lengths", true, report.uniform_cycle_lengths());

  const Mat2 conj = conj_by_gamma(ctx, omega);
  f.expect_eq("ell1 vs PGL2 order", pgl_order(omega), report.ell1.value_or(1));
  f.expect_eq("ell2 vs PGL2 order of conjugate", pgl_order(conj), report.ell2.value_or(1));
  f.expect_eq("S1 cycle type vs tau_omega", tau_cycle_type_excluding_infinity(tau_perm(omega)),
              report.cycle_type(Side::S1));
  f.expect_eq("S2 cycle type vs tau_conj", tau_cycle_type_excluding_infinity(tau_perm(conj)),
              report.cycle_type(Side::S2));
  if (ctx.n() == 1) {
    f.expect_eq("Rad cycle type", std::vector<std::size_t>{1}, report.cycle_type(Side::Rad));
  }
  return f.take();
}

std::vector<Counterexample> fixed_points_case(const EichlerContext& ctx, const Mat2& omega) {
  Findings f(omega);
  const PermutationReport report = sigma_perm(ctx, omega);
  const Mat2 conj = conj_by_gamma(ctx, omega);
  const bool omega_scalar = omega.is_scalar_mod_p_pow(1);
  const bool conj_scalar = conj.is_scalar_mod_p_pow(1);

  f.expect_eq("S1 fixed points vs eigenvector count", eigen_fixed_count(omega), report.fixed_s1);
  f.expect_eq("S2 fixed points vs eigenvector count", eigen_fixed_count(conj), report.fixed_s2);
  if (!omega_scalar) {
    if (ctx.p() != 2) {
      const int formula = fixed_count_formula(ctx, omega);
      if (formula < 0) f.add("quadratic character", "0 or 1", std::to_string(formula));
      f.expect_eq("S1 fixed points vs quadratic character",
                  static_cast<std::size_t>(std::max(formula, 0)), report.fixed_s1);
    }
    if (report.fixed_s1 > 1) f.add("S1 fixed points", "at most 1", std::to_string(report.fixed_s1));
  }
  if (!omega_scalar && !conj_scalar) {
    f.expect_eq("fixed points S1 = S2", report.fixed_s1, report.fixed_s2);
  }
  return f.take();
}

std::vector<Counterexample> kernel_case(const EichlerContext& ctx, const Mat2& omega) {
  Findings f(omega);
  f.expect_eq("kernel_member <=> identity", sigma_is_identity(ctx, omega), kernel_member(ctx, omega));
  return f.take();
}

std::vector<Counterexample> ell_case(const EichlerContext& ctx, const Mat2& omega) {
  Findings f(omega);
  const EllPair pair = ell_pair(sigma_perm(ctx, omega));
  if (!pair.equal) f.add("ell1 = ell2", str(pair.ell1), str(pair.ell2));
  return f.take();
}

std::vector<Counterexample> scalar_conjugate_case(const EichlerContext& ctx, const Mat2& omega) {
  Findings f(omega);
  if (!omega.is_scalar_mod_p_pow(1)) return f.take();
  const auto a = static_cast<std::int64_t>(omega.at(0, 0).value() % ctx.p());
  const auto c =
      static_cast<std::int64_t>(omega.at(1, 0).div_p_pow(ctx.n()).value() % ctx.p());
  const Mat2 expected = ctx.matrix(a, c, 0, a).reduce(1);
  f.expect_eq("conjugate mod p", expected, conj_by_gamma(ctx, omega).reduce(1));
  return f.take();
}

std::vector<Counterexample> oracle_case(const EichlerContext& ctx, const CensusForms& forms,
                                        const Mat2& omega) {
  Findings f(omega);
  const PAdicScalar p = ctx.scalar(static_cast<std::int64_t>(ctx.p()));
  const auto basis = order_basis(ctx);
  for (const auto& ideal : ctx.census()) {
    const std::string name = ideal.label.to_string();
    const IdealLabel fast = sigma_apply(ctx, omega, ideal.label);
    const IdealLabel brute = brute_sigma(ctx, forms, omega, ideal.label);
    if (!(fast == brute)) f.add("sigma(" + name + ") brute vs fast", brute.to_string(), fast.to_string());

    const ModuleBasis module = sigma_module(ctx, omega, ideal.label);
    f.expect_eq("index exponent of sigma(" + name + ")", 2, module.exponent_sum());
    const Mat2 image = ideal.generator * omega;
    for (const auto& b : basis) {
      if (!module_contains(ctx, module, p * b)) f.add("O p inside sigma(" + name + ")", "true", "false");
      if (!module_contains(ctx, module, b * image)) {
        f.add("P omega inside sigma(" + name + ")", "true", "false");
      }
    }
  }
  return f.take();
}

std::vector<Counterexample> segment_action_case(const EichlerContext& ctx, const CensusForms& forms,
                                                const Mat2& omega) {
  Findings f(omega);
  for (const auto& v : order_segment(ctx).path) {
    f.expect_eq("omega fixes " + v.to_string(), v.to_string(), act(v, omega).to_string());
  }
  for (const auto& ideal : ctx.census()) {
    const Segment before = segment_of_ideal(ctx, ideal);
    const IdealLabel image = brute_sigma(ctx, forms, omega, ideal.label);
    const Segment after = segment_of_ideal(ctx, ctx.census()[ctx.index_of(image)]);
    const std::string what = "segment of sigma(" + ideal.label.to_string() + ")";
    f.expect_eq(what + " start", after.from.to_string(), act(before.from, omega).to_string());
    f.expect_eq(what + " end", after.to.to_string(), act(before.to, omega).to_string());
  }
  return f.take();
}

std::vector<Counterexample> tree_metric_case(const EichlerContext& ctx, const Mat2& u) {
  Findings f(u);
  const Modulus& mod = ctx.modulus();
  const Mat2 gamma = gamma_of(ctx);
  const std::uint64_t s = u.at(0, 1).value() % ctx.p();
  const Mat2 ut = u.transpose();

  std::vector<Mat2> sample = {Mat2::identity(mod), gamma, gamma_i(ctx, 1), alpha_gen(ctx, s),
                              beta_gen(ctx, s), alpha_gen(ctx, s) * gamma,
                              ut * alpha_gen(ctx, 0) * gamma};
  std::vector<TreeVertex> vertices;
  for (const auto& g : sample) vertices.push_back(canonical_vertex(g));

  for (const Mat2& perturb : {u, ut}) {
    for (std::size_t i = 0; i < sample.size(); ++i) {
      PAdicScalar scale = ctx.scalar(1);
      for (int k = 0; k <= 2; ++k) {
        const TreeVertex moved = canonical_vertex(scale * (perturb * sample[i]));
        f.expect_eq("canonical vertex of u g p^" + std::to_string(k), vertices[i].to_string(),
                    moved.to_string());
        scale *= ctx.scalar(static_cast<std::int64_t>(ctx.p()));
      }
    }
  }

  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i; j < vertices.size(); ++j) {
      const TreeVertex& v = vertices[i];
      const TreeVertex& w = vertices[j];
      const int d = distance(v, w, mod);
      const std::string pair = v.to_string() + " ~ " + w.to_string();
      f.expect_eq("symmetry " + pair, d, distance(w, v, mod));
      f.expect_eq("zero distance iff equal " + pair, v == w, d == 0);
      for (const Mat2& g : {u, ut, gamma}) {
        f.expect_eq("isometry " + pair, d, distance(act(v, g), act(w, g), mod));
      }
      const Segment seg = geodesic(v, w, mod);
      f.expect_eq("geodesic size " + pair, static_cast<std::size_t>(d) + 1, seg.path.size());
      for (std::size_t k = 0; k < seg.path.size(); ++k) {
        const TreeVertex& x = seg.path[k];
        f.expect_eq("additivity " + pair + " via " + x.to_string(), d,
                    distance(v, x, mod) + distance(x, w, mod));
        if (k > 0) f.expect_eq("geodesic step " + pair, 1, distance(seg.path[k - 1], x, mod));
      }
    }
  }
  return f.take();
}

SuiteOutcome census_suite(const EichlerContext& ctx) {
  SuiteOutcome out;
  out.name = "census";
  const Mat2 id = Mat2::identity(ctx.modulus());
  Findings f(id);
  const std::size_t expected = 2 * ctx.p() + (ctx.n() == 1 ? 1 : 0);
  try {
    f.expect_eq("verify_census size", expected, verify_census(ctx));
  } catch (const Error& e) {
    f.add("verify_census", std::to_string(expected), e.what());
  }
  f.expect_eq("enumerate_ideals size", expected, enumerate_ideals(ctx).size());
  const auto& census = ctx.census();
  for (std::size_t i = 0; i < census.size(); ++i) {
    for (std::size_t j = 0; j < census.size(); ++j) {
      const bool eq = ideal_equal(ctx, census[i].generator, census[j].generator);
      if (eq != (i == j)) {
        f.add("ideal_equal " + census[i].label.to_string() + " " + census[j].label.to_string(),
              str(i == j), str(eq));
      }
    }
  }
  const Mat2 gamma = gamma_of(ctx);
  for (std::uint64_t s = 0; s < ctx.p(); ++s) {
    f.expect_eq("gamma beta_s = alpha_s gamma, s=" + std::to_string(s), alpha_gen(ctx, s) * gamma,
                gamma * beta_gen(ctx, s));
  }
  out.checked = census.size();
  auto found = f.take();
  out.failed = found.size();
  found.resize(std::min(found.size(), kMaxRecordedFailures));
  out.failures = std::move(found);
  return out;
}

SuiteOutcome segment_census_suite(const EichlerContext& ctx) {
  SuiteOutcome out;
  out.name = "segments";
  const Modulus& mod = ctx.modulus();
  Findings f(Mat2::identity(mod));
  const TreeVertex root = TreeVertex::root();
  const Segment o_segment = order_segment(ctx);
  const TreeVertex top = o_segment.to;
  const Mat2 gamma = gamma_of(ctx);

  f.expect_eq("length of O's segment", ctx.n(), distance(root, top, mod));
  std::vector<Segment> segments;
  for (const auto& ideal : ctx.census()) {
    const std::string name = ideal.label.to_string();
    const Segment seg = segment_of_ideal(ctx, ideal);
    f.expect_eq("length of segment " + name, static_cast<std::size_t>(ctx.n()), seg.length());
    if (ideal.label.side == Side::Rad) {
      f.expect_eq("Rad segment is O's segment", true, seg.same_support(o_segment));
    } else {
      f.expect_eq("start of " + name + " next to [L0]", 1, distance(root, seg.from, mod));
      f.expect_eq("end of " + name + " next to [L0 gamma]", 1, distance(top, seg.to, mod));
    }
    for (const auto& other : segments) {
      if (other.same_support(seg)) f.add("segment of " + name + " is new", "distinct", "repeated");
    }
    segments.push_back(seg);
  }
  for (std::uint64_t s = 0; s < ctx.p(); ++s) {
    f.expect_eq("distance [L0] to [L0 alpha_s gamma]", ctx.n() + 1,
                distance(root, canonical_vertex(alpha_gen(ctx, s) * gamma), mod));
  }
  for (const auto& v : ball({root}, 1, mod)) {
    const auto adj = neighbors(v, mod);
    std::vector<TreeVertex> sorted(adj.begin(), adj.end());
    std::sort(sorted.begin(), sorted.end());
    f.expect_eq("neighbor count of " + v.to_string(), ctx.p() + 1,
                static_cast<std::uint64_t>(std::unique(sorted.begin(), sorted.end()) - sorted.begin()));
    for (const auto& w : adj) {
      f.expect_eq("neighbor distance", 1, distance(v, w, mod));
      const auto back = neighbors(w, mod);
      f.expect_eq("adjacency is symmetric", true, std::find(back.begin(), back.end(), v) != back.end());
    }
  }
  out.checked = segments.size();
  auto found = f.take();
  out.failed = found.size();
  found.resize(std::min(found.size(), kMaxRecordedFailures));
  out.failures = std::move(found);
  return out;
}

std::vector<SuiteOutcome> run_verification(const EichlerContext& ctx, const VerifyOptions& options) {
  auto sweep = [&](const std::string& name, const OmegaSource& source, const OmegaCheck& check) {
    return options.parallel ? sweep_parallel(name, source, check) : sweep_serial(name, source, check);
  };
  std::vector<SuiteOutcome> out;
  out.push_back(census_suite(ctx));
  out.push_back(segment_census_suite(ctx));

  const OmegaList omegas = random_units(ctx, options.trials, options.seed);
  const CensusForms forms(ctx);
  out.push_back(sweep("diagrams", omegas, [&](const Mat2& w) { return diagrams_case(ctx, w); }));
  out.push_back(
      sweep("cycle_structure", omegas, [&](const Mat2& w) { return cycle_structure_case(ctx, w); }));
  out.push_back(sweep("fixed_points", omegas, [&](const Mat2& w) { return fixed_points_case(ctx, w); }));
  out.push_back(sweep("kernel", omegas, [&](const Mat2& w) { return kernel_case(ctx, w); }));
  out.push_back(sweep("ell_equality", omegas, [&](const Mat2& w) { return ell_case(ctx, w); }));
  out.push_back(
      sweep("scalar_conjugate", omegas, [&](const Mat2& w) { return scalar_conjugate_case(ctx, w); }));
  out.push_back(sweep("oracle", omegas, [&](const Mat2& w) { return oracle_case(ctx, forms, w); }));
  out.push_back(sweep("segment_action", omegas,
                      [&](const Mat2& w) { return segment_action_case(ctx, forms, w); }));
  out.push_back(sweep("tree_metric", omegas, [&](const Mat2& w) { return tree_metric_case(ctx, w); }));

  if (options.exhaustive_mod) {
    const int k = *options.exhaustive_mod;
    const UnitResidues residues(ctx, k);
    const std::string suffix = " mod p^" + std::to_string(k);
    out.push_back(sweep("diagrams" + suffix, residues, [&](const Mat2& w) { return diagrams_case(ctx, w); }));
    out.push_back(sweep("cycle_structure" + suffix, residues,
                        [&](const Mat2& w) { return cycle_structure_case(ctx, w); }));
    out.push_back(sweep("fixed_points" + suffix, residues,
                        [&](const Mat2& w) { return fixed_points_case(ctx, w); }));
    out.push_back(sweep("kernel" + suffix, residues, [&](const Mat2& w) { return kernel_case(ctx, w); }));
    out.push_back(sweep("ell_equality" + suffix, residues, [&](const Mat2& w) { return ell_case(ctx, w); }));
  }
  return out;
}

}  // namespace metacomm
