#include "metacomm/sweep.hpp"

#include "metacomm/metacommute.hpp"

#include <algorithm>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace metacomm {

std::string Counterexample::to_string() const {
  std::string out = "omega=" + omega;
  if (!label.empty()) out += " label=" + label;
  out += " expected=" + expected + " actual=" + actual;
  return out;
}

UnitResidues::UnitResidues(const EichlerContext& ctx, int k)
    : mod_(ctx.modulus()), pn_(ctx.modulus().power(ctx.n())) {
  if (k <= ctx.n() || k >= ctx.precision()) {
    throw Error(ErrorKind::InvalidArgument,
                "residue sweep modulus p^k needs n < k < precision, got k=" + std::to_string(k));
  }
  full_ = mod_.power(k);
  lower_ = mod_.power(k - ctx.n());
  size_ = full_ * full_ * full_ * lower_;
}

std::optional<Mat2> UnitResidues::at(std::uint64_t index) const {
  const std::uint64_t d = index % full_;
  index /= full_;
  const std::uint64_t c = index % lower_;
  index /= lower_;
  const std::uint64_t b = index % full_;
  const std::uint64_t a = index / full_;
  const std::uint64_t p = mod_.prime();
  // det = ad - b c p^n is a unit iff p does not divide ad.
  if (a % p == 0 || d % p == 0) return std::nullopt;
  return Mat2(PAdicScalar::from_residue(mod_, a), PAdicScalar::from_residue(mod_, b),
              PAdicScalar::from_residue(mod_, c * pn_), PAdicScalar::from_residue(mod_, d));
}

OmegaList random_units(const EichlerContext& ctx, std::size_t count, std::uint64_t seed) {
  std::seed_seq seq{seed, static_cast<std::uint64_t>(ctx.p()), static_cast<std::uint64_t>(ctx.n()),
                    static_cast<std::uint64_t>(ctx.precision())};
  std::mt19937_64 rng(seq);
  std::vector<Mat2> omegas;
  omegas.reserve(count);
  for (std::size_t i = 0; i < count; ++i) omegas.push_back(random_unit(ctx, rng));
  return OmegaList(std::move(omegas));
}

namespace {

// Library errors raised inside a check are findings, not crashes.
std::vector<Counterexample> guarded(const OmegaCheck& check, const Mat2& omega) {
  try {
    return check(omega);
  } catch (const Error& e) {
    return {Counterexample{0, omega.to_string(), "", "no error", e.what()}};
  }
}

void record(SuiteOutcome& out, std::uint64_t index, std::vector<Counterexample>&& found) {
  out.failed += found.size();
  for (auto& cx : found) {
    if (out.failures.size() >= kMaxRecordedFailures) break;
    cx.index = index;
    out.failures.push_back(std::move(cx));
  }
}

}  // namespace

SuiteOutcome sweep_serial(const std::string& name, const OmegaSource& source,
                          const OmegaCheck& check) {
  SuiteOutcome out;
  out.name = name;
  const std::uint64_t size = source.size();
  for (std::uint64_t i = 0; i < size; ++i) {
    const auto omega = source.at(i);
    if (!omega) continue;
    ++out.checked;
    auto found = guarded(check, *omega);
    if (!found.empty()) record(out, i, std::move(found));
  }
  return out;
}

SuiteOutcome sweep_parallel(const std::string& name, const OmegaSource& source,
                            const OmegaCheck& check) {
  const auto size = static_cast<std::int64_t>(source.size());
  std::vector<SuiteOutcome> partial(static_cast<std::size_t>(sweep_threads()));

#pragma omp parallel
  {
#ifdef _OPENMP
    SuiteOutcome& mine = partial[static_cast<std::size_t>(omp_get_thread_num())];
#else
    SuiteOutcome& mine = partial[0];
#endif
    // Static blocks keep each thread's indices increasing, so its first
    // recorded failures are its lowest-index ones.
#pragma omp for schedule(static)
    for (std::int64_t i = 0; i < size; ++i) {
      const auto omega = source.at(static_cast<std::uint64_t>(i));
      if (!omega) continue;
      ++mine.checked;
      auto found = guarded(check, *omega);
      if (!found.empty()) record(mine, static_cast<std::uint64_t>(i), std::move(found));
    }
  }

  SuiteOutcome out;
  out.name = name;
  for (auto& part : partial) {
    out.checked += part.checked;
    out.failed += part.failed;
    for (auto& cx : part.failures) out.failures.push_back(std::move(cx));
  }
  std::stable_sort(out.failures.begin(), out.failures.end(),
                   [](const Counterexample& x, const Counterexample& y) { return x.index < y.index; });
  if (out.failures.size() > kMaxRecordedFailures) out.failures.resize(kMaxRecordedFailures);
  return out;
}

int sweep_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace metacomm
