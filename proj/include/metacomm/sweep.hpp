#pragma once

// Batch kernels that evaluate a per-omega check over a family of units of O.
// sweep_serial is the reference; sweep_parallel distributes indices with
// OpenMP and must produce identical outcomes.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "metacomm/eichler.hpp"
#include "metacomm/padic.hpp"

namespace metacomm {

struct Counterexample {
  std::uint64_t index = 0;
  std::string omega;
  std::string label;
  std::string expected;
  std::string actual;

  std::string to_string() const;
  friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

struct SuiteOutcome {
  std::string name;
  std::uint64_t checked = 0;
  std::uint64_t failed = 0;
  /// Lowest-index failures, at most kMaxRecordedFailures.
  std::vector<Counterexample> failures;

  bool passed() const { return failed == 0; }
  friend bool operator==(const SuiteOutcome&, const SuiteOutcome&) = default;
};

inline constexpr std::size_t kMaxRecordedFailures = 16;

/// Index-addressable family of candidate elements; at() returns nullopt for
/// indices that are not units of O.
class OmegaSource {
 public:
  virtual ~OmegaSource() = default;
  virtual std::uint64_t size() const = 0;
  virtual std::optional<Mat2> at(std::uint64_t index) const = 0;
};

class OmegaList final : public OmegaSource {
 public:
  explicit OmegaList(std::vector<Mat2> omegas) : omegas_(std::move(omegas)) {}
  std::uint64_t size() const override { return omegas_.size(); }
  std::optional<Mat2> at(std::uint64_t index) const override { return omegas_[index]; }
  const std::vector<Mat2>& omegas() const { return omegas_; }

 private:
  std::vector<Mat2> omegas_;
};

/// Every [[a, b], [c p^n, d]] with a, b, d in [0, p^k) and c in [0, p^(k-n)),
/// i.e. all residues mod p^k lying in O, filtered to units.
class UnitResidues final : public OmegaSource {
 public:
  UnitResidues(const EichlerContext& ctx, int k);
  std::uint64_t size() const override { return size_; }
  std::optional<Mat2> at(std::uint64_t index) const override;

 private:
  Modulus mod_;
  std::uint64_t pn_;
  std::uint64_t full_;
  std::uint64_t lower_;
  std::uint64_t size_;
};

/// `seed` and the context pick the stream: identical inputs give identical lists.
OmegaList random_units(const EichlerContext& ctx, std::size_t count, std::uint64_t seed);

/// Returns the counterexamples found for one element (empty when it passes).
using OmegaCheck = std::function<std::vector<Counterexample>(const Mat2&)>;

SuiteOutcome sweep_serial(const std::string& name, const OmegaSource& source, const OmegaCheck& check);
SuiteOutcome sweep_parallel(const std::string& name, const OmegaSource& source,
                            const OmegaCheck& check);

/// Number of threads the parallel kernel will use.
int sweep_threads();

}  // namespace metacomm
