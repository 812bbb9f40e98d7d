#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace metacomm::cli {

enum class Format { Json, Tsv, Dot };

struct RunConfig {
  std::uint64_t p = 3;
  int n = 1;
  std::optional<int> precision;
  std::optional<std::array<std::int64_t, 4>> omega;
  std::uint64_t seed = 42;
  std::size_t trials = 1000;
  Format format = Format::Json;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one subcommand; args excludes the program name.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace metacomm::cli
