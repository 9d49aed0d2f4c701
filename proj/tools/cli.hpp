#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace lcurve::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitVerification = 2;

struct CommandConfig {
  std::string subcommand;
  int m = 0;
  bool spin = false;
  bool force = false;
  bool timing = false;
  std::string input;
  std::string json_path;
  std::string csv_path;
  std::uint64_t seed = 0;
  std::optional<double> tol;
  std::optional<int> samples;
  std::optional<double> h;
  std::string d1;
  std::string d2;
};

int run(const CommandConfig& config, std::ostream& out, std::ostream& err);

// Parses argv with CLI11 and runs the selected subcommand.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lcurve::cli
