#pragma once

#include <optional>
#include <ostream>
#include <string>

#include "wald/rat.hpp"
#include "wald/roots.hpp"

namespace wald::cli {

enum class Command { kAhp, kLambda, kBound, kStarVerify, kMonomial, kSamples, kExamples };
enum class Format { kText, kJson, kCsv };

inline constexpr int kExitOk = 0;
inline constexpr int kExitComputation = 1;
inline constexpr int kExitInput = 2;

struct RunSpec {
  Command command = Command::kExamples;
  /// Path to a JSON file, "-" for stdin, or inline JSON text.
  std::string input;
  Rat eps = default_eps();
  Format format = Format::kText;
  unsigned m_max = 10;
  /// Overrides the configuration's derivative order.
  std::optional<unsigned> derivative_order;
  unsigned n_max = 6;
  unsigned s_max = 8;
  unsigned t_max = 20;
};

/// Reads the JSON text named by `input`. Text whose first non-blank character
/// is '{' or '[' is taken literally.
std::string load_input(const std::string& input);

/// Runs one command; returns 0 on success, 1 on a computation error, 2 on an
/// input error.
int run(const RunSpec& spec, std::ostream& out, std::ostream& err);

/// Parses argv (honouring WALD_EPS) and runs.
int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace wald::cli
