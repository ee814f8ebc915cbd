#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace germlab::cli {

/// Malformed problem file or command line; line and column are 1-based,
/// 0 when unknown.
struct InputError : std::runtime_error {
  std::size_t line = 0, column = 0;
  InputError(const std::string& msg, std::size_t l = 0, std::size_t c = 0);
};

enum class Mode { germ, germ_function, family };
std::string to_string(Mode m);

struct Problem {
  std::string source = "<input>";
  std::vector<std::string> variables;
  std::vector<std::vector<std::string>> matrix;  // empty: the ambient space
  std::size_t s = 1;
  std::optional<std::string> function;
  std::string parameter = "t";
  std::vector<std::vector<std::string>> family_matrix;
  std::optional<std::string> family_function;
  Mode mode = Mode::germ;

  // [options]
  std::optional<std::uint64_t> seed;
  std::optional<std::string> field;
  std::vector<std::string> t_samples;
  std::optional<std::uint32_t> max_degree;
  std::optional<std::size_t> max_spairs;
};

Problem parse_problem_text(const std::string& text, const std::string& source = "<input>");
Problem parse_problem(const std::string& path);

enum class Command { validate, invariants, family_check, jacobian_extension };
Command parse_command(const std::string& name);
std::string to_string(Command c);

/// Command-line overrides; unset members fall back to the problem file.
struct Flags {
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> env_seed;  // GERMLAB_SEED
  std::optional<std::string> field;
  std::vector<std::string> t_samples;
  std::optional<std::uint32_t> max_degree;
  std::optional<std::size_t> max_spairs;
  std::vector<std::size_t> boardman;
  bool timings = false;
};

enum ExitCode { kOk = 0, kInputError = 1, kGenericityFailure = 2, kBudgetExceeded = 3 };

struct Outcome {
  int exit_code = kOk;
  nlohmann::json report;
};

/// Runs one command. Never throws for mathematical failures: those map to
/// exit codes and a "status" entry in the report.
Outcome run(Command c, const Problem& p, const Flags& f);

/// Sorted keys, two-space indent, trailing newline.
std::string canonical(const nlohmann::json& j);

inline constexpr const char* kSchema = "germlab-report/1";

}  // namespace germlab::cli
