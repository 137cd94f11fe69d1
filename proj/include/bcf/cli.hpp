#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace bcf {

enum class Command { Expand, Eval, Render, Validate, Recover, Scan };

struct JobOptions {
  std::optional<std::size_t> terms;
  std::optional<std::size_t> depth;
  std::optional<std::size_t> digits;
  std::optional<std::size_t> guard;
  std::optional<std::size_t> jobs;
  std::optional<std::size_t> n;
  std::optional<std::size_t> preperiod;
  std::optional<std::size_t> preview;
  std::optional<std::string> format;
  bool approx = false;
  bool diagnostics = false;
  friend bool operator==(const JobOptions&, const JobOptions&) = default;
};

/// One CLI invocation. Inputs keep their literal text keyed by flag name
/// (without dashes); they are validated when the job is parsed.
struct JobSpec {
  Command command = Command::Expand;
  std::multimap<std::string, std::string> inputs;
  JobOptions options;
  friend bool operator==(const JobSpec&, const JobSpec&) = default;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitComputation = 3;

/// Parses arguments (without the program name). Throws Error(Usage) or
/// ParseError with the offending token in the message.
JobSpec parse_job(const std::vector<std::string>& args);

/// Canonical argument list; parse_job(to_args(spec)) == spec.
std::vector<std::string> to_args(const JobSpec& spec);
/// to_args joined by single spaces.
std::string to_text(const JobSpec& spec);

/// Runs one invocation and returns the exit code: 0 on success, 2 on input
/// errors, 3 on computation errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bcf
