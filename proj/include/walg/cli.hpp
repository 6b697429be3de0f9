#pragma once

// Command-line front end: argument parsing, dispatch to the library and
// rendering of results as text or JSON.
//
// Exit codes: 0 success, 1 usage error, 2 violated precondition.

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "walg/characters.hpp"
#include "walg/root_system.hpp"

namespace walg::cli {

enum class Format { Text, Json };

struct CommandSpec {
  std::string command;
  std::optional<LieType> algebra;
  std::optional<Rational> kappa;
  std::optional<Vector> weight;
  std::vector<int> word;
  std::vector<int> x_word;
  int order = 10;
  Reduction reduction = Reduction::Plus;
  Format format = Format::Text;
  std::optional<long long> delta_bound;
};

/// Malformed command line; the message names the offending flag.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// --help was given; text() holds the help screen.
class HelpRequested : public std::exception {
 public:
  explicit HelpRequested(std::string text) : text_(std::move(text)) {}
  const std::string& text() const { return text_; }
  const char* what() const noexcept override { return "help requested"; }

 private:
  std::string text_;
};

/// The recognized commands, in help order.
const std::vector<std::string>& commands();

/// Parses argv without the program name. Throws UsageError.
CommandSpec parse_spec(const std::vector<std::string>& args);

/// Canonical argument list for a spec; parse_spec(to_args(s)) reproduces s.
std::vector<std::string> to_args(const CommandSpec& spec);

struct Record {
  std::string command;
  nlohmann::ordered_json data;  // every number stored as an exact string
};

/// Runs the library operation. Throws PreconditionError / std::domain_error
/// on violated hypotheses and UsageError on missing flags.
Record execute(const CommandSpec& spec);

std::string render(const Record& record, Format format);

/// Full pipeline; returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace walg::cli
