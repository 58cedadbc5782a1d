#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "eraskit/probability.hpp"
#include "eraskit/text.hpp"

namespace eraskit {

enum class OutputFormat { Json, Text };

/// Effective run configuration: built-in defaults, overlaid by an optional
/// key=value config file, overlaid by command-line flags.
struct RunConfig {
  SemanticsMode mode = SemanticsMode::Dynamic;
  ProbBackend backend = ProbBackend::Counting;
  CollectionWeighting weighting = CollectionWeighting::ByTokens;
  TokenizerConfig tokenizer;
  OutputFormat output = OutputFormat::Json;
};

/// Runs the command line (without the program name). Reports go to `out`,
/// diagnostics to `err`.
///
/// Exit codes: 0 success, 1 I/O failure, 2 parse failure (expression or
/// command line), 3 undefined quantity.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eraskit
