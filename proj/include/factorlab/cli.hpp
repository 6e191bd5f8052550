#ifndef FACTORLAB_CLI_HPP_
#define FACTORLAB_CLI_HPP_

#include <iosfwd>

namespace factorlab {

  // Process exit codes of the command-line tool.
  enum ExitCode : int {
    exit_ok           = 0,
    exit_parse_error  = 2,  // presentation file or command line
    exit_bad_word     = 3,
    exit_inexact      = 4,  // --require-exact and some result was truncated
    exit_corpus_fails = 5
  };

  // Entry point of the `factorlab` tool with its streams injected, so tests
  // can run commands in-process.
  int run_cli(int argc, char const* const* argv, std::ostream& out,
              std::ostream& err);

}  // namespace factorlab

#endif  // FACTORLAB_CLI_HPP_
