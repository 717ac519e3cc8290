// Command-line front end: one subcommand per library module plus `repro`
// targets that replay the reference values and flag known inconsistencies.
#ifndef AGC_CLI_HPP
#define AGC_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace agc::cli {

// exit codes: 0 ok, 1 reference-value mismatch (repro), 2 domain error,
// 64 usage/parse error
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace agc::cli

#endif
