#pragma once

// The `sgq` command-line surface: one command per invocation, JSON in, JSON out.

#include <optional>
#include <string>

#include "json.hpp"
#include "sgq/flag_quotient.hpp"
#include "sgq/proptest.hpp"

namespace sgq::cli {

struct Command {
  std::string name;  // ber, minv, factor, coset-eq, orbit, chart-up, chart-down, smooth, proptest
  std::string in;
  std::string in2;
  std::string out;  // empty: standard output
  std::optional<BlockProfile> profile;
  ProptestConfig proptest;
};

struct Outcome {
  int status = 0;          // 0 success, 1 domain error, 2 malformed input
  nlohmann::json document;  // null when status is 2
  std::string diagnostic;   // for the error stream
};

const std::vector<std::string>& command_names();

/// Reads the inputs and computes the result document. Never throws for bad input.
Outcome run(const Command& cmd);

/// Entry point of the executable.
int main(int argc, char** argv);

}  // namespace sgq::cli
