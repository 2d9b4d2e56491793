#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cyclic/cycle.hpp"
#include "cyclic/orbit.hpp"

namespace cyclic::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kDomain = 2,
  kVerifyFailed = 3,
  kBudget = 4,
  kInternal = 70,
};

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

/// Circle diagram of `orbit`: unit circle, orbit points labeled by their
/// numerators over k^q - 1, fixed points of m_k in blue, and an arrow from
/// each x_i to x_sigma(i). Output depends only on the arguments.
std::string render_diagram(const Orbit& orbit, const Cycle& sigma);

}  // namespace cyclic::cli
