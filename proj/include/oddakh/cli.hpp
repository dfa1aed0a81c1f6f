#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace oddakh {

/// Exit codes: 0 success, 1 invariant violation, 2 input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace oddakh

#include "oddakh/algebra.hpp"
#include "oddakh/report.hpp"

namespace oddakh {

struct SuiteResult {
  std::string name;
  CheckReport report;
};

/// Every identity check on one diagram, in a fixed order.
std::vector<SuiteResult> check_suite(const AnnularDiagram& d, const BuildOptions& options = {});

}  // namespace oddakh
