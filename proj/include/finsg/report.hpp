#pragma once

#include <string>
#include <vector>

#include "finsg/io.hpp"
#include "finsg/semigroup.hpp"

namespace finsg {

  struct ReportOptions {
    std::string              input = "-";
    //! Pseudovariety names to test; "all" expands to the fixed registry.
    std::vector<std::string> pseudovarieties;
    unsigned                 jobs = 1;
  };

  //! Structural summary of S. Objects have sorted keys, so dump() output is
  //! deterministic.
  io::json analyze(FiniteSemigroup const& S, ReportOptions const& options);

  //! One "path=value" line per leaf, paths joined with '.'.
  std::string flatten_text(io::json const& j);

}  // namespace finsg
