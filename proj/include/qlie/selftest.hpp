/*
  This is selftest.hpp, part of qlie.
  Distributed under the MIT license; see the LICENSE file.

  The end-to-end verification suite: twelve numbered checks covering the
  golden tables, the dual-route oracles, and the structural invariants
  of the library.  Each check is self-contained, reports a one-line
  detail string, and enforces its own wall-clock budget where one is
  defined.
*/

#pragma once

#include <string>
#include <vector>

#include "qlie/common.hpp"

namespace qlie {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

/* Runs all twelve checks, optionally spreading them over `jobs`
   threads.  Never throws; a check that raises is reported as failed
   with the exception text in its detail. */
std::vector<CriterionResult> run_acceptance(int jobs = 1);

}  // namespace qlie
