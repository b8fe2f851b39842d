#pragma once

#include <vector>

#include "mig/context.hpp"
#include "mig/report.hpp"

namespace mig {

// the fixed verification checklist over the corpus, in a stable order.
// failures are reported, never thrown; a check that needs a group missing
// from the corpus comes back with status "skip" and the group named in the
// detail line
std::vector<CheckOutcome> run_claim_checks(Context& ctx);

}  // namespace mig
