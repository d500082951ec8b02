#ifndef FGT_VERIFY_PAPER_HPP
#define FGT_VERIFY_PAPER_HPP

#include "fgt/report.hpp"

namespace fgt {

struct VerifyPaperOptions {
  /// 1 runs the classification sweep over S4 and direct(S4, S3); 2 adds the
  /// extended sweep over S4^2 with conjugacy deduplication.
  int star_power = 1;
  int threads = 1;
};

/// The consolidated verification suite: reproduces the reference case
/// analysis for symmetric and alternating groups as a single deterministic
/// report. Bounds are pinned here so the pass/fail meaning never drifts.
Report verify_paper(const VerifyPaperOptions& opts = {});

}  // namespace fgt

#endif
