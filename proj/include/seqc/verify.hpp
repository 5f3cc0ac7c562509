#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "seqc/report.hpp"

namespace seqc {

/// Bounds for claim checks. nmax is the prefix-length ceiling for range
/// claims and doubles as the truncation for witness evaluation; expansion
/// and squares probes are additionally capped at 4096 internally.
struct VerifyOptions {
    std::size_t nmax = 5000;
    std::uint32_t kmax = 4;  // largest pattern k exercised by range claims
    unsigned workers = 0;    // 0: $SEQC_WORKERS, else hardware concurrency
};

/// Every claim id accepted by run_claim, in canonical reporting order.
const std::vector<std::string>& all_claims();

/// Check one named claim. Unknown ids throw std::invalid_argument; any
/// error during an accepted claim is converted into a failing verdict.
/// squares-probe is exploratory and always passes, recording what it saw.
ClaimVerdict run_claim(const std::string& claim, const VerifyOptions& opts);

/// Check several claims on a small worker pool (claims are independent and
/// pure). Verdict order matches claim order.
std::vector<ClaimVerdict> run_claims(const std::vector<std::string>& claims,
                                     const VerifyOptions& opts);

}  // namespace seqc
