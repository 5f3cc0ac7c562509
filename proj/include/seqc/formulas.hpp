#pragma once

#include <cstdint>

namespace seqc {

/// Closed-form maximum order complexity value. ell is the exponent index
/// of the formula; it is meaningful only when in_theorem_range is true
/// (below the range the value comes from the small-N table instead).
struct MocFormulaResult {
    std::uint64_t value = 0;
    std::uint32_t ell = 0;
    bool in_theorem_range = false;
};

/// M of the Thue-Morse prefix of length n in closed form: 0, 1, 1 for
/// n = 1, 2, 3 and 2^ell + 1 for n >= 4, where ell is the least integer
/// >= 0 with 5*2^ell >= n (the integer form of ceil(log2(n/5)); no
/// floating point anywhere, so exact powers land on the right side).
MocFormulaResult tm_moc_formula(std::uint64_t n);

/// M of the pattern-k prefix of length n in closed form, k >= 2:
/// (2^{k-1}-1)*2^ell + 1 for n >= 2^{k+3}-7, where ell+1 is the least
/// integer m >= 0 with (2^k-1)*2^m >= n. Below that threshold only k = 2
/// has known values (0 / 3 / 6 on 1..3 / 4..9 / 10..24); other k throw.
/// k = 1 is rejected: use tm_moc_formula.
MocFormulaResult pattern_moc_formula(std::uint32_t k, std::uint64_t n);

/// Shift identity of the Thue-Morse sequence, ell >= 1: t_i = t_{i+3*2^{ell-1}}
/// for 0 <= i <= 2^ell - 1, while t_{2^ell} != t_{5*2^{ell-1}}. Evaluated on
/// generated terms.
bool tm_shift_check(std::uint32_t ell);

/// Shift identity of the pattern-k sequence, k >= 2, ell >= 0:
/// p_i = p_{i+2^{ell+k-1}} for 0 <= i <= (2^{k-1}-1)*2^ell - 1, while
/// p_{(2^{k-1}-1)*2^ell} != p_{(2^k-1)*2^ell}. Evaluated on generated terms.
bool pattern_shift_check(std::uint32_t k, std::uint32_t ell);

}  // namespace seqc
