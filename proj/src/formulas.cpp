#include "seqc/formulas.hpp"

#include <stdexcept>

#include "seqc/bit_sequence.hpp"
#include "seqc/seqgen.hpp"

namespace seqc {

namespace {

// Least e >= 0 with base*2^e >= n (n >= 1, base >= 1).
std::uint32_t ceil_log2_ratio(std::uint64_t base, std::uint64_t n) {
    std::uint32_t e = 0;
    std::uint64_t v = base;
    while (v < n) {
        if (v > (std::uint64_t{1} << 62))
            throw std::overflow_error("prefix length too large for formula");
        v <<= 1;
        ++e;
    }
    return e;
}

}  // namespace

MocFormulaResult tm_moc_formula(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("formula needs n >= 1");
    MocFormulaResult r;
    if (n == 1) return r;  // M = 0
    if (n <= 3) {
        r.value = 1;
        return r;
    }
    r.ell = ceil_log2_ratio(5, n);
    r.value = (std::uint64_t{1} << r.ell) + 1;
    r.in_theorem_range = true;
    return r;
}

MocFormulaResult pattern_moc_formula(std::uint32_t k, std::uint64_t n) {
    if (k < 2)
        throw std::invalid_argument("pattern formula needs k >= 2 (k = 1 is the Thue-Morse case)");
    if (k >= 60) throw std::invalid_argument("pattern formula: k too large");
    if (n == 0) throw std::invalid_argument("formula needs n >= 1");

    const std::uint64_t pk = std::uint64_t{1} << k;  // 2^k
    const std::uint64_t threshold = 8 * pk - 7;      // 2^{k+3} - 7

    MocFormulaResult r;
    if (n >= threshold) {
        std::uint32_t m = ceil_log2_ratio(pk - 1, n);  // m >= 1 here since n > 2^k - 1
        r.ell = m - 1;
        r.value = (pk / 2 - 1) * (std::uint64_t{1} << r.ell) + 1;
        r.in_theorem_range = true;
        return r;
    }
    if (k == 2) {  // known small-N values for the Rudin-Shapiro sequence
        r.value = n <= 3 ? 0 : n <= 9 ? 3 : 6;
        return r;
    }
    throw std::domain_error("pattern formula: n below theorem range for k >= 3");
}

bool tm_shift_check(std::uint32_t ell) {
    if (ell < 1) throw std::invalid_argument("shift check needs ell >= 1");
    if (ell > 40) throw std::invalid_argument("shift check: ell too large");
    const std::uint64_t half = std::uint64_t{1} << (ell - 1);  // 2^{ell-1}
    const std::uint64_t need = 5 * half + 1;
    BitSequence t = generate(SequenceSpec::thue_morse(), need);
    for (std::uint64_t i = 0; i < 2 * half; ++i)
        if (t.bit(i) != t.bit(i + 3 * half)) return false;
    return t.bit(2 * half) != t.bit(5 * half);
}

bool pattern_shift_check(std::uint32_t k, std::uint32_t ell) {
    if (k < 2) throw std::invalid_argument("shift check needs k >= 2");
    if (k + ell > 40) throw std::invalid_argument("shift check: k + ell too large");
    const std::uint64_t pe = std::uint64_t{1} << ell;
    const std::uint64_t half = std::uint64_t{1} << (k - 1);  // 2^{k-1}
    const std::uint64_t need = (2 * half - 1) * pe + 1;
    BitSequence p = generate(SequenceSpec::pattern(k), need);
    for (std::uint64_t i = 0; i < (half - 1) * pe; ++i)
        if (p.bit(i) != p.bit(i + half * pe)) return false;
    return p.bit((half - 1) * pe) != p.bit((2 * half - 1) * pe);
}

}  // namespace seqc
