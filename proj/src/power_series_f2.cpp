#include "seqc/power_series_f2.hpp"

#include <bit>
#include <stdexcept>

namespace seqc {

namespace {

void check_match(const PowerSeriesF2& a, const PowerSeriesF2& b) {
    if (a.truncation() != b.truncation())
        throw std::invalid_argument("power series truncations do not match");
}

}  // namespace

PowerSeriesF2 PowerSeriesF2::one(std::size_t truncation) {
    if (truncation == 0)
        throw std::invalid_argument("power series truncation must be >= 1");
    PowerSeriesF2 s(truncation);
    s.set_coeff(0, true);
    return s;
}

void PowerSeriesF2::add(const PowerSeriesF2& other) {
    check_match(*this, other);
    coeffs_.xor_with(other.coeffs_);
}

PowerSeriesF2 PowerSeriesF2::mul(const PowerSeriesF2& other) const {
    check_match(*this, other);
    PowerSeriesF2 out(truncation());
    // Shift-and-xor on whole words, one pass per set bit of *this.
    const auto& words = coeffs_.words();
    for (std::size_t w = 0; w < words.size(); ++w) {
        BitSequence::Word rest = words[w];
        while (rest != 0) {
            std::size_t p = w * BitSequence::kWordBits +
                            static_cast<std::size_t>(std::countr_zero(rest));
            out.coeffs_.xor_shifted(other.coeffs_, p);
            rest &= rest - 1;
        }
    }
    return out;
}

PowerSeriesF2 PowerSeriesF2::square() const {
    PowerSeriesF2 out(truncation());
    for (std::size_t i = 0; 2 * i < truncation(); ++i)
        if (coeff(i)) out.set_coeff(2 * i, true);
    return out;
}

PowerSeriesF2 PowerSeriesF2::shifted(std::size_t s) const {
    PowerSeriesF2 out(truncation());
    if (s < truncation()) out.coeffs_.xor_shifted(coeffs_, s);
    return out;
}

std::string PowerSeriesF2::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < truncation(); ++i) {
        if (!coeff(i)) continue;
        if (!out.empty()) out += " + ";
        if (i == 0)
            out += "1";
        else if (i == 1)
            out += "x";
        else
            out += "x^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

PowerSeriesF2 series_from(const BitSequence& seq, std::size_t n) {
    if (n == 0) throw std::invalid_argument("series_from: n must be >= 1");
    if (n > seq.size())
        throw std::invalid_argument("prefix length exceeds sequence length");
    PowerSeriesF2 out(n);
    for (std::size_t i = 0; i < n; ++i) out.set_coeff(i, seq.bit(i));
    return out;
}

}  // namespace seqc
