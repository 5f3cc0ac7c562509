#pragma once

#include <cstddef>
#include <string>

#include "seqc/bit_sequence.hpp"

namespace seqc {

/// Formal power series over F2 truncated mod x^N. coeff(i) is the
/// coefficient of x^i; truncation() is N. All arithmetic requires matching
/// truncations and stays mod x^N.
class PowerSeriesF2 {
public:
    PowerSeriesF2() = default;
    explicit PowerSeriesF2(std::size_t truncation) : coeffs_(truncation) {}

    static PowerSeriesF2 one(std::size_t truncation);

    std::size_t truncation() const { return coeffs_.size(); }
    bool coeff(std::size_t i) const { return coeffs_.bit(i); }
    void set_coeff(std::size_t i, bool v) { coeffs_.set_bit(i, v); }
    const BitSequence& coeffs() const { return coeffs_; }

    bool is_zero() const { return coeffs_.all_zero(); }

    void add(const PowerSeriesF2& other);
    PowerSeriesF2 mul(const PowerSeriesF2& other) const;
    /// Squaring over F2 just spreads exponents: (sum a_i x^i)^2 = sum a_i x^{2i}.
    PowerSeriesF2 square() const;
    /// this * x^s mod x^N.
    PowerSeriesF2 shifted(std::size_t s) const;

    /// "x + x^2 + x^4" style; "0" for the zero series.
    std::string to_string() const;

    friend bool operator==(const PowerSeriesF2& a, const PowerSeriesF2& b) {
        return a.coeffs_ == b.coeffs_;
    }

private:
    BitSequence coeffs_;
};

/// Generating function of the first n terms: G(x) = sum_{i<n} s_i x^i mod x^n.
PowerSeriesF2 series_from(const BitSequence& seq, std::size_t n);

}  // namespace seqc
