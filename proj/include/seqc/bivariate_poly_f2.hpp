#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <utility>

#include "seqc/power_series_f2.hpp"

namespace seqc {

/// Polynomial h(x,y) over F2 stored as the set of monomials (i,j) = x^i y^j
/// with coefficient 1. Characteristic 2: toggling a monomial twice removes it.
class BivariatePolyF2 {
public:
    using Monomial = std::pair<std::uint64_t, std::uint64_t>;  // (i, j)

    void toggle(std::uint64_t i, std::uint64_t j) {
        auto [it, inserted] = monomials_.insert({i, j});
        if (!inserted) monomials_.erase(it);
    }

    bool contains(std::uint64_t i, std::uint64_t j) const {
        return monomials_.count({i, j}) != 0;
    }

    bool is_zero() const { return monomials_.empty(); }
    std::size_t term_count() const { return monomials_.size(); }
    const std::set<Monomial>& monomials() const { return monomials_; }

    /// Max i+j over monomials; the zero polynomial has no degree.
    std::uint64_t total_degree() const;

    /// Terms ordered by descending total degree, then descending x-degree,
    /// e.g. "x^3 y^2 + x y + 1".
    std::string to_string() const;

    friend bool operator==(const BivariatePolyF2& a, const BivariatePolyF2& b) {
        return a.monomials_ == b.monomials_;
    }

private:
    std::set<Monomial> monomials_;
};

/// h(x, g(x)) mod x^N where N = g.truncation().
PowerSeriesF2 eval_bivariate(const BivariatePolyF2& h, const PowerSeriesF2& g);

/// (x+1)^3 y^2 + (x+1)^2 y + x, expanded; annihilates the generating
/// function of the Thue-Morse sequence, so its total degree 5 bounds E(T,N).
BivariatePolyF2 witness_tm();

/// (x+1)^{2^k+1} y^2 + (x+1)^{2^k} y + x^{2^k-1}, expanded; annihilates the
/// generating function of the pattern sequence P_k, total degree 2^k + 3.
BivariatePolyF2 witness_pattern(std::uint32_t k);

}  // namespace seqc
