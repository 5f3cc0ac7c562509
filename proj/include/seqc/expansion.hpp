#pragma once

#include <cstdint>
#include <optional>

#include "seqc/bit_sequence.hpp"
#include "seqc/bivariate_poly_f2.hpp"
#include "seqc/seqgen.hpp"

namespace seqc {

/// Outcome of the minimal-degree annihilator search.
struct ExpansionResult {
    /// E(S,N) when the search succeeded; empty when every total degree up
    /// to dmax gives an independent monomial family ("exceeds dmax").
    std::optional<std::uint64_t> degree;
    /// A minimal-degree h with h(x, G(x)) = 0 mod x^N, nonzero whenever
    /// degree holds a value >= 1. The zero polynomial stands in both for
    /// the all-zero convention E = 0 and for the sentinel.
    BivariatePolyF2 annihilator;
};

/// Least total degree d <= dmax such that {x^i G^j mod x^N : i+j <= d} is
/// linearly dependent over F2, where G is the generating function of the
/// first n terms. All-zero prefix returns 0 by convention. Gaussian
/// elimination over packed words, extending the reduced column set degree
/// by degree; the first dependency also yields the annihilator.
ExpansionResult expansion_complexity(const BitSequence& seq, std::size_t n,
                                     std::uint64_t dmax);

/// Degree-cap policy for callers with no better information: 2^k + 4 for
/// the pattern family (Thue-Morse is pattern k=1), since the known
/// annihilators have total degree 2^k + 3; 32 for everything else.
std::uint64_t default_dmax(const SequenceSpec& spec);

}  // namespace seqc
