#pragma once

#include <cstdint>

#include "seqc/bit_sequence.hpp"
#include "seqc/complexity_profile.hpp"

namespace seqc {

/// Shortest linear recurrence fitting a prefix:
///   s_{i+L} = sum_{l=0}^{L-1} taps_l * s_{i+l}   for 0 <= i <= N-L-1.
/// length = 0 (empty taps) for the all-zero prefix. When N < 2L the tap
/// vector is not unique; this is the Berlekamp-Massey one.
struct LfsrFit {
    std::uint64_t length = 0;
    BitSequence taps;  // taps.bit(l) multiplies s_{i+l}

    /// Replay the recurrence over the first n terms of seq.
    bool fits(const BitSequence& seq, std::size_t n) const;
};

/// Berlekamp-Massey over F2 on the first n terms.
LfsrFit berlekamp_massey(const BitSequence& seq, std::size_t n);

/// L(S,N) for N = 1..nmax in one incremental pass.
ComplexityProfile lc_profile(const BitSequence& seq, std::size_t nmax);

}  // namespace seqc
