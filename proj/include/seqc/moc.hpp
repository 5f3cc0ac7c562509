#pragma once

#include <cstdint>
#include <optional>

#include "seqc/bit_sequence.hpp"
#include "seqc/complexity_profile.hpp"

namespace seqc {

/// Two equal length-t windows whose successor bits differ, certifying that
/// the maximum order complexity is at least t + 1.
struct MocWitness {
    std::size_t pos_a;   // earlier window start
    std::size_t pos_b;   // later window start, pos_a < pos_b
    std::size_t length;  // t; the windows s[pos..pos+t-1] agree, s[pos+t] differ

    friend bool operator==(const MocWitness&, const MocWitness&) = default;
};

/// N-th maximum order complexity: the smallest M such that some feedback
/// function of M previous terms reproduces the first N terms. value is 0
/// exactly in the constant-prefix degenerate case, which has no witness;
/// otherwise value = witness->length + 1.
struct MocResult {
    std::uint64_t value = 0;
    std::optional<MocWitness> witness;

    friend bool operator==(const MocResult&, const MocResult&) = default;
};

/// Literal quadratic-scan oracle: the longest window that recurs with
/// different successors, found by pairwise suffix comparison.
MocResult moc_bruteforce(const BitSequence& seq, std::size_t n);

/// Suffix-automaton path: M = 1 + max factor length over automaton states
/// with two distinct outgoing transitions. Same contract and the same
/// deterministic witness tie-break (largest t, then smallest pos_a, then
/// smallest pos_b) as moc_bruteforce.
MocResult moc_automaton(const BitSequence& seq, std::size_t n);

/// M(S,N) for every N = 1..nmax, computed in one online automaton pass.
ComplexityProfile moc_profile(const BitSequence& seq, std::size_t nmax);

}  // namespace seqc
