#include "seqc/moc.hpp"

#include <algorithm>
#include <stdexcept>

#include "seqc/suffix_automaton.hpp"

namespace seqc {

namespace {

void check_args(const BitSequence& seq, std::size_t n) {
    if (n == 0) throw std::invalid_argument("maximum order complexity undefined for n = 0");
    if (n > seq.size())
        throw std::invalid_argument("prefix length exceeds sequence length");
}

// Degenerate convention: if s_0..s_{n-2} all equal some a, then M = 0 when
// s_{n-1} == a and M = n-1 otherwise. Returns the result when it applies.
std::optional<MocResult> degenerate_case(const BitSequence& seq, std::size_t n) {
    bool a = seq.bit(0);
    for (std::size_t i = 1; i + 1 < n; ++i)
        if (seq.bit(i) != a) return std::nullopt;
    MocResult r;
    if (n == 1 || seq.bit(n - 1) == a) {
        r.value = 0;
        return r;
    }
    r.value = n - 1;
    // The two length-(n-2) windows of a^{n-1} start at 0 and 1; their
    // successors are s_{n-2} = a and s_{n-1} != a.
    r.witness = MocWitness{0, 1, n - 2};
    return r;
}

}  // namespace

MocResult moc_bruteforce(const BitSequence& seq, std::size_t n) {
    check_args(seq, n);
    if (auto deg = degenerate_case(seq, n)) return *deg;

    // Scan pairs in lexicographic order and keep the first pair attaining
    // the maximal conflict length; that is the (t max, pos_a min, pos_b min)
    // tie-break. A pair (i, j) conflicts at exactly t = lcp(i, j) when the
    // mismatch falls inside the prefix.
    std::int64_t best = -1;
    MocWitness w{0, 0, 0};
    for (std::size_t i = 0; i + 1 < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            std::size_t l = common_run_length(seq, i, j, n);
            if (j + l < n && static_cast<std::int64_t>(l) > best) {
                best = static_cast<std::int64_t>(l);
                w = MocWitness{i, j, l};
            }
        }
    }
    // Non-degenerate prefixes always conflict at t = 0 (two positions carry
    // different bits), so best >= 0 here.
    MocResult r;
    r.value = static_cast<std::uint64_t>(best + 1);
    r.witness = w;
    return r;
}

MocResult moc_automaton(const BitSequence& seq, std::size_t n) {
    check_args(seq, n);
    if (auto deg = degenerate_case(seq, n)) return *deg;

    SuffixAutomaton sa(n);
    for (std::size_t i = 0; i < n; ++i) sa.extend(seq.bit(i));

    const std::int64_t t = sa.max_branching_len();
    // For a state with both transitions, first_end_pos of the target of
    // transition c is the end index of the earliest occurrence of
    // (longest factor)+c, so the factor occurrence itself starts len
    // positions earlier.
    MocWitness best{0, 0, 0};
    bool have = false;
    for (std::size_t s = 0; s < sa.state_count(); ++s) {
        const auto& st = sa.state(s);
        if (st.out_degree < 2 || st.len != t) continue;
        std::size_t start0 =
            static_cast<std::size_t>(sa.state(st.next[0]).first_end_pos) - st.len;
        std::size_t start1 =
            static_cast<std::size_t>(sa.state(st.next[1]).first_end_pos) - st.len;
        MocWitness w{std::min(start0, start1), std::max(start0, start1),
                     static_cast<std::size_t>(t)};
        if (!have || w.pos_a < best.pos_a || (w.pos_a == best.pos_a && w.pos_b < best.pos_b)) {
            best = w;
            have = true;
        }
    }

    MocResult r;
    r.value = static_cast<std::uint64_t>(t + 1);
    r.witness = best;
    return r;
}

ComplexityProfile moc_profile(const BitSequence& seq, std::size_t nmax) {
    check_args(seq, nmax);
    SuffixAutomaton sa(nmax);
    std::vector<std::uint64_t> values;
    values.reserve(nmax);
    for (std::size_t i = 0; i < nmax; ++i) {
        sa.extend(seq.bit(i));
        // max_branching_len is -1 while the prefix is constant, which is
        // exactly the M = 0 convention; for every other prefix the
        // degenerate rule and the branching rule coincide.
        values.push_back(static_cast<std::uint64_t>(sa.max_branching_len() + 1));
    }
    return ComplexityProfile(std::move(values));
}

}  // namespace seqc
