#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace seqc {

/// Online suffix automaton (DAWG) over the binary alphabet.
///
/// Besides the usual transition/link/len tables it tracks, incrementally:
///   - out-degree of every state. Transitions are only ever added or
///     redirected during construction, so out-degrees never decrease and
///     the set of branching states (out-degree >= 2) only grows.
///   - max_branching_len(): the largest len over branching states, i.e.
///     the length of the longest factor of the current string that occurs
///     at least twice with different successor symbols. -1 when no state
///     branches (constant strings).
///   - first_end_pos: for each state, the end index of the earliest
///     occurrence of the factors in its class. Clones inherit it from the
///     state they were cloned from.
class SuffixAutomaton {
public:
    struct State {
        std::int32_t next[2];
        std::int32_t link;
        std::int32_t len;
        std::int32_t first_end_pos;
        std::uint8_t out_degree;
    };

    explicit SuffixAutomaton(std::size_t expected_length = 0);

    void extend(bool symbol);

    std::size_t length() const { return length_; }
    std::int64_t max_branching_len() const { return max_branching_len_; }

    std::size_t state_count() const { return states_.size(); }
    const State& state(std::size_t i) const { return states_[i]; }

private:
    std::int32_t new_state(std::int32_t len, std::int32_t first_end_pos);
    void add_transition(std::int32_t from, int symbol, std::int32_t to);

    std::vector<State> states_;
    std::int32_t last_ = 0;
    std::size_t length_ = 0;
    std::int64_t max_branching_len_ = -1;
};

}  // namespace seqc
