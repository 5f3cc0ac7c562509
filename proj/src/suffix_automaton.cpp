#include "seqc/suffix_automaton.hpp"

#include <stdexcept>

namespace seqc {

SuffixAutomaton::SuffixAutomaton(std::size_t expected_length) {
    states_.reserve(2 * expected_length + 2);
    new_state(0, -1);  // initial state: the class of the empty factor
}

std::int32_t SuffixAutomaton::new_state(std::int32_t len, std::int32_t first_end_pos) {
    State s;
    s.next[0] = s.next[1] = -1;
    s.link = -1;
    s.len = len;
    s.first_end_pos = first_end_pos;
    s.out_degree = 0;
    states_.push_back(s);
    return static_cast<std::int32_t>(states_.size() - 1);
}

void SuffixAutomaton::add_transition(std::int32_t from, int symbol, std::int32_t to) {
    states_[from].next[symbol] = to;
    if (++states_[from].out_degree == 2 && states_[from].len > max_branching_len_)
        max_branching_len_ = states_[from].len;
}

void SuffixAutomaton::extend(bool symbol) {
    const int c = symbol ? 1 : 0;
    if (length_ > static_cast<std::size_t>(INT32_MAX) - 2)
        throw std::length_error("suffix automaton: input too long");
    const std::int32_t pos = static_cast<std::int32_t>(length_++);

    std::int32_t cur = new_state(states_[last_].len + 1, pos);
    std::int32_t p = last_;
    while (p != -1 && states_[p].next[c] == -1) {
        add_transition(p, c, cur);
        p = states_[p].link;
    }
    if (p == -1) {
        states_[cur].link = 0;
    } else {
        std::int32_t q = states_[p].next[c];
        if (states_[p].len + 1 == states_[q].len) {
            states_[cur].link = q;
        } else {
            std::int32_t clone = new_state(states_[p].len + 1, states_[q].first_end_pos);
            states_[clone].next[0] = states_[q].next[0];
            states_[clone].next[1] = states_[q].next[1];
            states_[clone].link = states_[q].link;
            states_[clone].out_degree = states_[q].out_degree;
            if (states_[clone].out_degree >= 2 && states_[clone].len > max_branching_len_)
                max_branching_len_ = states_[clone].len;
            while (p != -1 && states_[p].next[c] == q) {
                states_[p].next[c] = clone;  // redirect: out-degree unchanged
                p = states_[p].link;
            }
            states_[q].link = clone;
            states_[cur].link = clone;
        }
    }
    last_ = cur;
}

}  // namespace seqc
