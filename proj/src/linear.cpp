#include "seqc/linear.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace seqc {

namespace {

void check_args(const BitSequence& seq, std::size_t n) {
    if (n == 0) throw std::invalid_argument("linear complexity needs n >= 1");
    if (n > seq.size())
        throw std::invalid_argument("prefix length exceeds sequence length");
}

// Berlekamp-Massey iteration state over F2. c is the connection polynomial
// C(x) = 1 + c_1 x + ... + c_L x^L with s_j = sum_{i=1..L} c_i s_{j-i}; b is
// the polynomial from just before the last length change. deg C <= L <= pos+1
// throughout, so capacity nmax+1 never truncates in xor_shifted.
struct BmState {
    BitSequence c, b;
    std::size_t l = 0;
    std::size_t gap = 1;  // steps since the last length change

    explicit BmState(std::size_t nmax) : c(nmax + 1), b(nmax + 1) {
        c.set_bit(0, true);
        b.set_bit(0, true);
    }

    void step(const BitSequence& seq, std::size_t pos) {
        bool d = seq.bit(pos);
        for (std::size_t i = 1; i <= l; ++i)
            d ^= c.bit(i) && seq.bit(pos - i);
        if (!d) {
            ++gap;
        } else if (2 * l <= pos) {
            BitSequence keep = c;
            c.xor_shifted(b, gap);
            b = std::move(keep);
            l = pos + 1 - l;
            gap = 1;
        } else {
            c.xor_shifted(b, gap);
            ++gap;
        }
    }

    LfsrFit fit() const {
        LfsrFit f;
        f.length = l;
        f.taps = BitSequence(l);
        for (std::size_t i = 1; i <= l; ++i) f.taps.set_bit(l - i, c.bit(i));
        return f;
    }
};

}  // namespace

bool LfsrFit::fits(const BitSequence& seq, std::size_t n) const {
    if (n > seq.size())
        throw std::invalid_argument("prefix length exceeds sequence length");
    std::size_t len = static_cast<std::size_t>(length);
    if (len >= n) return true;  // no full window: vacuously consistent
    for (std::size_t i = 0; i + len < n; ++i) {
        bool pred = false;
        for (std::size_t l = 0; l < len; ++l)
            pred ^= taps.bit(l) && seq.bit(i + l);
        if (pred != seq.bit(i + len)) return false;
    }
    return true;
}

LfsrFit berlekamp_massey(const BitSequence& seq, std::size_t n) {
    check_args(seq, n);
    BmState st(n);
    for (std::size_t pos = 0; pos < n; ++pos) st.step(seq, pos);
    return st.fit();
}

ComplexityProfile lc_profile(const BitSequence& seq, std::size_t nmax) {
    check_args(seq, nmax);
    BmState st(nmax);
    std::vector<std::uint64_t> values;
    values.reserve(nmax);
    for (std::size_t pos = 0; pos < nmax; ++pos) {
        st.step(seq, pos);
        values.push_back(st.l);
    }
    return ComplexityProfile(std::move(values));
}

}  // namespace seqc
