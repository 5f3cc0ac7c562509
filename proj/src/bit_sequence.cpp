#include "seqc/bit_sequence.hpp"

#include <algorithm>
#include <stdexcept>

namespace seqc {

BitSequence BitSequence::from_ascii01(std::string_view s) {
    BitSequence out;
    out.reserve(s.size());
    for (char c : s) {
        if (c == '0')
            out.push_back(false);
        else if (c == '1')
            out.push_back(true);
        else
            throw std::invalid_argument("from_ascii01: character is not 0 or 1");
    }
    return out;
}

bool BitSequence::all_zero() const {
    for (Word w : words_)
        if (w != 0) return false;
    return true;
}

bool BitSequence::is_constant() const {
    if (size_ <= 1) return true;
    if (!bit(0)) return all_zero();
    std::size_t full = size_ / kWordBits;
    for (std::size_t w = 0; w < full; ++w)
        if (words_[w] != ~Word{0}) return false;
    std::size_t rem = size_ % kWordBits;
    if (rem != 0 && words_[full] != ((Word{1} << rem) - 1)) return false;
    return true;
}

std::size_t BitSequence::popcount() const {
    std::size_t total = 0;
    for (Word w : words_) total += std::popcount(w);
    return total;
}

std::size_t BitSequence::lowest_set_bit() const {
    for (std::size_t w = 0; w < words_.size(); ++w)
        if (words_[w] != 0)
            return w * kWordBits + std::countr_zero(words_[w]);
    return size_;
}

void BitSequence::clear_tail() {
    std::size_t rem = size_ % kWordBits;
    if (rem != 0 && !words_.empty()) words_.back() &= (Word{1} << rem) - 1;
}

void BitSequence::xor_with(const BitSequence& other) {
    std::size_t common = std::min(words_.size(), other.words_.size());
    for (std::size_t w = 0; w < common; ++w) words_[w] ^= other.words_[w];
    clear_tail();
}

void BitSequence::xor_shifted(const BitSequence& other, std::size_t shift) {
    if (shift >= size_) return;
    std::size_t woff = shift / kWordBits, sh = shift % kWordBits;
    std::size_t nw = words_.size();
    if (sh == 0) {
        for (std::size_t w = 0; w + woff < nw && w < other.words_.size(); ++w)
            words_[w + woff] ^= other.words_[w];
    } else {
        for (std::size_t w = 0; w + woff < nw && w < other.words_.size(); ++w) {
            words_[w + woff] ^= other.words_[w] << sh;
            if (w + woff + 1 < nw)
                words_[w + woff + 1] ^= other.words_[w] >> (kWordBits - sh);
        }
    }
    clear_tail();
}

BitSequence BitSequence::prefix(std::size_t n) const {
    if (n > size_) throw std::invalid_argument("prefix: length exceeds sequence");
    BitSequence out(n);
    std::size_t nw = out.words_.size();
    std::copy(words_.begin(), words_.begin() + nw, out.words_.begin());
    out.clear_tail();
    return out;
}

std::string BitSequence::to_ascii01() const {
    std::string s(size_, '0');
    for (std::size_t i = 0; i < size_; ++i)
        if (bit(i)) s[i] = '1';
    return s;
}

std::string BitSequence::to_hex() const {
    static const char* digits = "0123456789abcdef";
    std::string s;
    s.reserve((size_ + 3) / 4);
    for (std::size_t i = 0; i < size_; i += 4) {
        unsigned nibble = 0;
        for (std::size_t b = 0; b < 4 && i + b < size_; ++b)
            nibble |= static_cast<unsigned>(bit(i + b)) << (3 - b);
        s.push_back(digits[nibble]);
    }
    return s;
}

std::size_t common_run_length(const BitSequence& s, std::size_t i, std::size_t j,
                              std::size_t n) {
    std::size_t limit = n - std::max(i, j);
    std::size_t pos = 0;
    while (pos < limit) {
        BitSequence::Word x = s.word_at(i + pos) ^ s.word_at(j + pos);
        if (x != 0) {
            pos += static_cast<std::size_t>(std::countr_zero(x));
            break;
        }
        pos += BitSequence::kWordBits;
    }
    return std::min(pos, limit);
}

}  // namespace seqc
