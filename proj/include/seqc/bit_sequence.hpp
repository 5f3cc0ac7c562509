#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace seqc {

/// A finite string of bits over F2, packed into 64-bit words (LSB-first
/// inside each word). This is the universal input of all complexity
/// measures and the backing store for power-series coefficients and
/// elimination columns, so the word-level accessors are part of the
/// public surface.
class BitSequence {
public:
    using Word = std::uint64_t;
    static constexpr std::size_t kWordBits = 64;

    BitSequence() = default;
    explicit BitSequence(std::size_t n) : size_(n), words_(word_count(n), 0) {}

    static BitSequence from_ascii01(std::string_view s);

    std::size_t size() const { return size_; }
    bool empty() const { return size_ == 0; }

    bool bit(std::size_t i) const {
        return (words_[i / kWordBits] >> (i % kWordBits)) & 1u;
    }

    void set_bit(std::size_t i, bool v) {
        Word mask = Word{1} << (i % kWordBits);
        if (v)
            words_[i / kWordBits] |= mask;
        else
            words_[i / kWordBits] &= ~mask;
    }

    void push_back(bool v) {
        if (size_ % kWordBits == 0) words_.push_back(0);
        if (v) words_.back() |= Word{1} << (size_ % kWordBits);
        ++size_;
    }

    void reserve(std::size_t n) { words_.reserve(word_count(n)); }

    /// 64 bits starting at bit offset `pos`; positions past the end read
    /// as zero. The workhorse of word-parallel window comparison.
    Word word_at(std::size_t pos) const {
        std::size_t w = pos / kWordBits, sh = pos % kWordBits;
        Word lo = w < words_.size() ? words_[w] : 0;
        if (sh == 0) return lo;
        Word hi = w + 1 < words_.size() ? words_[w + 1] : 0;
        return (lo >> sh) | (hi << (kWordBits - sh));
    }

    const std::vector<Word>& words() const { return words_; }

    bool all_zero() const;
    bool is_constant() const;  // true for empty and single-bit sequences
    std::size_t popcount() const;

    /// Index of the lowest set bit, or size() if none.
    std::size_t lowest_set_bit() const;

    void xor_with(const BitSequence& other);
    /// this ^= (other << shift), truncated to this->size().
    void xor_shifted(const BitSequence& other, std::size_t shift);

    BitSequence prefix(std::size_t n) const;

    std::string to_ascii01() const;
    /// Hex digits, 4 bits per digit, most significant bit first; the last
    /// digit is zero-padded when size() is not a multiple of 4.
    std::string to_hex() const;

    friend bool operator==(const BitSequence& a, const BitSequence& b) {
        if (a.size_ != b.size_) return false;
        for (std::size_t w = 0; w < a.words_.size(); ++w)
            if (a.words_[w] != b.words_[w]) return false;
        return true;
    }

private:
    static std::size_t word_count(std::size_t n) {
        return (n + kWordBits - 1) / kWordBits;
    }
    // Invariant: bits at positions >= size_ in the last word are zero.
    void clear_tail();

    std::size_t size_ = 0;
    std::vector<Word> words_;
};

/// Length of the longest common prefix of the suffixes of `s` starting at
/// `i` and `j`, capped so both stay inside the first `n` bits.
std::size_t common_run_length(const BitSequence& s, std::size_t i, std::size_t j,
                              std::size_t n);

}  // namespace seqc
