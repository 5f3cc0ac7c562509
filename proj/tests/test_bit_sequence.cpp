#include <stdexcept>
#include <string>

#include "doctest.h"
#include "seqc/bit_sequence.hpp"

using seqc::BitSequence;

TEST_CASE("ascii01 round-trip and errors") {
    BitSequence s = BitSequence::from_ascii01("0110100110010110");
    CHECK(s.size() == 16);
    CHECK(s.to_ascii01() == "0110100110010110");
    CHECK_FALSE(s.bit(0));
    CHECK(s.bit(1));
    CHECK_THROWS_AS(BitSequence::from_ascii01("01a0"), std::invalid_argument);
    CHECK(BitSequence::from_ascii01("").empty());
}

TEST_CASE("set_bit and push_back across word boundaries") {
    for (std::size_t n : {1u, 63u, 64u, 65u, 130u}) {
        BitSequence a(n);
        BitSequence b;
        for (std::size_t i = 0; i < n; ++i) {
            bool v = (i * 7 + 3) % 5 == 0;
            a.set_bit(i, v);
            b.push_back(v);
        }
        CHECK(a == b);
        for (std::size_t i = 0; i < n; ++i) CHECK(a.bit(i) == ((i * 7 + 3) % 5 == 0));
    }
}

TEST_CASE("word_at reads across words and pads past the end with zeros") {
    BitSequence s(100);
    s.set_bit(0, true);
    s.set_bit(63, true);
    s.set_bit(64, true);
    s.set_bit(99, true);
    CHECK(s.word_at(0) == ((std::uint64_t{1} << 63) | 1));
    CHECK(s.word_at(63) == (0b11 | (std::uint64_t{1} << 36)));  // bits 63, 64, 99
    CHECK(s.word_at(99) == 1);
    CHECK(s.word_at(100) == 0);
    CHECK(s.word_at(5000) == 0);
    // bit i of word_at(p) is bit p+i of the sequence
    for (std::size_t p : {0u, 1u, 37u, 63u, 64u, 65u, 99u})
        for (std::size_t i = 0; i < 64; ++i)
            CHECK(((s.word_at(p) >> i) & 1) == (p + i < 100 ? s.bit(p + i) : false));
}

TEST_CASE("xor_shifted matches the bitwise definition and truncates") {
    BitSequence target = BitSequence::from_ascii01("1010101010101010");
    BitSequence other = BitSequence::from_ascii01("1100");
    BitSequence expect = target;
    std::size_t shift = 13;  // 3 of the 4 bits land inside, one falls off
    for (std::size_t i = 0; i < other.size() && shift + i < expect.size(); ++i)
        expect.set_bit(shift + i, expect.bit(shift + i) ^ other.bit(i));
    target.xor_shifted(other, shift);
    CHECK(target == expect);

    BitSequence big(200);
    BitSequence probe(200);
    probe.set_bit(0, true);
    probe.set_bit(70, true);
    big.xor_shifted(probe, 64);
    CHECK(big.bit(64));
    CHECK(big.bit(134));
    CHECK(big.popcount() == 2);
    big.xor_shifted(probe, 300);  // entirely out of range: no-op
    CHECK(big.popcount() == 2);
}

TEST_CASE("prefix, popcount, lowest_set_bit, constancy") {
    BitSequence s = BitSequence::from_ascii01("0000010100000000");
    CHECK(s.prefix(5).to_ascii01() == "00000");
    CHECK(s.prefix(8).to_ascii01() == "00000101");
    CHECK_THROWS_AS(s.prefix(17), std::invalid_argument);
    CHECK(s.popcount() == 2);
    CHECK(s.lowest_set_bit() == 5);
    CHECK(BitSequence(10).lowest_set_bit() == 10);
    CHECK(BitSequence(130).all_zero());
    CHECK(BitSequence(130).is_constant());
    BitSequence ones(130);
    for (std::size_t i = 0; i < 130; ++i) ones.set_bit(i, true);
    CHECK(ones.is_constant());
    ones.set_bit(129, false);
    CHECK_FALSE(ones.is_constant());
    CHECK(BitSequence().is_constant());
}

TEST_CASE("hex emission is MSB-first with zero padding in the last nibble") {
    CHECK(BitSequence::from_ascii01("01101001").to_hex() == "69");
    CHECK(BitSequence::from_ascii01("0110").to_hex() == "6");
    CHECK(BitSequence::from_ascii01("011").to_hex() == "6");  // padded low bit
    CHECK(BitSequence::from_ascii01("1").to_hex() == "8");
    CHECK(BitSequence::from_ascii01("11111111").to_hex() == "ff");
    CHECK(BitSequence().to_hex().empty());
}

TEST_CASE("common_run_length finds the first mismatch inside the bound") {
    BitSequence s = BitSequence::from_ascii01("0110110110");
    // suffixes at 0 and 3: 0110110110 vs 0110110 -> agree for 7 bits (capped)
    CHECK(seqc::common_run_length(s, 0, 3, 10) == 7);
    CHECK(seqc::common_run_length(s, 0, 1, 10) == 0);
    CHECK(seqc::common_run_length(s, 1, 4, 10) == 6);
    CHECK(seqc::common_run_length(s, 0, 0, 10) == 10);
    // restrict n: cap shrinks with the prefix bound
    CHECK(seqc::common_run_length(s, 0, 3, 5) == 2);

    // word-boundary exercise: long identical halves
    BitSequence big(300);
    for (std::size_t i = 0; i < 150; ++i) {
        bool v = (i % 3) == 1;
        big.set_bit(i, v);
        big.set_bit(i + 150, v);
    }
    CHECK(seqc::common_run_length(big, 0, 150, 300) == 150);
    big.set_bit(150 + 77, !big.bit(150 + 77));
    CHECK(seqc::common_run_length(big, 0, 150, 300) == 77);
}
