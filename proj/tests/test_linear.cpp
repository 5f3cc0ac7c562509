#include <bit>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "seqc/linear.hpp"
#include "seqc/seqgen.hpp"

using seqc::BitSequence;
using seqc::LfsrFit;

namespace {

BitSequence random_bits(std::mt19937_64& rng, std::size_t n) {
    BitSequence s(n);
    std::uint64_t word = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (i % 64 == 0) word = rng();
        s.set_bit(i, (word >> (i % 64)) & 1);
    }
    return s;
}

// Does the register (mask of L taps, tap bit l-1 <-> coefficient of s_{i-1-l})
// reproduce s_0..s_{n-1} from the seed s_0..s_{L-1}?
bool mask_fits(std::uint32_t mask, std::size_t L, std::uint64_t s, std::size_t n) {
    for (std::size_t i = L; i < n; ++i) {
        std::uint32_t window = static_cast<std::uint32_t>((s >> (i - L)) & ((1u << L) - 1));
        unsigned predicted = std::popcount(window & mask) & 1u;
        if (predicted != ((s >> i) & 1)) return false;
    }
    return true;
}

// Independent minimal-L search by brute force over all 2^L tap masks.
// Only used for n <= 12.
std::uint64_t min_lfsr_length(std::uint64_t s, std::size_t n) {
    if ((s & ((std::uint64_t{1} << n) - 1)) == 0) return 0;
    for (std::size_t L = 1; L < n; ++L)
        for (std::uint32_t mask = 0; mask < (1u << L); ++mask)
            if (mask_fits(mask, L, s, n)) return L;
    return n;  // only the trivial register that stores everything fits
}

}  // namespace

TEST_CASE("fixed examples") {
    CHECK(berlekamp_massey(BitSequence::from_ascii01("0000"), 4).length == 0);
    CHECK(berlekamp_massey(BitSequence::from_ascii01("0001"), 4).length == 4);
    CHECK(berlekamp_massey(BitSequence::from_ascii01("0110"), 4).length == 2);
    CHECK(berlekamp_massey(BitSequence::from_ascii01("1"), 1).length == 1);

    // 0110: s_i = s_{i-2} + s_{i-1}? 0,1,1,0: s_2 = s_0+s_1 = 1, s_3 = s_1+s_2 = 0.
    LfsrFit f = berlekamp_massey(BitSequence::from_ascii01("0110"), 4);
    REQUIRE(f.taps.size() == 2);
    CHECK(f.taps.bit(0));
    CHECK(f.taps.bit(1));
}

TEST_CASE("argument validation and degenerate sizes") {
    BitSequence s = BitSequence::from_ascii01("0110");
    CHECK_THROWS_AS(berlekamp_massey(s, 0), std::invalid_argument);
    CHECK_THROWS_AS(berlekamp_massey(s, 5), std::invalid_argument);
    CHECK_THROWS_AS(lc_profile(s, 0), std::invalid_argument);
    CHECK(berlekamp_massey(BitSequence::from_ascii01("0"), 1).length == 0);
}

TEST_CASE("profile fixtures") {
    auto prof = lc_profile(BitSequence::from_ascii01("0001"), 4);
    CHECK(prof.values() == std::vector<std::uint64_t>{0, 0, 0, 4});
    auto zeros = lc_profile(BitSequence(6), 6);
    CHECK(zeros.values() == std::vector<std::uint64_t>{0, 0, 0, 0, 0, 0});
}

TEST_CASE("profile agrees with from-scratch runs at every prefix") {
    std::mt19937_64 rng(31337);
    for (int rep = 0; rep < 8; ++rep) {
        BitSequence s = random_bits(rng, 160);
        auto prof = lc_profile(s, 160);
        for (std::size_t n = 1; n <= 160; ++n)
            REQUIRE(prof.at(n) == berlekamp_massey(s, n).length);
    }
    BitSequence t = generate(seqc::SequenceSpec::thue_morse(), 256);
    auto prof = lc_profile(t, 256);
    for (std::size_t n = 1; n <= 256; ++n)
        REQUIRE(prof.at(n) == berlekamp_massey(t, n).length);
}

TEST_CASE("minimality against exhaustive register search") {
    for (std::size_t n = 1; n <= 12; ++n) {
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
            BitSequence s(n);
            for (std::size_t i = 0; i < n; ++i) s.set_bit(i, (bits >> i) & 1);
            LfsrFit f = berlekamp_massey(s, n);
            REQUIRE(f.length == min_lfsr_length(bits, n));
            REQUIRE(f.fits(s, n));
        }
    }
}

TEST_CASE("the fitted register replays long random prefixes") {
    std::mt19937_64 rng(4242);
    for (std::size_t n : {100u, 500u, 1000u}) {
        BitSequence s = random_bits(rng, n);
        LfsrFit f = berlekamp_massey(s, n);
        CHECK(f.fits(s, n));
        CHECK(f.taps.size() == f.length);
        // minimality witness: no register of length L-1 would have produced
        // a different profile tail, i.e. the profile is non-decreasing and
        // ends at f.length
        auto prof = lc_profile(s, n);
        CHECK(prof.at(n) == f.length);
    }
}

TEST_CASE("random sequences have linear complexity near n/2") {
    std::mt19937_64 rng(2718281828);
    double total = 0;
    for (int rep = 0; rep < 40; ++rep) {
        BitSequence s = random_bits(rng, 1000);
        total += static_cast<double>(berlekamp_massey(s, 1000).length);
    }
    double mean = total / 40.0;
    CHECK(mean > 400.0);
    CHECK(mean < 600.0);
}
