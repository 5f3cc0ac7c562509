#include "seqc/seqgen.hpp"

#include <bit>
#include <cctype>
#include <fstream>
#include <limits>
#include <sstream>
#include <utility>

namespace seqc {

SequenceSpec SequenceSpec::thue_morse() {
    SequenceSpec s;
    s.kind = Kind::ThueMorse;
    return s;
}

SequenceSpec SequenceSpec::pattern(std::uint32_t k) {
    if (k < 1) throw std::invalid_argument("pattern: k must be >= 1");
    SequenceSpec s;
    s.kind = Kind::Pattern;
    s.k = k;
    return s;
}

SequenceSpec SequenceSpec::along_squares(SequenceSpec inner) {
    SequenceSpec s;
    s.kind = Kind::AlongSquares;
    s.inner = std::make_shared<SequenceSpec>(std::move(inner));
    return s;
}

SequenceSpec SequenceSpec::literal(BitSequence bits) {
    SequenceSpec s;
    s.kind = Kind::Literal;
    s.bits = std::move(bits);
    return s;
}

SequenceSpec SequenceSpec::file(std::string path, FileFormat format) {
    SequenceSpec s;
    s.kind = Kind::File;
    s.path = std::move(path);
    s.format = format;
    return s;
}

std::string SequenceSpec::describe() const {
    switch (kind) {
        case Kind::ThueMorse: return "thue-morse";
        case Kind::Pattern: return "pattern(" + std::to_string(k) + ")";
        case Kind::AlongSquares: return inner->describe() + " along squares";
        case Kind::Literal: return "literal[" + std::to_string(bits.size()) + " bits]";
        case Kind::File: return "file:" + path;
    }
    return "?";
}

namespace {

BitSequence generate_thue_morse(std::size_t n) {
    BitSequence out(n);
    // t_0 = 0; t_i = t_{i/2} for even i, t_{(i-1)/2} + 1 for odd i.
    for (std::size_t i = 1; i < n; ++i)
        out.set_bit(i, out.bit(i >> 1) ^ (i & 1));
    return out;
}

BitSequence generate_pattern(std::uint32_t k, std::size_t n) {
    if (k >= 63) throw std::invalid_argument("pattern: k too large");
    const std::uint64_t mask = (std::uint64_t{1} << k) - 1;
    BitSequence out(n);
    // p_0 = 0; p_i = p_{floor(i/2)} + [i = -1 mod 2^k].
    for (std::size_t i = 1; i < n; ++i)
        out.set_bit(i, out.bit(i >> 1) ^ ((i & mask) == mask));
    return out;
}

std::uint64_t checked_square(std::uint64_t i) {
    if (i > 3037000499ULL)  // floor(sqrt(2^63 - 1))
        throw std::invalid_argument("along-squares: index overflow");
    return i * i;
}

// Single term by walking the defining recurrence from index i down to 0.
bool term_at(const SequenceSpec& spec, std::uint64_t i) {
    switch (spec.kind) {
        case SequenceSpec::Kind::ThueMorse: {
            bool acc = false;
            while (i != 0) {
                acc ^= (i & 1);
                i >>= 1;
            }
            return acc;
        }
        case SequenceSpec::Kind::Pattern: {
            const std::uint64_t mask = (std::uint64_t{1} << spec.k) - 1;
            bool acc = false;
            while (i != 0) {
                acc ^= ((i & mask) == mask);
                i >>= 1;
            }
            return acc;
        }
        case SequenceSpec::Kind::AlongSquares:
            return term_at(*spec.inner, checked_square(i));
        case SequenceSpec::Kind::Literal:
            if (i >= spec.bits.size())
                throw std::invalid_argument(
                    "literal sequence has only " + std::to_string(spec.bits.size()) +
                    " bits, index " + std::to_string(i) + " requested");
            return spec.bits.bit(i);
        case SequenceSpec::Kind::File:
            throw std::logic_error("term_at: file spec not resolved");
    }
    return false;
}

// Replace File nodes by their parsed contents so term_at can index them.
SequenceSpec resolve_files(const SequenceSpec& spec) {
    switch (spec.kind) {
        case SequenceSpec::Kind::File:
            return SequenceSpec::literal(ingest(spec.path, spec.format));
        case SequenceSpec::Kind::AlongSquares:
            return SequenceSpec::along_squares(resolve_files(*spec.inner));
        default:
            return spec;
    }
}

}  // namespace

BitSequence generate(const SequenceSpec& spec, std::size_t n) {
    if (n == 0) throw std::invalid_argument("generate: n must be >= 1");
    switch (spec.kind) {
        case SequenceSpec::Kind::ThueMorse:
            return generate_thue_morse(n);
        case SequenceSpec::Kind::Pattern:
            if (spec.k < 1) throw std::invalid_argument("pattern: k must be >= 1");
            return generate_pattern(spec.k, n);
        case SequenceSpec::Kind::AlongSquares: {
            SequenceSpec resolved = resolve_files(*spec.inner);
            BitSequence out(n);
            for (std::size_t i = 0; i < n; ++i)
                out.set_bit(i, term_at(resolved, checked_square(i)));
            return out;
        }
        case SequenceSpec::Kind::Literal:
            if (spec.bits.size() < n)
                throw std::invalid_argument(
                    "literal sequence has only " + std::to_string(spec.bits.size()) +
                    " bits, " + std::to_string(n) + " requested");
            return spec.bits.prefix(n);
        case SequenceSpec::Kind::File: {
            BitSequence bits = ingest(spec.path, spec.format);
            if (bits.size() < n)
                throw std::invalid_argument(
                    "file " + spec.path + " has only " + std::to_string(bits.size()) +
                    " bits, " + std::to_string(n) + " requested");
            return bits.prefix(n);
        }
    }
    throw std::logic_error("generate: unknown spec kind");
}

BitSequence pattern_by_digit_count(std::uint32_t k, std::size_t n) {
    if (k < 1) throw std::invalid_argument("pattern_by_digit_count: k must be >= 1");
    if (n == 0) throw std::invalid_argument("pattern_by_digit_count: n must be >= 1");
    BitSequence out(n);
    for (std::size_t i = 0; i < n; ++i) {
        // Occurrences of 1^k overlap: a maximal run of r ones holds
        // max(0, r - k + 1) of them.
        std::uint64_t v = i;
        std::uint64_t count = 0;
        while (v != 0) {
            unsigned run = static_cast<unsigned>(std::countr_one(v));
            if (run >= k) count += run - k + 1;
            v >>= run;
            v >>= std::countr_zero(v | (std::uint64_t{1} << 63));
        }
        out.set_bit(i, count & 1);
    }
    return out;
}

BitSequence parse_bits(std::string_view text, FileFormat format) {
    BitSequence out;
    for (std::size_t off = 0; off < text.size(); ++off) {
        unsigned char c = static_cast<unsigned char>(text[off]);
        if (std::isspace(c)) continue;
        if (format == FileFormat::Ascii01) {
            if (c != '0' && c != '1')
                throw ParseError("invalid character '" + std::string(1, text[off]) +
                                     "' at offset " + std::to_string(off),
                                 off);
            out.push_back(c == '1');
        } else {
            int nibble;
            if (c >= '0' && c <= '9')
                nibble = c - '0';
            else if (c >= 'a' && c <= 'f')
                nibble = c - 'a' + 10;
            else if (c >= 'A' && c <= 'F')
                nibble = c - 'A' + 10;
            else
                throw ParseError("invalid hex digit '" + std::string(1, text[off]) +
                                     "' at offset " + std::to_string(off),
                                 off);
            for (int b = 3; b >= 0; --b) out.push_back((nibble >> b) & 1);
        }
    }
    return out;
}

BitSequence ingest(const std::string& path, FileFormat format) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    BitSequence out = parse_bits(buf.str(), format);
    if (out.empty()) throw std::runtime_error("file contains no bits: " + path);
    return out;
}

}  // namespace seqc
