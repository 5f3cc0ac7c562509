#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>

#include "seqc/bit_sequence.hpp"

namespace seqc {

enum class FileFormat { Ascii01, Hex };

/// Parse failure in a bitstring file; offset() is the byte position of the
/// offending character.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// Declarative description of a sequence source.
///
/// Pattern(1) is the Thue-Morse sequence and Pattern(2) the Rudin-Shapiro
/// sequence; AlongSquares(inner) is the subsequence of inner read at the
/// square indices 0, 1, 4, 9, ...
struct SequenceSpec {
    enum class Kind { ThueMorse, Pattern, AlongSquares, Literal, File };

    Kind kind = Kind::ThueMorse;
    std::uint32_t k = 1;                    // Pattern only, k >= 1
    std::shared_ptr<SequenceSpec> inner;    // AlongSquares only
    BitSequence bits;                       // Literal only
    std::string path;                       // File only
    FileFormat format = FileFormat::Ascii01;

    static SequenceSpec thue_morse();
    static SequenceSpec pattern(std::uint32_t k);
    static SequenceSpec along_squares(SequenceSpec inner);
    static SequenceSpec literal(BitSequence bits);
    static SequenceSpec file(std::string path, FileFormat format);

    /// Short human-readable name ("thue-morse", "pattern(2)", ...).
    std::string describe() const;
};

/// First n terms of the described sequence.
///
/// Thue-Morse and Pattern(k) are filled iteratively bottom-up (each term
/// reads an already computed smaller index); AlongSquares evaluates inner
/// terms on demand by repeated halving of the index, so the inner prefix
/// up to index (n-1)^2 is never materialized.
BitSequence generate(const SequenceSpec& spec, std::size_t n);

/// Independent oracle for Pattern(k): bit i is the parity of the number of
/// (possibly overlapping) occurrences of the all-ones word 1^k in the
/// binary expansion of i.
BitSequence pattern_by_digit_count(std::uint32_t k, std::size_t n);

/// Read a bitstring file. ascii01: one bit per '0'/'1' byte, whitespace
/// ignored. hex: four bits per hex digit, most significant bit first.
BitSequence ingest(const std::string& path, FileFormat format);

/// Parse bitstring text in memory (same rules as ingest).
BitSequence parse_bits(std::string_view text, FileFormat format);

}  // namespace seqc
