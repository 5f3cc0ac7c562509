#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace seqc {

/// Measure values for prefix lengths N = 1..Nmax. Every measure in this
/// library is nondecreasing in N; construction rejects profiles that are
/// not, so a stored profile is always monotone.
class ComplexityProfile {
public:
    ComplexityProfile() = default;
    explicit ComplexityProfile(std::vector<std::uint64_t> values)
        : values_(std::move(values)) {
        for (std::size_t i = 1; i < values_.size(); ++i)
            if (values_[i] < values_[i - 1])
                throw std::logic_error("complexity profile is not nondecreasing");
    }

    std::size_t nmax() const { return values_.size(); }

    std::uint64_t at(std::size_t n) const {
        if (n < 1 || n > values_.size())
            throw std::out_of_range("profile index out of range");
        return values_[n - 1];
    }

    const std::vector<std::uint64_t>& values() const { return values_; }

    std::vector<std::pair<std::size_t, std::uint64_t>> entries() const {
        std::vector<std::pair<std::size_t, std::uint64_t>> out;
        out.reserve(values_.size());
        for (std::size_t i = 0; i < values_.size(); ++i) out.emplace_back(i + 1, values_[i]);
        return out;
    }

    friend bool operator==(const ComplexityProfile& a, const ComplexityProfile& b) {
        return a.values_ == b.values_;
    }

private:
    std::vector<std::uint64_t> values_;
};

}  // namespace seqc
