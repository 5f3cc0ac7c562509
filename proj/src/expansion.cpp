#include "seqc/expansion.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "seqc/power_series_f2.hpp"

namespace seqc {

ExpansionResult expansion_complexity(const BitSequence& seq, std::size_t n,
                                     std::uint64_t dmax) {
    if (n == 0) throw std::invalid_argument("expansion complexity needs n >= 1");
    if (n > seq.size())
        throw std::invalid_argument("prefix length exceeds sequence length");
    if (dmax == 0) throw std::invalid_argument("dmax must be >= 1");
    if (dmax > (std::uint64_t{1} << 20))
        throw std::invalid_argument("dmax too large");

    ExpansionResult res;
    if (seq.prefix(n).all_zero()) {
        res.degree = 0;  // explicit convention for the zero prefix
        return res;
    }

    // Each non-dependent column claims a distinct pivot in [0, n), so at
    // most n+1 columns are ever processed; combo rows need only that many
    // bits even when dmax allows far more monomials.
    const std::uint64_t ncols = (dmax + 1) * (dmax + 2) / 2;
    const std::size_t combo_bits =
        static_cast<std::size_t>(std::min<std::uint64_t>(ncols, n + 1));

    const PowerSeriesF2 g = series_from(seq, n);
    std::vector<PowerSeriesF2> gpow{PowerSeriesF2::one(n)};

    struct BasisRow {
        BitSequence vec;    // reduced column, n bits, pivot = lowest set bit
        BitSequence combo;  // which original columns sum to vec
    };
    std::vector<BasisRow> basis;
    std::vector<std::ptrdiff_t> basis_at(n, -1);  // pivot position -> basis index

    std::vector<BivariatePolyF2::Monomial> cols;

    // Reduce the column for x^i G^j against the basis. Returns true when it
    // reduced to zero, leaving the dependency in res.annihilator.
    auto process = [&](std::uint64_t i, std::uint64_t j) {
        const std::size_t idx = cols.size();
        cols.push_back({i, j});
        while (gpow.size() <= j) gpow.push_back(gpow.back().mul(g));
        BitSequence v(n);
        if (i < n) v.xor_shifted(gpow[static_cast<std::size_t>(j)].coeffs(),
                                 static_cast<std::size_t>(i));
        BitSequence combo(combo_bits);
        combo.set_bit(idx, true);
        for (;;) {
            std::size_t p = v.lowest_set_bit();
            if (p == v.size()) {
                for (std::size_t c = 0; c < cols.size(); ++c)
                    if (combo.bit(c)) res.annihilator.toggle(cols[c].first, cols[c].second);
                return true;
            }
            if (basis_at[p] < 0) {
                basis_at[p] = static_cast<std::ptrdiff_t>(basis.size());
                basis.push_back({std::move(v), std::move(combo)});
                return false;
            }
            const BasisRow& row = basis[static_cast<std::size_t>(basis_at[p])];
            v.xor_with(row.vec);
            combo.xor_with(row.combo);
        }
    };

    process(0, 0);  // the constant monomial; never dependent (its column is e_0)
    for (std::uint64_t d = 1; d <= dmax; ++d) {
        for (std::uint64_t i = 0; i <= d; ++i) {
            if (process(i, d - i)) {
                res.degree = d;
                return res;
            }
        }
    }
    return res;  // independent through dmax: degree stays empty
}

std::uint64_t default_dmax(const SequenceSpec& spec) {
    if (spec.kind == SequenceSpec::Kind::ThueMorse) return 6;  // 2^1 + 4
    if (spec.kind == SequenceSpec::Kind::Pattern && spec.k < 20)
        return (std::uint64_t{1} << spec.k) + 4;
    return 32;
}

}  // namespace seqc
