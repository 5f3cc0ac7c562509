#include "seqc/bivariate_poly_f2.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace seqc {

std::uint64_t BivariatePolyF2::total_degree() const {
    if (monomials_.empty())
        throw std::logic_error("zero polynomial has no total degree");
    std::uint64_t d = 0;
    for (const auto& [i, j] : monomials_) d = std::max(d, i + j);
    return d;
}

std::string BivariatePolyF2::to_string() const {
    if (monomials_.empty()) return "0";
    std::vector<Monomial> terms(monomials_.begin(), monomials_.end());
    std::sort(terms.begin(), terms.end(), [](const Monomial& a, const Monomial& b) {
        if (a.first + a.second != b.first + b.second)
            return a.first + a.second > b.first + b.second;
        return a.first > b.first;
    });
    std::string out;
    for (const auto& [i, j] : terms) {
        if (!out.empty()) out += " + ";
        std::string term;
        if (i == 1)
            term += "x";
        else if (i > 1)
            term += "x^" + std::to_string(i);
        if (j >= 1) {
            if (!term.empty()) term += " ";
            term += j == 1 ? "y" : "y^" + std::to_string(j);
        }
        out += term.empty() ? "1" : term;
    }
    return out;
}

PowerSeriesF2 eval_bivariate(const BivariatePolyF2& h, const PowerSeriesF2& g) {
    const std::size_t n = g.truncation();
    if (n == 0) throw std::invalid_argument("eval_bivariate: empty truncation");
    std::uint64_t max_j = 0;
    for (const auto& [i, j] : h.monomials()) max_j = std::max(max_j, j);

    PowerSeriesF2 out(n);
    PowerSeriesF2 gpow = PowerSeriesF2::one(n);
    for (std::uint64_t j = 0; j <= max_j; ++j) {
        if (j > 0) gpow = gpow.mul(g);
        // Collect sum of x^i over monomials (i, j); exponents >= n vanish.
        PowerSeriesF2 xpart(n);
        bool any = false;
        for (const auto& [i, jj] : h.monomials()) {
            if (jj != j) continue;
            any = true;
            if (i < n) xpart.set_coeff(i, !xpart.coeff(i));
        }
        if (any) out.add(xpart.mul(gpow));
    }
    return out;
}

namespace {

// Over F2, (x+1)^n = sum over submasks m of n of x^m (Lucas).
void add_binomial_power_times_y(BivariatePolyF2& h, std::uint64_t n, std::uint64_t j) {
    std::uint64_t m = n;
    while (true) {
        h.toggle(m, j);
        if (m == 0) break;
        m = (m - 1) & n;
    }
}

}  // namespace

BivariatePolyF2 witness_tm() {
    BivariatePolyF2 h;
    add_binomial_power_times_y(h, 3, 2);  // (x+1)^3 y^2
    add_binomial_power_times_y(h, 2, 1);  // (x+1)^2 y
    h.toggle(1, 0);                       // x
    return h;
}

BivariatePolyF2 witness_pattern(std::uint32_t k) {
    if (k < 1) throw std::invalid_argument("witness_pattern: k must be >= 1");
    if (k >= 63) throw std::invalid_argument("witness_pattern: k too large");
    const std::uint64_t p = std::uint64_t{1} << k;  // 2^k
    BivariatePolyF2 h;
    add_binomial_power_times_y(h, p + 1, 2);  // (x+1)^{2^k+1} y^2
    add_binomial_power_times_y(h, p, 1);      // (x+1)^{2^k} y
    h.toggle(p - 1, 0);                       // x^{2^k-1}
    return h;
}

}  // namespace seqc
