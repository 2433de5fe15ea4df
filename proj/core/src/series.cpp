#include "workbench/series.hpp"

#include <stdexcept>

namespace workbench {

PowerSeries::PowerSeries(int truncation, std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
    coeffs_.resize(std::size_t(truncation) + 1);
}

PowerSeries PowerSeries::constant(int truncation, long long value) {
    PowerSeries s(truncation);
    s.coeffs_[0] = BigInt(value);
    return s;
}

PowerSeries PowerSeries::from_ints(int truncation, const std::vector<long long>& coeffs) {
    PowerSeries s(truncation);
    for (std::size_t i = 0; i < coeffs.size() && i < s.coeffs_.size(); ++i) s.coeffs_[i] = BigInt(coeffs[i]);
    return s;
}

PowerSeries PowerSeries::geometric(int truncation, int power) {
    // 1/(1-t)^power by iterated prefix sums of the all-ones expansion.
    PowerSeries s = constant(truncation, 1);
    for (int p = 0; p < power; ++p) {
        BigInt acc;
        for (auto& c : s.coeffs_) {
            acc += c;
            c = acc;
        }
    }
    return s;
}

PowerSeries PowerSeries::operator+(const PowerSeries& o) const {
    if (coeffs_.size() != o.coeffs_.size()) throw std::invalid_argument("PowerSeries: truncation mismatch");
    PowerSeries out(truncation());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] = coeffs_[i] + o.coeffs_[i];
    return out;
}

PowerSeries PowerSeries::operator-(const PowerSeries& o) const {
    if (coeffs_.size() != o.coeffs_.size()) throw std::invalid_argument("PowerSeries: truncation mismatch");
    PowerSeries out(truncation());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] = coeffs_[i] - o.coeffs_[i];
    return out;
}

PowerSeries PowerSeries::operator*(const PowerSeries& o) const {
    if (coeffs_.size() != o.coeffs_.size()) throw std::invalid_argument("PowerSeries: truncation mismatch");
    PowerSeries out(truncation());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; i + j < coeffs_.size(); ++j)
            out.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    return out;
}

PowerSeries PowerSeries::scaled(long long c) const {
    PowerSeries out(truncation());
    BigInt f(c);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] = coeffs_[i] * f;
    return out;
}

PowerSeries PowerSeries::substitute_power(int k) const {
    if (k <= 0) throw std::invalid_argument("PowerSeries::substitute_power: k must be positive");
    PowerSeries out(truncation());
    for (std::size_t i = 0; i * k < coeffs_.size(); ++i) out.coeffs_[i * k] = coeffs_[i];
    return out;
}

PowerSeries PowerSeries::div_exact(uint64_t divisor) const {
    PowerSeries out(truncation());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] = coeffs_[i].div_exact(divisor);
    return out;
}

PowerSeries PowerSeries::shifted(int k) const {
    PowerSeries out(truncation());
    for (std::size_t i = 0; i + k < coeffs_.size(); ++i) out.coeffs_[i + k] = coeffs_[i];
    return out;
}

bool PowerSeries::nonnegative() const {
    for (const auto& c : coeffs_)
        if (c.is_negative()) return false;
    return true;
}

std::vector<std::string> PowerSeries::coefficient_strings() const {
    std::vector<std::string> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(c.to_string());
    return out;
}

PowerSeries series_sym_invariants(const PowerSeries& s) {
    PowerSeries sq = s * s;
    PowerSeries doubled = s.substitute_power(2);
    PowerSeries sum = sq + doubled;
    for (std::size_t d = 0; d <= std::size_t(sum.truncation()); ++d)
        if (!sum[d].divisible_by(2))
            throw std::domain_error("series_sym_invariants: odd coefficient, input is not realizable");
    return sum.div_exact(2);
}

PowerSeries series_quadratic(const PowerSeries& s) {
    PowerSeries half = series_sym_invariants(s);
    // t/(1-t) * S(t^2)
    PowerSeries tail = (PowerSeries::geometric(s.truncation()) * s.substitute_power(2)).shifted(1);
    return half + tail;
}

PowerSeries series_gysin(const PowerSeries& sx, const PowerSeries& sker) {
    int n = sx.truncation();
    PowerSeries one_minus_t = PowerSeries::from_ints(n, {1, -1});
    PowerSeries one_plus_t = PowerSeries::from_ints(n, {1, 1});
    PowerSeries out = one_minus_t * sx + one_plus_t * sker;
    if (!out.nonnegative())
        throw std::domain_error("series_gysin: negative coefficient, inputs are not realizable");
    return out;
}

PowerSeries series_tau_quadratic(const PowerSeries& sm, const PowerSeries& stau) {
    PowerSeries out = series_quadratic(sm) - series_sym_invariants(sm) + series_sym_invariants(stau);
    if (!out.nonnegative())
        throw std::domain_error("series_tau_quadratic: negative coefficient, precondition violated");
    return out;
}

SylowAltSeries series_sylow_alt_pipeline(int m, int truncation) {
    if (m < 1) throw std::invalid_argument("series_sylow_alt_pipeline: m must be >= 1");
    SylowAltSeries stage;
    stage.s = PowerSeries::geometric(truncation);
    stage.t = PowerSeries(truncation);
    for (int k = 1; k < m; ++k) {
        PowerSeries next_s = series_quadratic(stage.s);
        PowerSeries next_t = series_tau_quadratic(stage.s, stage.t);
        stage.s = std::move(next_s);
        stage.t = std::move(next_t);
    }
    stage.a = series_gysin(stage.s, stage.t);
    return stage;
}

PowerSeries series_a4x(const PowerSeries& s) {
    int n = s.truncation();
    PowerSeries s2 = s.substitute_power(2);
    PowerSeries s4 = s.substitute_power(4);
    PowerSeries s2sq = s2 * s2;
    PowerSeries geom = PowerSeries::geometric(n);

    PowerSeries term1 = geom * geom * s4;

    PowerSeries diff = s2sq - s4;
    for (std::size_t d = 0; d <= std::size_t(n); ++d)
        if (!diff[d].divisible_by(2))
            throw std::domain_error("series_a4x: inexact halving, input is not realizable");
    PowerSeries term2 = (geom * diff.div_exact(2)).scaled(3);

    PowerSeries free_part = s * s * s * s - s2sq.scaled(3) + s4.scaled(2);
    for (std::size_t d = 0; d <= std::size_t(n); ++d)
        if (!free_part[d].divisible_by(4))
            throw std::domain_error("series_a4x: inexact quartering, input is not realizable");
    PowerSeries term3 = free_part.div_exact(4);

    return term1 + term2 + term3;
}

PowerSeries series_sylow_symmetric(int n, int truncation) {
    if (n < 0) throw std::invalid_argument("series_sylow_symmetric: n must be >= 0");
    PowerSeries out = PowerSeries::constant(truncation, 1);
    for (int bit = 1; (1 << bit) <= n; ++bit) {
        if (!(n & (1 << bit))) continue;  // the 2^0 block contributes a trivial factor
        PowerSeries factor = PowerSeries::geometric(truncation);
        for (int k = 2; k <= bit; ++k) factor = series_quadratic(factor);
        out = out * factor;
    }
    return out;
}

}  // namespace workbench
