#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "workbench/bigint.hpp"

namespace workbench {

/// Integer power series truncated at a fixed degree; all arithmetic is exact.
class PowerSeries {
public:
    PowerSeries() = default;
    explicit PowerSeries(int truncation) : coeffs_(std::size_t(truncation) + 1) {}
    PowerSeries(int truncation, std::vector<BigInt> coeffs);

    static PowerSeries constant(int truncation, long long value);
    static PowerSeries from_ints(int truncation, const std::vector<long long>& coeffs);
    /// Expansion of 1/(1-t)^power.
    static PowerSeries geometric(int truncation, int power = 1);

    int truncation() const { return int(coeffs_.size()) - 1; }
    const BigInt& operator[](std::size_t d) const { return coeffs_.at(d); }
    BigInt& at(std::size_t d) { return coeffs_.at(d); }
    const std::vector<BigInt>& coefficients() const { return coeffs_; }

    PowerSeries operator+(const PowerSeries& o) const;
    PowerSeries operator-(const PowerSeries& o) const;
    PowerSeries operator*(const PowerSeries& o) const;
    PowerSeries scaled(long long c) const;
    /// Substitution t -> t^k.
    PowerSeries substitute_power(int k) const;
    /// Coefficientwise exact division; throws std::domain_error when inexact.
    PowerSeries div_exact(uint64_t divisor) const;
    /// Multiply by t^k (shift right, truncating).
    PowerSeries shifted(int k) const;

    bool nonnegative() const;
    bool operator==(const PowerSeries& o) const { return coeffs_ == o.coeffs_; }

    std::vector<std::string> coefficient_strings() const;

private:
    std::vector<BigInt> coeffs_;  // index = degree, size = truncation + 1
};

/// Poincare series of the quadratic construction:
///   (S(t)^2 + S(t^2))/2 + t/(1-t) * S(t^2).
PowerSeries series_quadratic(const PowerSeries& s);

/// Poincare series of the symmetric invariants of a tensor square:
///   (S(t)^2 + S(t^2))/2.
PowerSeries series_sym_invariants(const PowerSeries& s);

/// Poincare series of a double cover from the Gysin sequence:
///   (1-t) S(X) + (1+t) S(ker e).  Throws on a negative coefficient.
PowerSeries series_gysin(const PowerSeries& sx, const PowerSeries& sker);

/// Series of the u-torsion of the quadratic construction, valid for a reduced
/// input module:  quad(S) - (sym(S) - sym(T)).  Throws on a negative coefficient.
PowerSeries series_tau_quadratic(const PowerSeries& sm, const PowerSeries& stau);

struct SylowAltSeries {
    PowerSeries s;  // Poincare series of the 2-Sylow of the symmetric group
    PowerSeries t;  // series of its u-torsion part
    PowerSeries a;  // Poincare series of the 2-Sylow of the alternating group
};

/// Recursion S_{k+1} = quad(S_k), T_{k+1} = tau_quad(S_k, T_k), A_m = gysin(S_m, T_m)
/// starting from S_1 = 1/(1-t), T_1 = 0; computes the stage for 2^m points.
SylowAltSeries series_sylow_alt_pipeline(int m, int truncation);

/// Series of the four-fold construction over the Klein group:
///   1/(1-t)^2 S(t^4) + 3/(2(1-t)) (S(t^2)^2 - S(t^4))
///   + 1/4 (S(t)^4 - 3 S(t^2)^2 + 2 S(t^4)).
PowerSeries series_a4x(const PowerSeries& s);

/// Poincare series of the 2-Sylow of the symmetric group on n letters
/// (product over the binary digits of n of the power-of-two stages).
PowerSeries series_sylow_symmetric(int n, int truncation);

}  // namespace workbench
