#pragma once

#include <vector>

#include "error.hpp"

namespace qadc {

/// Real univariate polynomial, coefficients stored low-to-high degree so that
/// degree() == coeffs.size() - 1 and Horner evaluation is direct.
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(std::vector<double> coeffs);

    static Polynomial constant(double c) { return Polynomial({c}); }

    const std::vector<double>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    int degree() const noexcept { return is_zero() ? -1 : static_cast<int>(coeffs_.size()) - 1; }
    double leading() const noexcept { return is_zero() ? 0.0 : coeffs_.back(); }

    double operator()(double y) const noexcept { return eval(y); }
    double eval(double y) const noexcept;
    double derivative_at(double y) const noexcept;

    /// p(y) + c
    Polynomial shifted(double c) const;

    bool operator==(const Polynomial&) const = default;

  private:
    std::vector<double> coeffs_; // empty == identically zero
};

/// Non-decreasing list of real roots, multiplicity encoded by repetition.
using RootList = std::vector<double>;

inline constexpr int kMaxRootDegree = 8;

/// All real roots of p within absolute residual tolerance tol, sorted
/// non-decreasing, complex pairs discarded. Throws ZeroPolynomial for p == 0.
RootList real_roots(const Polynomial& p, double tol = 1e-8);

/// leading * prod_k (y - roots[k]); empty root list gives the constant poly.
Polynomial from_roots(const RootList& roots, double leading);

/// Residual scale sum_i |a_i| max(1,|y|)^i used by the root acceptance test.
double residual_scale(const Polynomial& p, double y);

} // namespace qadc
