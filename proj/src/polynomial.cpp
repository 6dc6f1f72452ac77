#include "polynomial.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

namespace qadc {

Polynomial::Polynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back() == 0.0) coeffs_.pop_back();
}

double Polynomial::eval(double y) const noexcept {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * y + *it;
    return acc;
}

double Polynomial::derivative_at(double y) const noexcept {
    double acc = 0.0;
    for (int i = degree(); i >= 1; --i) acc = acc * y + coeffs_[static_cast<size_t>(i)] * i;
    return acc;
}

Polynomial Polynomial::shifted(double c) const {
    std::vector<double> out = coeffs_;
    if (out.empty())
        out.push_back(c);
    else
        out[0] += c;
    return Polynomial(std::move(out));
}

double residual_scale(const Polynomial& p, double y) {
    const double m = std::max(1.0, std::abs(y));
    double scale = 0.0, pw = 1.0;
    for (double a : p.coeffs()) {
        scale += std::abs(a) * pw;
        pw *= m;
    }
    return scale;
}

namespace {

// A couple of Newton steps sharpen companion-matrix eigenvalues to full
// double precision; bail out if the step diverges.
double polish_root(const Polynomial& p, double x0) {
    double x = x0;
    for (int it = 0; it < 12; ++it) {
        const double f = p.eval(x);
        if (f == 0.0) return x;
        const double df = p.derivative_at(x);
        if (df == 0.0) break;
        const double step = f / df;
        const double next = x - step;
        if (!std::isfinite(next)) break;
        if (std::abs(next - x0) > 1.0 + 2.0 * std::abs(x0)) break;
        x = next;
        if (std::abs(step) <= 1e-15 * (1.0 + std::abs(x))) break;
    }
    return std::abs(p.eval(x)) <= std::abs(p.eval(x0)) ? x : x0;
}

} // namespace

RootList real_roots(const Polynomial& p, double tol) {
    if (p.is_zero()) fail(ErrorCode::ZeroPolynomial, "real_roots: zero polynomial has no root set");
    const int d = p.degree();
    if (d > kMaxRootDegree)
        fail(ErrorCode::InvalidArgument, "real_roots: degree above supported limit");
    if (d == 0) return {};
    if (d == 1) return {-p.coeffs()[0] / p.coeffs()[1]};

    // Companion matrix of the monic polynomial; eigenvalues are the roots.
    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(d, d);
    const double lead = p.leading();
    for (int i = 0; i < d; ++i) companion(i, d - 1) = -p.coeffs()[static_cast<size_t>(i)] / lead;
    for (int i = 1; i < d; ++i) companion(i, i - 1) = 1.0;

    Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success)
        fail(ErrorCode::Internal, "real_roots: eigenvalue iteration failed");

    RootList roots;
    for (int i = 0; i < d; ++i) {
        const std::complex<double> z = solver.eigenvalues()(i);
        const double im = std::abs(z.imag());
        const double re_scale = 1.0 + std::abs(z.real());
        // Repeated real roots surface as conjugate pairs with imag ~ sqrt(eps),
        // so candidates above the tight filter are kept when the polished value
        // actually satisfies the residual test.
        if (im > 1e-4 * re_scale) continue;
        const double r = polish_root(p, z.real());
        if (std::abs(p.eval(r)) <= tol * residual_scale(p, r)) roots.push_back(r);
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

Polynomial from_roots(const RootList& roots, double leading) {
    if (leading == 0.0) fail(ErrorCode::InvalidArgument, "from_roots: leading coefficient is zero");
    std::vector<double> c{leading};
    for (double r : roots) {
        c.push_back(0.0);
        for (size_t i = c.size() - 1; i >= 1; --i) c[i] = c[i - 1] - r * c[i];
        c[0] *= -r;
    }
    return Polynomial(std::move(c));
}

} // namespace qadc
