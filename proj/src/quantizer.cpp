#include "quantizer.hpp"

#include <algorithm>
#include <cmath>

namespace qadc {

void Quantizer::validate() const {
    if (n_q < 1) fail(ErrorCode::InvalidArgument, "quantizer: n_q must be positive");
    if (ell < 2) fail(ErrorCode::InvalidArgument, "quantizer: ell must be at least 2");
    if (delta < 1 || delta > kMaxRootDegree)
        fail(ErrorCode::InvalidArgument, "quantizer: delta out of supported range");
    if (static_cast<int>(polys.size()) != n_q)
        fail(ErrorCode::LengthMismatch, "quantizer: polynomial count != n_q");
    if (static_cast<int>(thresholds.size()) != n_q)
        fail(ErrorCode::LengthMismatch, "quantizer: threshold row count != n_q");
    for (const auto& p : polys)
        if (p.degree() > delta)
            fail(ErrorCode::InvalidArgument, "quantizer: polynomial degree exceeds delta");
    for (const auto& row : thresholds)
        if (static_cast<int>(row.size()) != ell - 1)
            fail(ErrorCode::LengthMismatch, "quantizer: threshold row must have ell-1 entries");
}

Codeword quantize(const Quantizer& q, double y) {
    Codeword out(static_cast<size_t>(q.n_q), 0);
    for (int j = 0; j < q.n_q; ++j) {
        const double w = q.polys[static_cast<size_t>(j)].eval(y);
        int level = 0;
        for (double t : q.thresholds[static_cast<size_t>(j)])
            if (w >= t) ++level;
        out[static_cast<size_t>(j)] = level;
    }
    return out;
}

TransitionPoints transition_points(const Quantizer& q, double tol) {
    q.validate();
    TransitionPoints tp;
    for (int j = 0; j < q.n_q; ++j) {
        for (double t : q.thresholds[static_cast<size_t>(j)]) {
            const Polynomial g = q.polys[static_cast<size_t>(j)].shifted(-t);
            if (g.is_zero())
                fail(ErrorCode::ZeroPolynomial,
                     "transition_points: analog operator identically equal to a threshold");
            if (g.degree() == 0) continue; // constant offset, never crosses
            const RootList r = real_roots(g);
            tp.roots.insert(tp.roots.end(), r.begin(), r.end());
        }
    }
    std::sort(tp.roots.begin(), tp.roots.end());
    for (size_t i = 1; i < tp.roots.size(); ++i)
        if (tp.roots[i] - tp.roots[i - 1] < tol) tp.repeated = true;
    return tp;
}

namespace {

// Interior sample point for the interval (lo, hi); unbounded ends are probed
// one unit beyond the extreme root, and 0 is used when there are no roots.
double sample_point(double lo, double hi) {
    const bool lo_inf = std::isinf(lo), hi_inf = std::isinf(hi);
    if (lo_inf && hi_inf) return 0.0;
    if (lo_inf) return hi - 1.0;
    if (hi_inf) return lo + 1.0;
    return 0.5 * (lo + hi);
}

} // namespace

AssociatedCode associated_code(const Quantizer& q) {
    const TransitionPoints tp = transition_points(q);
    AssociatedCode code;
    code.boundaries = tp.roots;
    code.repeated_roots = tp.repeated;
    const size_t m = tp.roots.size();
    code.codewords.reserve(m + 1);
    for (size_t i = 0; i <= m; ++i) {
        const double lo = (i == 0) ? -HUGE_VAL : tp.roots[i - 1];
        const double hi = (i == m) ? HUGE_VAL : tp.roots[i];
        code.codewords.push_back(quantize(q, sample_point(lo, hi)));
    }
    return code;
}

int code_size(const AssociatedCode& c) {
    std::vector<Codeword> seen(c.codewords);
    std::sort(seen.begin(), seen.end());
    seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
    return static_cast<int>(seen.size());
}

std::vector<int> transition_counts(const AssociatedCode& c) {
    std::vector<int> counts(static_cast<size_t>(c.width()), 0);
    for (size_t i = 1; i < c.codewords.size(); ++i)
        for (size_t j = 0; j < counts.size(); ++j)
            if (c.codewords[i][j] != c.codewords[i - 1][j]) ++counts[j];
    return counts;
}

Partition partition(const Quantizer& q) {
    TransitionPoints tp = transition_points(q);
    tp.roots.erase(std::unique(tp.roots.begin(), tp.roots.end(),
                               [](double a, double b) { return b - a < 1e-12; }),
                   tp.roots.end());
    Partition part;
    const size_t m = tp.roots.size();
    for (size_t i = 0; i <= m; ++i) {
        const double lo = (i == 0) ? -HUGE_VAL : tp.roots[i - 1];
        const double hi = (i == m) ? HUGE_VAL : tp.roots[i];
        Codeword label = quantize(q, sample_point(lo, hi));
        if (!part.labels.empty() && part.labels.back() == label) {
            part.intervals.back().hi = hi; // degenerate touch point, merge
        } else {
            part.intervals.push_back({lo, hi});
            part.labels.push_back(std::move(label));
        }
    }
    return part;
}

} // namespace qadc
