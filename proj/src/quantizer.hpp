#pragma once

#include <vector>

#include "polynomial.hpp"

namespace qadc {

using Codeword = std::vector<int>;

/// Ordered sequence of quantizer outputs across the partition intervals, in
/// increasing order of the transition points. boundaries[i] separates
/// codewords[i] and codewords[i+1]; synthetic codes built directly from
/// combinatorics carry an empty boundary list.
struct AssociatedCode {
    std::vector<Codeword> codewords;
    RootList boundaries;
    bool repeated_roots = false;

    int width() const noexcept { return codewords.empty() ? 0 : static_cast<int>(codewords[0].size()); }
};

/// Analog front-end + ADC bank: n_q polynomials of degree <= delta, each
/// followed by an (ell-1)-threshold comparator.
struct Quantizer {
    int n_q = 0;
    int ell = 2;
    int delta = 2;
    std::vector<Polynomial> polys;              // size n_q
    std::vector<std::vector<double>> thresholds; // n_q rows of ell-1 entries

    void validate() const;
};

struct Interval {
    double lo; // -inf encoded as -HUGE_VAL
    double hi; // +inf encoded as +HUGE_VAL
};

struct Partition {
    std::vector<Interval> intervals;
    std::vector<Codeword> labels; // one per interval, adjacent labels differ
};

struct TransitionPoints {
    RootList roots;
    bool repeated = false; // two roots within tol: Prop-2 precondition violated
};

/// Output level of ADC j is the number of thresholds its polynomial value
/// meets or exceeds; coincides with the interval rule for sorted rows and
/// reproduces unsorted rows (Example-1 style) as printed.
Codeword quantize(const Quantizer& q, double y);

/// Sorted multiset of real roots of f_j - t(j,k) over all j, k.
TransitionPoints transition_points(const Quantizer& q, double tol = 1e-7);

AssociatedCode associated_code(const Quantizer& q);

/// Number of distinct codewords.
int code_size(const AssociatedCode& c);

/// Per-position count of value changes between consecutive codewords.
std::vector<int> transition_counts(const AssociatedCode& c);

/// Intervals between consecutive distinct transition points plus the two
/// unbounded ends; runs with equal labels are merged.
Partition partition(const Quantizer& q);

} // namespace qadc
