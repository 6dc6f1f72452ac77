#pragma once

#include <array>

#include "gray.hpp"
#include "quantizer.hpp"

namespace qadc {

/// Requested per-position transition counts for code construction (ell = 2:
/// all counts even, max-min <= 2).
struct TransitionSpec {
    int n_q = 1;
    std::vector<int> kappas;
    int ell = 2;
};

struct PropertyCheck {
    bool pass = true;
    int counterexample = -1; // first offending index, -1 when the item passes
};

/// Outcome of checking the six structural properties of an associated code.
struct PropertyReport {
    std::array<PropertyCheck, 6> items;

    bool all_pass() const {
        for (const auto& it : items)
            if (!it.pass) return false;
        return true;
    }
    bool pass_1_to_5() const {
        for (int i = 0; i < 5; ++i)
            if (!items[static_cast<size_t>(i)].pass) return false;
        return true;
    }
};

/// Builds a closed binary code with exactly the requested transition counts,
/// starting and ending at the all-zero codeword, with
/// code_size == min(2^n_q, sum kappas).
AssociatedCode construct_code(const TransitionSpec& spec);

/// Zero-threshold quantizer whose associated code reproduces `code` with the
/// given strictly increasing transition points (ell = 2).
Quantizer synthesize_quantizer(const AssociatedCode& code, const RootList& roots);

/// Quantizer of n_q quadratics with zero thresholds separating the 2n_q+1
/// intervals of the sorted thresholds into 2n_q distinct outputs (the two
/// unbounded ends merge).
Quantizer synthesize_quantizer_theorem1(const RootList& sorted_thresholds);

PropertyReport validate_properties(const AssociatedCode& code, int ell, int delta, int n_q);

struct MaxCodeResult {
    int gamma = 0;
    AssociatedCode witness;
};

/// Exact maximum code size over all codes satisfying structural properties
/// 1-5, by backtracking over transition interleavings. Requires
/// (ell-1)*delta*n_q <= 16.
MaxCodeResult search_max_code(int n_q, int ell, int delta);

} // namespace qadc
