#pragma once

#include <cstdint>
#include <vector>

#include "quantizer.hpp"

namespace qadc {

/// Standard reflected binary Gray sequence, all 2^n codewords, consecutive
/// (and wrap-around) Hamming distance one. Not closed.
AssociatedCode reflected_gray(int n);

/// Cyclic binary Gray code over all 2^n codewords, returned closed (first
/// codeword appended) so the linear transition counts equal the cyclic ones.
/// Every per-position count lies in {2*floor(2^n/2n), 2*ceil(2^n/2n)}.
AssociatedCode balanced_gray(int n);

/// Mask form of balanced_gray without the closing repeat; bit j of element i
/// is coordinate j of codeword i. First element is always 0.
std::vector<std::uint32_t> balanced_gray_masks(int n);

} // namespace qadc
