#pragma once

#include <string>

#include "capacity.hpp"
#include "code.hpp"

namespace qadc {

/// {n_q, ell, delta, polys: [[coeffs low-to-high]], thresholds: [[row]]}
std::string quantizer_to_json(const Quantizer& q, int indent = -1);
Quantizer quantizer_from_json(const std::string& text);

/// Array of integer arrays, codeword entries in position order.
std::string code_to_json(const AssociatedCode& c, int indent = -1);
AssociatedCode code_from_json(const std::string& text);

/// {"item1": {"pass":.., "counterexample":..}, ..., "item6": {...}}
std::string report_to_json(const PropertyReport& r, int indent = -1);

std::string capacity_result_to_json(const CapacityResult& r, int indent = -1);

/// CSV with header snr_db,rate_bits_lower,rate_bits_upper,gamma,thresholds_json
std::string rate_table_csv(const std::vector<RatePoint>& points);

/// Experiment description for rate curves; parsed from JSON with defaults.
struct ExperimentConfig {
    int n_q = 1;
    int ell = 2;
    int delta = 2;
    double h = 1.0;
    std::vector<double> snr_db;
    CurveOptions curve;

    void validate() const;
};

ExperimentConfig config_from_json(const std::string& text);

} // namespace qadc
