#pragma once

#include <utility>
#include <vector>

#include "polynomial.hpp"

namespace qadc {

/// AWGN channel Y = hX + N with unit-variance noise and average input power
/// budget E[X^2] <= P.
struct ChannelSpec {
    double h = 1.0;
    double power = 1.0;

    double snr_db() const;
    static ChannelSpec from_snr_db(double snr_db, double h = 1.0);
};

/// Symmetric candidate mass-point locations k*step for |k*step| <= range.
struct InputGrid {
    std::vector<double> points;
    double step = 0.1;

    static InputGrid symmetric(double step, double range);
};

/// Output labeling for the intervals cut by a sorted threshold vector.
///   Bounded    : m thresholds -> m+1 intervals, all labels distinct.
///   MergedEnds : m thresholds -> m+1 intervals, the two unbounded ends share
///                label 0 (quadratic-operator form), m distinct outputs.
enum class LabelingForm { Bounded, MergedEnds };

struct OutputLabeling {
    std::vector<int> interval_labels; // one per interval, left to right
    int num_outputs = 0;
};

OutputLabeling effective_thresholds_to_outputs(const RootList& thresholds, LabelingForm form);

/// Transition probabilities from each input mass point to each output label.
struct ChannelMatrix {
    std::vector<std::vector<double>> rows; // inputs x outputs
    int num_outputs = 0;
};

ChannelMatrix channel_matrix(const ChannelSpec& spec, const std::vector<double>& inputs,
                             const RootList& thresholds, const OutputLabeling& labeling);

struct BAOptions {
    double tol_bits = 1e-7;
    int max_iter = 10000;
    double multiplier_max = 64.0;
    double multiplier_tol = 1e-8;
};

struct CapacityResult {
    double rate_bits = 0.0;
    std::vector<double> inputs;
    std::vector<double> input_distribution;
    RootList thresholds;
    int iterations = 0;
    bool converged = false;
    double power_used = 0.0;
    double multiplier = 0.0;
};

/// Capacity of a fixed discrete memoryless channel under the average power
/// constraint sum p_i x_i^2 <= P: Blahut-Arimoto with the Lagrangian update
/// p_i <- p_i exp(D_i - s x_i^2), the multiplier s >= 0 found by bisection.
/// mi_trace, when given, receives the mutual information at each iteration of
/// the final multiplier run.
CapacityResult blahut_arimoto_constrained(const ChannelMatrix& m, const std::vector<double>& inputs,
                                          double P, const BAOptions& opts = {},
                                          std::vector<double>* mi_trace = nullptr);

struct ThresholdSearchOptions {
    double step_scale = 0.1;  // times h*sqrt(P)
    double range_scale = 3.0; // times h*sqrt(P)
    BAOptions ba;
    double coarse_tol_bits = 1e-4;
    int coarse_max_iter = 2000;
    double refine_margin_bits = 5e-3;
    int threads = 0; // 0: hardware concurrency
    LabelingForm form = LabelingForm::Bounded;
};

/// Brute-force search over strictly increasing symmetric threshold vectors on
/// the threshold grid; returns the best constrained-BA result. Ties break
/// toward the lexicographically smallest vector, so the outcome does not
/// depend on thread scheduling.
CapacityResult optimize_thresholds(const ChannelSpec& spec, int gamma, const InputGrid& grid,
                                   const ThresholdSearchOptions& opts = {});

/// (lower, upper) for the maximum number of distinguishable outputs; the two
/// coincide for even delta.
std::pair<int, int> gamma_bounds(int n_q, int ell, int delta);

/// (log2 lower, log2 upper) of gamma_bounds.
std::pair<double, double> high_snr_capacity(int n_q, int ell, int delta);

struct RatePoint {
    double snr_db = 0.0;
    double rate_bits_lower = 0.0;
    double rate_bits_upper = 0.0;
    int gamma_lower = 0;
    int gamma_upper = 0;
    RootList thresholds; // argmax of the upper-bound run
};

struct CurveOptions {
    double input_step_scale = 0.1; // times sqrt(P)
    double input_range_scale = 4.0;
    ThresholdSearchOptions search;
};

std::vector<RatePoint> rate_curve(const std::vector<double>& snr_db_list, double h, int n_q,
                                  int ell, int delta, const CurveOptions& opts = {});

double normal_cdf(double x);
double binary_entropy(double p);

} // namespace qadc
