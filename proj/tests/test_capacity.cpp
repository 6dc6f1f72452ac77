#include "doctest.h"

#include <cmath>
#include <random>

#include "capacity.hpp"

using namespace qadc;

namespace {

// Frozen standard-normal CDF values.
constexpr double kPhiMinus1 = 0.15865525393145707;

double mutual_information_bits(const ChannelMatrix& m, const std::vector<double>& p) {
    const size_t J = m.rows[0].size();
    std::vector<double> q(J, 0.0);
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = 0; j < J; ++j) q[j] += p[i] * m.rows[i][j];
    double mi = 0.0;
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = 0; j < J; ++j)
            if (p[i] > 0 && m.rows[i][j] > 0 && q[j] > 0)
                mi += p[i] * m.rows[i][j] * std::log2(m.rows[i][j] / q[j]);
    return mi;
}

ChannelMatrix matrix_from(std::vector<std::vector<double>> rows) {
    ChannelMatrix m;
    m.num_outputs = static_cast<int>(rows[0].size());
    m.rows = std::move(rows);
    return m;
}

} // namespace

TEST_CASE("output labelings") {
    const OutputLabeling merged =
        effective_thresholds_to_outputs({-1.0, 0.0, 1.0, 2.0}, LabelingForm::MergedEnds);
    CHECK(merged.interval_labels == std::vector<int>{0, 1, 2, 3, 0});
    CHECK(merged.num_outputs == 4);

    const OutputLabeling single = effective_thresholds_to_outputs({0.0}, LabelingForm::Bounded);
    CHECK(single.interval_labels == std::vector<int>{0, 1});
    CHECK(single.num_outputs == 2);

    const OutputLabeling bounded =
        effective_thresholds_to_outputs({-1.0, 0.0, 1.0}, LabelingForm::Bounded);
    CHECK(bounded.interval_labels == std::vector<int>{0, 1, 2, 3});
    CHECK(bounded.num_outputs == 4);

    CHECK_THROWS_AS(
        (void)effective_thresholds_to_outputs({1.0, -1.0}, LabelingForm::Bounded), Error);
}

TEST_CASE("channel matrix golden values") {
    const ChannelSpec spec{1.0, 1.0};
    const OutputLabeling lab = effective_thresholds_to_outputs({0.0}, LabelingForm::Bounded);

    const ChannelMatrix m0 = channel_matrix(spec, {0.0}, {0.0}, lab);
    CHECK(m0.rows[0][0] == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(m0.rows[0][1] == doctest::Approx(0.5).epsilon(1e-14));

    const ChannelMatrix m1 = channel_matrix(spec, {1.0}, {0.0}, lab);
    CHECK(m1.rows[0][0] == doctest::Approx(kPhiMinus1).epsilon(1e-12));
    CHECK(m1.rows[0][1] == doctest::Approx(1.0 - kPhiMinus1).epsilon(1e-12));

    const OutputLabeling merged =
        effective_thresholds_to_outputs({-1.0, 1.0}, LabelingForm::MergedEnds);
    const ChannelMatrix m2 = channel_matrix(spec, {0.0}, {-1.0, 1.0}, merged);
    CHECK(m2.rows[0][0] == doctest::Approx(2.0 * kPhiMinus1).epsilon(1e-12));
}

TEST_CASE("channel matrix rows sum to one") {
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (int trial = 0; trial < 50; ++trial) {
        RootList t;
        for (int k = 0; k < 1 + trial % 5; ++k) t.push_back(u(rng));
        std::sort(t.begin(), t.end());
        t.erase(std::unique(t.begin(), t.end()), t.end());
        const auto lab = effective_thresholds_to_outputs(t, LabelingForm::Bounded);
        std::vector<double> inputs;
        for (int k = 0; k < 9; ++k) inputs.push_back(u(rng));
        const ChannelMatrix m = channel_matrix({u(rng), 1.0}, inputs, t, lab);
        for (const auto& row : m.rows) {
            double sum = 0.0;
            for (double v : row) {
                CHECK(v >= 0.0);
                sum += v;
            }
            CHECK(std::abs(sum - 1.0) <= 1e-12);
        }
    }
}

TEST_CASE("blahut-arimoto: noiseless and degenerate channels") {
    const auto ident = matrix_from({{1.0, 0.0}, {0.0, 1.0}});
    const CapacityResult r = blahut_arimoto_constrained(ident, {-1.0, 1.0}, 1.0);
    CHECK(r.converged);
    CHECK(r.rate_bits == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(r.input_distribution[0] == doctest::Approx(0.5).epsilon(1e-6));

    const auto flat = matrix_from({{0.3, 0.7}, {0.3, 0.7}, {0.3, 0.7}});
    const CapacityResult rf = blahut_arimoto_constrained(flat, {-1.0, 0.0, 1.0}, 1.0);
    CHECK(rf.rate_bits == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("blahut-arimoto: binary symmetric channel closed form") {
    const double eps = kPhiMinus1;
    const auto bsc = matrix_from({{1.0 - eps, eps}, {eps, 1.0 - eps}});
    BAOptions opts;
    opts.tol_bits = 1e-9;
    const CapacityResult r = blahut_arimoto_constrained(bsc, {-1.0, 1.0}, 1.0, opts);
    CHECK(r.converged);
    CHECK(r.rate_bits == doctest::Approx(1.0 - binary_entropy(eps)).epsilon(1e-7));
    CHECK(r.power_used <= 1.0 + 1e-9);
}

TEST_CASE("blahut-arimoto: error paths") {
    const auto ident = matrix_from({{1.0, 0.0}, {0.0, 1.0}});
    CHECK_THROWS_AS(
        (void)blahut_arimoto_constrained(ident, {-2.0, 2.0}, 1.0), Error); // no feasible input
    const auto bad = matrix_from({{0.7, 0.2}, {0.5, 0.5}});
    CHECK_THROWS_AS((void)blahut_arimoto_constrained(bad, {-1.0, 1.0}, 1.0), Error);
}

TEST_CASE("blahut-arimoto: per-iteration mutual information is non-decreasing") {
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> u(0.05, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
        const int K = 2 + trial % 4, J = 2 + (trial / 2) % 3;
        std::vector<std::vector<double>> rows(static_cast<size_t>(K),
                                              std::vector<double>(static_cast<size_t>(J)));
        for (auto& row : rows) {
            double sum = 0.0;
            for (double& v : row) {
                v = u(rng);
                sum += v;
            }
            for (double& v : row) v /= sum;
        }
        std::vector<double> inputs;
        for (int i = 0; i < K; ++i) inputs.push_back(-1.0 + 2.0 * i / (K - 1.0));
        std::vector<double> trace;
        // generous power budget keeps the multiplier at zero
        (void)blahut_arimoto_constrained(matrix_from(rows), inputs, 100.0, {}, &trace);
        for (size_t i = 1; i < trace.size(); ++i) CHECK(trace[i] >= trace[i - 1] - 1e-12);
    }
}

TEST_CASE("blahut-arimoto: power constraint honored with active multiplier") {
    // Noisier midpoint, perfect extremes: unconstrained optimum spends more
    // power than the budget allows.
    const auto m = matrix_from({{0.98, 0.02}, {0.6, 0.4}, {0.02, 0.98}});
    const CapacityResult r = blahut_arimoto_constrained(m, {-2.0, 0.0, 2.0}, 1.5);
    CHECK(r.power_used <= 1.5 + 1e-9);
    CHECK(r.multiplier > 0.0);
    CHECK(r.rate_bits > 0.0);
}

TEST_CASE("optimize_thresholds: one-bit channel matches the closed form") {
    const ChannelSpec spec{1.0, 1.0};
    const InputGrid grid = InputGrid::symmetric(0.1, 4.0);
    ThresholdSearchOptions opts;
    opts.threads = 1;
    const CapacityResult r = optimize_thresholds(spec, 2, grid, opts);
    REQUIRE(r.thresholds.size() == 1);
    CHECK(r.thresholds[0] == doctest::Approx(0.0));
    const double oracle = 1.0 - binary_entropy(kPhiMinus1);
    CHECK(r.rate_bits == doctest::Approx(oracle).epsilon(1e-4));
    CHECK(r.power_used <= 1.0 + 1e-9);
    CHECK(r.rate_bits <= 1.0);
}

TEST_CASE("gamma bounds and high-SNR capacity") {
    CHECK(gamma_bounds(2, 2, 2) == std::pair<int, int>{4, 4});
    CHECK(gamma_bounds(1, 2, 1) == std::pair<int, int>{1, 2});
    CHECK(gamma_bounds(3, 2, 1) == std::pair<int, int>{3, 4});
    CHECK(gamma_bounds(2, 3, 2) == std::pair<int, int>{8, 8});
    CHECK(gamma_bounds(4, 2, 2) == std::pair<int, int>{8, 8});

    CHECK(high_snr_capacity(2, 2, 2).first == doctest::Approx(2.0));
    CHECK(high_snr_capacity(1, 2, 2).first == doctest::Approx(1.0));
    CHECK(high_snr_capacity(4, 2, 2).first == doctest::Approx(3.0));
    CHECK(high_snr_capacity(4, 2, 2).second == doctest::Approx(3.0));
}

TEST_CASE("capacity depends on (h, P) only through h^2 P") {
    ThresholdSearchOptions opts;
    opts.threads = 1;

    const ChannelSpec a{1.0, 4.0};
    const InputGrid ga = InputGrid::symmetric(0.1 * 2.0, 4.0 * 2.0);
    const CapacityResult ra = optimize_thresholds(a, 3, ga, opts);

    const ChannelSpec b{2.0, 1.0};
    const InputGrid gb = InputGrid::symmetric(0.1, 4.0);
    const CapacityResult rb = optimize_thresholds(b, 3, gb, opts);

    CHECK(ra.rate_bits == doctest::Approx(rb.rate_bits).epsilon(1e-9));
}

TEST_CASE("symmetric grid admits a symmetric optimal distribution") {
    const ChannelSpec spec = ChannelSpec::from_snr_db(10.0);
    const double sq = std::sqrt(spec.power);
    const InputGrid grid = InputGrid::symmetric(0.1 * sq, 4.0 * sq);
    ThresholdSearchOptions opts;
    opts.threads = 1;
    const CapacityResult r = optimize_thresholds(spec, 4, grid, opts);

    const auto lab = effective_thresholds_to_outputs(r.thresholds, LabelingForm::Bounded);
    const ChannelMatrix m = channel_matrix(spec, grid.points, r.thresholds, lab);
    std::vector<double> sym(r.input_distribution);
    for (size_t i = 0; i < sym.size(); ++i)
        sym[i] = 0.5 * (r.input_distribution[i] +
                        r.input_distribution[sym.size() - 1 - i]);
    CHECK(mutual_information_bits(m, sym) == doctest::Approx(r.rate_bits).epsilon(1e-6));
}

TEST_CASE("rate is non-decreasing in power on a fixed grid") {
    const InputGrid grid = InputGrid::symmetric(0.1, 4.0);
    const auto lab = effective_thresholds_to_outputs({0.0}, LabelingForm::Bounded);
    double prev = 0.0;
    for (double P : {0.25, 0.5, 1.0, 2.0, 4.0}) {
        const ChannelMatrix m = channel_matrix({1.0, P}, grid.points, {0.0}, lab);
        const CapacityResult r = blahut_arimoto_constrained(m, grid.points, P);
        CHECK(r.rate_bits >= prev - 1e-9);
        prev = r.rate_bits;
    }
}

TEST_CASE("rate_curve basics") {
    CurveOptions opts;
    opts.search.threads = 1;
    const auto curve = rate_curve({0.0, 10.0, 20.0}, 1.0, 1, 2, 2, opts);
    REQUIRE(curve.size() == 3);
    CHECK(curve[0].gamma_lower == 2);
    CHECK(curve[0].gamma_upper == 2);
    CHECK(curve[0].rate_bits_lower == curve[0].rate_bits_upper);
    CHECK(curve[0].rate_bits_upper > 0.0);
    CHECK(curve[2].rate_bits_upper <= 1.0);
    CHECK(curve[0].rate_bits_upper <= curve[1].rate_bits_upper);
    CHECK(curve[1].rate_bits_upper <= curve[2].rate_bits_upper);

    // single-comparator bound pair: lower gamma is 1, upper matches delta=2
    const auto odd = rate_curve({10.0}, 1.0, 1, 2, 1, opts);
    CHECK(odd[0].gamma_lower == 1);
    CHECK(odd[0].gamma_upper == 2);
    CHECK(odd[0].rate_bits_lower == 0.0);
    CHECK(odd[0].rate_bits_upper == doctest::Approx(curve[1].rate_bits_upper).epsilon(1e-12));

    CHECK_THROWS_AS((void)rate_curve({}, 1.0, 1, 2, 2, opts), Error);
}
