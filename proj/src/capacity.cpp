#include "capacity.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <thread>

#include "error.hpp"

namespace qadc {

namespace {
constexpr double kLn2 = 0.6931471805599453;
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

double binary_entropy(double p) {
    if (p <= 0.0 || p >= 1.0) return 0.0;
    return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

double ChannelSpec::snr_db() const { return 10.0 * std::log10(h * h * power); }

ChannelSpec ChannelSpec::from_snr_db(double snr_db, double h) {
    ChannelSpec s;
    s.h = h;
    s.power = std::pow(10.0, snr_db / 10.0) / (h * h);
    return s;
}

InputGrid InputGrid::symmetric(double step, double range) {
    if (!(step > 0.0) || !(range >= 0.0))
        fail(ErrorCode::InvalidArgument, "input grid: step must be positive");
    InputGrid g;
    g.step = step;
    const int k = static_cast<int>(std::floor(range / step + 1e-9));
    for (int i = -k; i <= k; ++i) g.points.push_back(i * step);
    return g;
}

OutputLabeling effective_thresholds_to_outputs(const RootList& t, LabelingForm form) {
    for (size_t i = 1; i < t.size(); ++i)
        if (!(t[i] > t[i - 1]))
            fail(ErrorCode::UnsortedInput, "thresholds must be strictly increasing");
    OutputLabeling lab;
    const int m = static_cast<int>(t.size());
    if (form == LabelingForm::Bounded) {
        for (int i = 0; i <= m; ++i) lab.interval_labels.push_back(i);
        lab.num_outputs = m + 1;
    } else {
        if (m < 2)
            fail(ErrorCode::InvalidArgument, "merged labeling needs at least two thresholds");
        lab.interval_labels.push_back(0);
        for (int i = 1; i < m; ++i) lab.interval_labels.push_back(i);
        lab.interval_labels.push_back(0);
        lab.num_outputs = m;
    }
    return lab;
}

ChannelMatrix channel_matrix(const ChannelSpec& spec, const std::vector<double>& inputs,
                             const RootList& t, const OutputLabeling& lab) {
    if (lab.interval_labels.size() != t.size() + 1)
        fail(ErrorCode::LengthMismatch, "labeling must cover every threshold interval");
    ChannelMatrix m;
    m.num_outputs = lab.num_outputs;
    m.rows.reserve(inputs.size());
    std::vector<double> cdf(t.size());
    for (double x : inputs) {
        const double mu = spec.h * x;
        for (size_t k = 0; k < t.size(); ++k) cdf[k] = normal_cdf(t[k] - mu);
        std::vector<double> row(static_cast<size_t>(lab.num_outputs), 0.0);
        for (size_t i = 0; i <= t.size(); ++i) {
            const double lo = (i == 0) ? 0.0 : cdf[i - 1];
            const double hi = (i == t.size()) ? 1.0 : cdf[i];
            row[static_cast<size_t>(lab.interval_labels[i])] += hi - lo;
        }
        m.rows.push_back(std::move(row));
    }
    return m;
}

namespace {

struct BAFixed {
    double mi_bits = 0.0;
    double gap_bits = 0.0;
    double cost = 0.0;
    int iterations = 0;
    bool converged = false;
};

// One Blahut-Arimoto fixed-multiplier solve, warm-started from p.
BAFixed ba_fixed(const std::vector<std::vector<double>>& w,
                 const std::vector<std::vector<double>>& logw, const std::vector<double>& costs,
                 double s, double tol_bits, int max_iter, std::vector<double>& p,
                 std::vector<double>* trace) {
    const size_t K = w.size();
    const size_t J = w.empty() ? 0 : w[0].size();
    std::vector<double> q(J), d(K), score(K);
    BAFixed out;
    for (int it = 0; it < max_iter; ++it) {
        ++out.iterations;
        std::fill(q.begin(), q.end(), 0.0);
        for (size_t i = 0; i < K; ++i) {
            if (p[i] == 0.0) continue;
            for (size_t m = 0; m < J; ++m) q[m] += p[i] * w[i][m];
        }
        for (size_t m = 0; m < J; ++m) q[m] = std::max(q[m], 1e-300);

        double mi = 0.0, mean_score = 0.0, max_score = -HUGE_VAL;
        for (size_t i = 0; i < K; ++i) {
            double di = 0.0;
            for (size_t m = 0; m < J; ++m)
                if (w[i][m] > 0.0) di += w[i][m] * (logw[i][m] - std::log(q[m]));
            d[i] = di;
            score[i] = di - s * costs[i];
            mi += p[i] * di;
            mean_score += p[i] * score[i];
            max_score = std::max(max_score, score[i]);
        }
        out.mi_bits = mi / kLn2;
        out.gap_bits = (max_score - mean_score) / kLn2;
        if (trace) trace->push_back(out.mi_bits);
        if (out.gap_bits < tol_bits) {
            out.converged = true;
            break;
        }
        double z = 0.0;
        for (size_t i = 0; i < K; ++i) {
            p[i] *= std::exp(score[i] - max_score);
            z += p[i];
        }
        for (size_t i = 0; i < K; ++i) p[i] /= z;
    }
    out.cost = 0.0;
    for (size_t i = 0; i < K; ++i) out.cost += p[i] * costs[i];
    return out;
}

} // namespace

CapacityResult blahut_arimoto_constrained(const ChannelMatrix& m, const std::vector<double>& inputs,
                                          double P, const BAOptions& opts,
                                          std::vector<double>* mi_trace) {
    const size_t K = m.rows.size();
    if (K == 0 || inputs.size() != K)
        fail(ErrorCode::LengthMismatch, "blahut_arimoto: inputs must match matrix rows");
    if (!(P > 0.0)) fail(ErrorCode::InvalidArgument, "blahut_arimoto: power must be positive");
    for (const auto& row : m.rows) {
        double sum = 0.0;
        for (double v : row) {
            if (v < -1e-12) fail(ErrorCode::NonStochasticMatrix, "negative transition probability");
            sum += v;
        }
        if (std::abs(sum - 1.0) > 1e-9)
            fail(ErrorCode::NonStochasticMatrix, "matrix row does not sum to one");
    }

    std::vector<double> costs(K);
    double min_cost = HUGE_VAL;
    for (size_t i = 0; i < K; ++i) {
        costs[i] = inputs[i] * inputs[i];
        min_cost = std::min(min_cost, costs[i]);
    }
    if (min_cost > P)
        fail(ErrorCode::NoFeasibleInput, "no input point satisfies the power budget");

    // Outputs that no input can produce are dropped up front.
    const size_t J0 = m.rows[0].size();
    std::vector<char> live(J0, 0);
    for (const auto& row : m.rows)
        for (size_t j = 0; j < J0; ++j)
            if (row[j] > 0.0) live[j] = 1;
    std::vector<std::vector<double>> w(K), logw(K);
    for (size_t i = 0; i < K; ++i)
        for (size_t j = 0; j < J0; ++j)
            if (live[j]) w[i].push_back(m.rows[i][j]);
    for (size_t i = 0; i < K; ++i) {
        logw[i].resize(w[i].size());
        for (size_t j = 0; j < w[i].size(); ++j)
            logw[i][j] = w[i][j] > 0.0 ? std::log(w[i][j]) : 0.0;
    }

    CapacityResult res;
    res.inputs = inputs;
    std::vector<double> p(K, 1.0 / static_cast<double>(K));

    auto run = [&](double s, std::vector<double>* trace) {
        for (double& v : p) v = std::max(v, 1e-100);
        double z = std::accumulate(p.begin(), p.end(), 0.0);
        for (double& v : p) v /= z;
        return ba_fixed(w, logw, costs, s, opts.tol_bits, opts.max_iter, p, trace);
    };

    BAFixed r = run(0.0, nullptr);
    res.iterations = r.iterations;
    double s_active = 0.0;
    if (r.cost > P + 1e-12) {
        double lo = 0.0, hi = opts.multiplier_max;
        BAFixed r_hi = run(hi, nullptr);
        res.iterations += r_hi.iterations;
        if (r_hi.cost > P)
            fail(ErrorCode::Internal, "blahut_arimoto: multiplier cap too small for budget");
        while (hi - lo > opts.multiplier_tol) {
            const double mid = 0.5 * (lo + hi);
            const BAFixed rm = run(mid, nullptr);
            res.iterations += rm.iterations;
            if (rm.cost > P)
                lo = mid;
            else
                hi = mid;
        }
        s_active = hi;
    }
    r = run(s_active, mi_trace);
    res.iterations += r.iterations;
    res.rate_bits = r.mi_bits;
    res.converged = r.converged;
    res.multiplier = s_active;
    res.input_distribution = p;
    res.power_used = r.cost;
    return res;
}

namespace {

// Strictly increasing symmetric vectors with entries in +- pairs (plus 0 when
// the length is odd): choose floor(length/2) positive grid values.
std::vector<RootList> symmetric_threshold_candidates(int length, double step, double range) {
    const int npos = length / 2;
    const bool with_zero = length % 2 == 1;
    std::vector<double> grid;
    for (double v = step; v <= range + 1e-9 * step; v += step) grid.push_back(v);
    std::vector<RootList> out;
    if (npos == 0) {
        if (with_zero) out.push_back({0.0});
        return out;
    }
    if (static_cast<int>(grid.size()) < npos) return out;
    std::vector<int> idx(static_cast<size_t>(npos));
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        RootList t;
        for (int k = npos - 1; k >= 0; --k) t.push_back(-grid[static_cast<size_t>(idx[static_cast<size_t>(k)])]);
        if (with_zero) t.push_back(0.0);
        for (int k = 0; k < npos; ++k) t.push_back(grid[static_cast<size_t>(idx[static_cast<size_t>(k)])]);
        out.push_back(std::move(t));
        int k = npos - 1;
        while (k >= 0 && idx[static_cast<size_t>(k)] == static_cast<int>(grid.size()) - npos + k) --k;
        if (k < 0) break;
        ++idx[static_cast<size_t>(k)];
        for (int j = k + 1; j < npos; ++j) idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
    }
    return out;
}

} // namespace

CapacityResult optimize_thresholds(const ChannelSpec& spec, int gamma, const InputGrid& grid,
                                   const ThresholdSearchOptions& opts) {
    if (gamma < 2) fail(ErrorCode::InvalidArgument, "optimize_thresholds: gamma must be at least 2");
    const int length = (opts.form == LabelingForm::Bounded) ? gamma - 1 : gamma;
    const double scale = std::abs(spec.h) * std::sqrt(spec.power);
    const auto candidates =
        symmetric_threshold_candidates(length, opts.step_scale * scale, opts.range_scale * scale);
    if (candidates.empty())
        fail(ErrorCode::EmptySearchSpace, "optimize_thresholds: threshold grid has no candidate");

    BAOptions coarse = opts.ba;
    coarse.tol_bits = opts.coarse_tol_bits;
    coarse.max_iter = opts.coarse_max_iter;

    std::vector<double> coarse_rate(candidates.size(), -1.0);
    const unsigned hw = std::thread::hardware_concurrency();
    const int threads = opts.threads > 0 ? opts.threads : static_cast<int>(hw ? hw : 1);
    auto eval_range = [&](size_t begin, size_t end, const BAOptions& ba, std::vector<double>& dst) {
        for (size_t c = begin; c < end; ++c) {
            const auto lab = effective_thresholds_to_outputs(candidates[c], opts.form);
            const auto mat = channel_matrix(spec, grid.points, candidates[c], lab);
            dst[c] = blahut_arimoto_constrained(mat, grid.points, spec.power, ba).rate_bits;
        }
    };
    if (threads <= 1 || candidates.size() < 8) {
        eval_range(0, candidates.size(), coarse, coarse_rate);
    } else {
        std::vector<std::thread> pool;
        const size_t chunk = (candidates.size() + static_cast<size_t>(threads) - 1) / static_cast<size_t>(threads);
        for (int t = 0; t < threads; ++t) {
            const size_t b = static_cast<size_t>(t) * chunk;
            const size_t e = std::min(candidates.size(), b + chunk);
            if (b >= e) break;
            pool.emplace_back(eval_range, b, e, coarse, std::ref(coarse_rate));
        }
        for (auto& th : pool) th.join();
    }

    const double coarse_best = *std::max_element(coarse_rate.begin(), coarse_rate.end());
    CapacityResult best;
    best.rate_bits = -1.0;
    for (size_t c = 0; c < candidates.size(); ++c) {
        if (coarse_rate[c] < coarse_best - opts.refine_margin_bits) continue;
        const auto lab = effective_thresholds_to_outputs(candidates[c], opts.form);
        const auto mat = channel_matrix(spec, grid.points, candidates[c], lab);
        CapacityResult r = blahut_arimoto_constrained(mat, grid.points, spec.power, opts.ba);
        r.thresholds = candidates[c];
        if (r.rate_bits > best.rate_bits + 1e-15 ||
            (std::abs(r.rate_bits - best.rate_bits) <= 1e-15 && r.thresholds < best.thresholds))
            best = std::move(r);
    }
    return best;
}

std::pair<int, int> gamma_bounds(int n_q, int ell, int delta) {
    if (n_q < 1 || ell < 2 || delta < 1)
        fail(ErrorCode::InvalidArgument, "gamma_bounds: parameters must be positive, ell >= 2");
    long ell_pow = 1;
    for (int i = 0; i < n_q && ell_pow < (1L << 30); ++i) ell_pow *= ell;
    const long lin = static_cast<long>(ell - 1) * delta * n_q;
    const int lower = static_cast<int>(std::min(ell_pow, lin));
    const int upper = delta % 2 == 0 ? lower : static_cast<int>(std::min(ell_pow, lin + 1));
    return {lower, upper};
}

std::pair<double, double> high_snr_capacity(int n_q, int ell, int delta) {
    const auto [lo, hi] = gamma_bounds(n_q, ell, delta);
    return {std::log2(static_cast<double>(lo)), std::log2(static_cast<double>(hi))};
}

std::vector<RatePoint> rate_curve(const std::vector<double>& snr_db_list, double h, int n_q,
                                  int ell, int delta, const CurveOptions& opts) {
    if (snr_db_list.empty()) fail(ErrorCode::InvalidArgument, "rate_curve: SNR list is empty");
    std::vector<double> snrs = snr_db_list;
    std::sort(snrs.begin(), snrs.end());
    const auto [glo, ghi] = gamma_bounds(n_q, ell, delta);

    std::vector<RatePoint> out;
    for (double snr : snrs) {
        const ChannelSpec spec = ChannelSpec::from_snr_db(snr, h);
        const double sq = std::sqrt(spec.power);
        const InputGrid grid =
            InputGrid::symmetric(opts.input_step_scale * sq, opts.input_range_scale * sq);
        RatePoint pt;
        pt.snr_db = snr;
        pt.gamma_lower = glo;
        pt.gamma_upper = ghi;
        CapacityResult upper;
        if (ghi >= 2) upper = optimize_thresholds(spec, ghi, grid, opts.search);
        pt.rate_bits_upper = ghi >= 2 ? upper.rate_bits : 0.0;
        pt.thresholds = upper.thresholds;
        if (glo == ghi)
            pt.rate_bits_lower = pt.rate_bits_upper;
        else
            pt.rate_bits_lower =
                glo >= 2 ? optimize_thresholds(spec, glo, grid, opts.search).rate_bits : 0.0;
        out.push_back(std::move(pt));
    }
    return out;
}

} // namespace qadc
