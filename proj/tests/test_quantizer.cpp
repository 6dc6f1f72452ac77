#include "doctest.h"

#include <cmath>
#include <random>

#include "quantizer.hpp"

using namespace qadc;

namespace {

// Example quantizer from the associated-code walkthrough: f1 = y^2 + 2y with
// thresholds (3, 0), f2 = y^2 + 3y with thresholds (10, 18).
Quantizer example_quantizer() {
    Quantizer q;
    q.n_q = 2;
    q.ell = 3;
    q.delta = 2;
    q.polys = {Polynomial({0.0, 2.0, 1.0}), Polynomial({0.0, 3.0, 1.0})};
    q.thresholds = {{3.0, 0.0}, {10.0, 18.0}};
    return q;
}

// Quadratic-bank quantizer with 2 n_q distinct outputs: f_j has roots
// (-(n_q-j), j+1) picked so the highest ADC index switches first.
Quantizer two_level_bank(int n_q) {
    Quantizer q;
    q.n_q = n_q;
    q.ell = 2;
    q.delta = 2;
    for (int j = 0; j < n_q; ++j) {
        q.polys.push_back(from_roots({static_cast<double>(-(j + 1)),
                                      static_cast<double>(n_q - j)},
                                     -1.0));
        q.thresholds.push_back({0.0});
    }
    return q;
}

std::vector<Codeword> words(const std::vector<std::vector<int>>& v) { return v; }

} // namespace

TEST_CASE("quantize: worked example points") {
    const Quantizer q = example_quantizer();
    CHECK(quantize(q, -5.5) == Codeword{2, 1});
    CHECK(quantize(q, -1.0) == Codeword{0, 0});
    CHECK(quantize(q, 100.0) == Codeword{2, 2});

    Quantizer far = example_quantizer();
    far.thresholds = {{1e9, 2e9}, {1e9, 2e9}};
    CHECK(quantize(far, 0.0) == Codeword{0, 0});
}

TEST_CASE("transition points: worked example roots") {
    const TransitionPoints tp = transition_points(example_quantizer());
    const RootList expect{-6.0, -5.0, -3.0, -2.0, 0.0, 1.0, 2.0, 3.0};
    REQUIRE(tp.roots.size() == expect.size());
    for (size_t i = 0; i < expect.size(); ++i) CHECK(std::abs(tp.roots[i] - expect[i]) <= 1e-8);
    CHECK(!tp.repeated);

    Quantizer single;
    single.n_q = 1;
    single.ell = 2;
    single.delta = 1;
    single.polys = {Polynomial({0.0, 1.0})};
    single.thresholds = {{0.0}};
    const TransitionPoints tps = transition_points(single);
    CHECK(tps.roots == RootList{0.0});

    const TransitionPoints tpb = transition_points(two_level_bank(3));
    const RootList expect_b{-3.0, -2.0, -1.0, 1.0, 2.0, 3.0};
    REQUIRE(tpb.roots.size() == 6);
    for (size_t i = 0; i < 6; ++i) CHECK(std::abs(tpb.roots[i] - expect_b[i]) <= 1e-8);
}

TEST_CASE("associated code: worked example sequence") {
    const AssociatedCode c = associated_code(example_quantizer());
    CHECK(c.codewords == words({{2, 2}, {2, 1}, {2, 0}, {1, 0}, {0, 0},
                                {1, 0}, {2, 0}, {2, 1}, {2, 2}}));
    CHECK(code_size(c) == 5);
    CHECK(transition_counts(c) == std::vector<int>{4, 4});
    CHECK(!c.repeated_roots);
}

TEST_CASE("associated code: single comparator and quadratic bank") {
    Quantizer single;
    single.n_q = 1;
    single.ell = 2;
    single.delta = 1;
    single.polys = {Polynomial({0.0, 1.0})};
    single.thresholds = {{0.0}};
    const AssociatedCode c1 = associated_code(single);
    CHECK(c1.codewords == words({{0}, {1}}));
    CHECK(code_size(c1) == 2);
    CHECK(transition_counts(c1) == std::vector<int>{1});

    const AssociatedCode c3 = associated_code(two_level_bank(3));
    CHECK(c3.codewords == words({{0, 0, 0}, {0, 0, 1}, {0, 1, 1}, {1, 1, 1},
                                 {1, 1, 0}, {1, 0, 0}, {0, 0, 0}}));
    CHECK(code_size(c3) == 6);
    CHECK(transition_counts(c3) == std::vector<int>{2, 2, 2});
}

TEST_CASE("quantizer with no transition points yields one codeword") {
    Quantizer q;
    q.n_q = 1;
    q.ell = 2;
    q.delta = 2;
    q.polys = {Polynomial({1.0, 0.0, 1.0})}; // y^2 + 1, never crosses 0
    q.thresholds = {{0.0}};
    const AssociatedCode c = associated_code(q);
    CHECK(c.codewords == words({{1}}));
    CHECK(code_size(c) == 1);
}

TEST_CASE("partition: worked example intervals") {
    const Partition p = partition(example_quantizer());
    REQUIRE(p.intervals.size() == 9);
    CHECK(std::isinf(p.intervals.front().lo));
    CHECK(p.intervals.front().hi == doctest::Approx(-6.0));
    CHECK(std::isinf(p.intervals.back().hi));
    CHECK(p.labels.front() == Codeword{2, 2});
    for (size_t i = 1; i < p.labels.size(); ++i) CHECK(p.labels[i] != p.labels[i - 1]);

    Quantizer single;
    single.n_q = 1;
    single.ell = 2;
    single.delta = 1;
    single.polys = {Polynomial({0.0, 1.0})};
    single.thresholds = {{0.0}};
    const Partition ps = partition(single);
    REQUIRE(ps.intervals.size() == 2);
    CHECK(ps.intervals[0].hi == doctest::Approx(0.0));

    // quadratic bank on 2 ADCs: 5 intervals, ends share a label
    const Partition pb = partition(two_level_bank(2));
    REQUIRE(pb.intervals.size() == 5);
    CHECK(pb.labels.front() == pb.labels.back());
    std::vector<Codeword> labels = pb.labels;
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    CHECK(labels.size() == 4);
}

TEST_CASE("partition size equals code size for random quantizers") {
    std::mt19937 rng(21);
    std::uniform_real_distribution<double> shift(-2.0, 2.0);
    std::uniform_int_distribution<int> degree(1, 4);
    std::uniform_int_distribution<int> nq(1, 3);
    std::uniform_int_distribution<int> levels(2, 3);
    for (int trial = 0; trial < 100; ++trial) {
        Quantizer q;
        q.n_q = nq(rng);
        q.ell = levels(rng);
        q.delta = 4;
        for (int j = 0; j < q.n_q; ++j) {
            const int d = degree(rng);
            RootList roots;
            for (int k = 0; k < d; ++k) roots.push_back(shift(rng) + 5.0 * k);
            std::sort(roots.begin(), roots.end());
            q.polys.push_back(from_roots(roots, trial % 2 ? 1.0 : -1.0));
            std::vector<double> row;
            for (int k = 0; k < q.ell - 1; ++k) row.push_back(shift(rng) * 0.1);
            q.thresholds.push_back(row);
        }
        const TransitionPoints tp = transition_points(q);
        if (tp.repeated) continue;
        const Partition p = partition(q);
        std::vector<Codeword> labels = p.labels;
        std::sort(labels.begin(), labels.end());
        labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
        CHECK(static_cast<int>(labels.size()) == code_size(associated_code(q)));

        // piecewise constancy inside an interval
        for (const auto& iv : p.intervals) {
            if (std::isinf(iv.lo) || std::isinf(iv.hi)) continue;
            const double a = iv.lo + 0.25 * (iv.hi - iv.lo);
            const double b = iv.lo + 0.75 * (iv.hi - iv.lo);
            CHECK(quantize(q, a) == quantize(q, b));
        }
    }
}

TEST_CASE("full-root quantizers satisfy the structural code properties") {
    // Polynomials with well-separated roots and near-zero thresholds cross
    // every level the full delta times.
    std::mt19937 rng(33);
    std::uniform_real_distribution<double> jitter(-0.4, 0.4);
    std::uniform_real_distribution<double> thr(-0.3, 0.3);
    std::uniform_int_distribution<int> nq(1, 3);
    std::uniform_int_distribution<int> levels(2, 3);
    std::uniform_int_distribution<int> degree(2, 4);
    int checked = 0;
    for (int trial = 0; trial < 400 && checked < 200; ++trial) {
        Quantizer q;
        q.n_q = nq(rng);
        q.ell = levels(rng);
        q.delta = degree(rng);
        for (int j = 0; j < q.n_q; ++j) {
            RootList roots;
            for (int k = 0; k < q.delta; ++k)
                roots.push_back(-3.0 * q.delta / 2.0 + 3.0 * k + jitter(rng));
            q.polys.push_back(from_roots(roots, trial % 2 ? 1.0 : -1.0));
            std::vector<double> row;
            for (int k = 0; k < q.ell - 1; ++k) row.push_back(thr(rng));
            q.thresholds.push_back(row);
        }
        const TransitionPoints tp = transition_points(q);
        if (tp.repeated) continue;
        if (static_cast<int>(tp.roots.size()) != (q.ell - 1) * q.delta * q.n_q) continue;
        ++checked;
        const AssociatedCode c = associated_code(q);

        // first codeword entries all extreme
        for (int v : c.codewords[0]) CHECK((v == 0 || v == q.ell - 1));
        // consecutive codewords differ in one position by one
        for (size_t i = 1; i < c.codewords.size(); ++i) {
            int l1 = 0;
            for (size_t j = 0; j < c.codewords[i].size(); ++j)
                l1 += std::abs(c.codewords[i][j] - c.codewords[i - 1][j]);
            CHECK(l1 == 1);
        }
        // per-position transition counts all equal (ell-1)*delta
        CHECK(transition_counts(c) ==
              std::vector<int>(static_cast<size_t>(q.n_q), (q.ell - 1) * q.delta));
    }
    CHECK(checked == 200);
}

TEST_CASE("zero analog operator is rejected") {
    Quantizer q;
    q.n_q = 1;
    q.ell = 2;
    q.delta = 1;
    q.polys = {Polynomial::constant(3.0)};
    q.thresholds = {{3.0}}; // f - t identically zero
    CHECK_THROWS_AS((void)transition_points(q), Error);
}
