#include "gray.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdlib>
#include <random>

namespace qadc {

namespace {

using Mask = std::uint32_t;

std::vector<Codeword> masks_to_codewords(const std::vector<Mask>& masks, int n) {
    std::vector<Codeword> out;
    out.reserve(masks.size());
    for (Mask g : masks) {
        Codeword w(static_cast<size_t>(n));
        for (int j = 0; j < n; ++j) w[static_cast<size_t>(j)] = (g >> j) & 1u;
        out.push_back(std::move(w));
    }
    return out;
}

// The balanced code is grown two ways at once: reflect-double the (n-1)-bit
// code, then repair the transition counts with 2-opt moves on the cycle.
// Removing the parallel pair (u, u+e_b), (u+e_c, u+e_c+e_b) and inserting the
// two e_c edges trades two b-transitions for two c-transitions. When the pair
// sits on one cycle with aligned orientation the move re-links it into one
// cycle again; opposed orientation splits it, and a pair across two cycles
// merges them. Guiding the choice by the count deficit walks the seed into
// the balanced band.
struct CycleConfig {
    int n = 0, size = 0;
    std::vector<std::array<Mask, 2>> adj;
    std::vector<int> counts;
    std::vector<int> cycle_id;
    std::vector<Mask> next;
    int num_cycles = 0;

    void init(const std::vector<Mask>& seq, int n_) {
        n = n_;
        size = 1 << n;
        adj.assign(static_cast<size_t>(size), {0u, 0u});
        counts.assign(static_cast<size_t>(n), 0);
        std::vector<int> deg(static_cast<size_t>(size), 0);
        for (int i = 0; i < size; ++i) {
            const Mask a = seq[static_cast<size_t>(i)];
            const Mask b = seq[static_cast<size_t>((i + 1) % size)];
            adj[a][static_cast<size_t>(deg[a]++)] = b;
            adj[b][static_cast<size_t>(deg[b]++)] = a;
            ++counts[static_cast<size_t>(std::countr_zero(a ^ b))];
        }
    }

    bool has_edge(Mask a, Mask b) const { return adj[a][0] == b || adj[a][1] == b; }

    void replace(Mask v, Mask old_nb, Mask new_nb) {
        if (adj[v][0] == old_nb)
            adj[v][0] = new_nb;
        else
            adj[v][1] = new_nb;
    }

    void apply(Mask u, int b, int c) {
        const Mask ub = u ^ (1u << b), w = u ^ (1u << c), wb = w ^ (1u << b);
        replace(u, ub, w);
        replace(w, wb, u);
        replace(ub, u, wb);
        replace(wb, w, ub);
        counts[static_cast<size_t>(b)] -= 2;
        counts[static_cast<size_t>(c)] += 2;
    }

    void decompose() {
        cycle_id.assign(static_cast<size_t>(size), -1);
        next.assign(static_cast<size_t>(size), 0u);
        num_cycles = 0;
        for (int s = 0; s < size; ++s) {
            if (cycle_id[static_cast<size_t>(s)] >= 0) continue;
            Mask prev = static_cast<Mask>(s), curr = adj[static_cast<size_t>(s)][0];
            cycle_id[static_cast<size_t>(s)] = num_cycles;
            next[static_cast<size_t>(s)] = curr;
            while (curr != static_cast<Mask>(s)) {
                cycle_id[curr] = num_cycles;
                const Mask nx = (adj[curr][0] == prev) ? adj[curr][1] : adj[curr][0];
                next[curr] = nx;
                prev = curr;
                curr = nx;
            }
            ++num_cycles;
        }
    }
};

struct Move {
    Mask u = 0;
    int b = -1, c = -1, dimb = 0;
};

bool repair(CycleConfig& g, const std::vector<int>& target, std::mt19937& rng,
            std::vector<Mask>& out) {
    const int n = g.n;
    int laterals = 64;
    for (long it = 0; it < 4000; ++it) {
        g.decompose();
        int imbalance = 0;
        for (int j = 0; j < n; ++j)
            imbalance += std::abs(g.counts[static_cast<size_t>(j)] - target[static_cast<size_t>(j)]);
        if (g.num_cycles == 1 && imbalance == 0) {
            out.clear();
            Mask v = 0;
            do {
                out.push_back(v);
                v = g.next[v];
            } while (v != 0);
            return static_cast<int>(out.size()) == g.size;
        }

        std::vector<Move> cross, mend, split, lateral;
        for (Mask u = 0; u < static_cast<Mask>(g.size); ++u)
            for (int b = 0; b < n; ++b) {
                const Mask ub = u ^ (1u << b);
                if (u > ub || !g.has_edge(u, ub)) continue;
                for (int c = 0; c < n; ++c) {
                    if (c == b) continue;
                    const Mask w = u ^ (1u << c), wb = w ^ (1u << b);
                    if (w > wb || !g.has_edge(w, wb)) continue;
                    if (g.has_edge(u, w) || g.has_edge(ub, wb)) continue;
                    const auto delta = [&](int dir, int d) {
                        const int cur = g.counts[static_cast<size_t>(dir)];
                        const int t = target[static_cast<size_t>(dir)];
                        return std::abs(cur + d - t) - std::abs(cur - t);
                    };
                    const Move mv{u, b, c, delta(b, -2) + delta(c, +2)};
                    if (g.cycle_id[u] != g.cycle_id[w]) {
                        cross.push_back(mv);
                    } else if ((g.next[u] == ub) == (g.next[w] == wb)) {
                        if (mv.dimb < 0)
                            mend.push_back(mv);
                        else if (mv.dimb == 0)
                            lateral.push_back(mv);
                    } else if (mv.dimb < 0) {
                        split.push_back(mv);
                    }
                }
            }

        auto pick_best = [&](std::vector<Move>& v) {
            int best = v[0].dimb;
            for (const auto& mv : v) best = std::min(best, mv.dimb);
            std::vector<Move> top;
            for (const auto& mv : v)
                if (mv.dimb == best) top.push_back(mv);
            return top[rng() % top.size()];
        };

        Move chosen;
        if (g.num_cycles > 1) {
            if (cross.empty()) return false;
            chosen = pick_best(cross);
        } else if (!mend.empty()) {
            chosen = pick_best(mend);
        } else if (!split.empty()) {
            chosen = pick_best(split);
        } else if (!lateral.empty() && laterals-- > 0) {
            chosen = lateral[rng() % lateral.size()];
        } else {
            return false;
        }
        g.apply(chosen.u, chosen.b, chosen.c);
    }
    return false;
}

std::vector<Mask> balanced_masks_impl(int n) {
    if (n == 1) return {0u, 1u};
    if (n == 2) return {0u, 1u, 3u, 2u};

    const std::vector<Mask> small = balanced_masks_impl(n - 1);
    std::vector<Mask> seed(small);
    for (auto it = small.rbegin(); it != small.rend(); ++it)
        seed.push_back(*it | (1u << (n - 1)));

    const int size = 1 << n;
    const int lo = 2 * (size / (2 * n));
    const int hi = size % (2 * n) == 0 ? lo : lo + 2;
    const int num_hi = hi == lo ? 0 : (size - n * lo) / 2;
    std::vector<int> target(static_cast<size_t>(n), lo);
    for (int k = 0; k < num_hi; ++k) target[static_cast<size_t>(k)] = hi;

    std::mt19937 rng(0xC0DE5u + static_cast<unsigned>(n));
    for (int attempt = 0; attempt < 50; ++attempt) {
        CycleConfig g;
        g.init(seed, n);
        std::vector<Mask> out;
        if (repair(g, target, rng, out)) return out;
    }
    fail(ErrorCode::Internal, "balanced_gray: repair search did not converge");
}

} // namespace

AssociatedCode reflected_gray(int n) {
    if (n < 1 || n > 20) fail(ErrorCode::InvalidArgument, "reflected_gray: n out of range");
    AssociatedCode code;
    code.codewords.reserve(1u << n);
    for (std::uint32_t i = 0; i < (1u << n); ++i) {
        const std::uint32_t g = i ^ (i >> 1);
        Codeword w(static_cast<size_t>(n));
        // conventional printed order: position 1 is the most significant bit
        for (int j = 0; j < n; ++j) w[static_cast<size_t>(j)] = (g >> (n - 1 - j)) & 1u;
        code.codewords.push_back(std::move(w));
    }
    return code;
}

std::vector<std::uint32_t> balanced_gray_masks(int n) {
    if (n < 1 || n > 10) fail(ErrorCode::InvalidArgument, "balanced_gray: n out of range");
    return balanced_masks_impl(n);
}

AssociatedCode balanced_gray(int n) {
    auto masks = balanced_gray_masks(n);
    masks.push_back(masks.front());
    AssociatedCode code;
    code.codewords = masks_to_codewords(masks, n);
    return code;
}

} // namespace qadc
