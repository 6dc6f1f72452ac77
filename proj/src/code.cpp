#include "code.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <unordered_map>

namespace qadc {

namespace {

using Mask = std::uint32_t;

// ---------------------------------------------------------------------------
// construct_code
//
// The closed walk is built in a reduced domain: positions sorted by requested
// count ascending, zero-count positions stripped. Two regimes:
//   sum >= 2^n  : balanced Gray cycle (positions matched by sorted counts)
//                 plus toggle padding around the all-zero codeword.
//   sum <  2^n  : the two smallest counts become a prefix pair whose phase
//                 walks the 4-cycle 00,01,11,10; the rest is built recursively
//                 and the prefix moves are interleaved between suffix steps so
//                 that every (phase, suffix) pair is visited at most once.
// ---------------------------------------------------------------------------

// phase p -> (bit0, bit1) along the cycle (0,0),(0,1),(1,1),(1,0)
constexpr Mask kPhaseMask[4] = {0u, 2u, 3u, 1u};

struct Weave {
    const std::vector<Mask>& suffix; // closed walk, suffix[L] == suffix[0]
    const std::vector<int>& moves;   // phase deltas, closed walk on C4 from 0
    std::unordered_map<Mask, unsigned>& used;
    std::vector<int>& taken; // moves consumed per slot
    long nodes = 0;
};

bool weave_dfs(Weave& w, size_t slot, int phase, size_t vpos) {
    const size_t L = w.suffix.size() - 1;
    const size_t moves_left = w.moves.size() - vpos;

    if (slot == L) {
        // Closure slot: the remaining moves must walk the phase back to 0,
        // visiting only unused phases of the all-zero word on the way. The
        // final return to phase 0 is the closing repeat, never marked.
        if (moves_left == 0) {
            w.taken[slot] = 0;
            return phase == 0;
        }
        if (moves_left > 3) return false;
        int p = phase;
        unsigned slot_seen = 1u << p;
        const Mask state = w.suffix[slot];
        if (w.used[state] & slot_seen) return false; // arrival pair must be fresh
        for (size_t k = 0; k < moves_left; ++k) {
            p = (p + w.moves[vpos + k] + 4) % 4;
            const bool last = k + 1 == moves_left;
            if (last) {
                if (p != 0) return false;
                w.taken[slot] = static_cast<int>(moves_left);
                return true;
            }
            const unsigned bit = 1u << p;
            if ((slot_seen & bit) || (w.used[state] & bit)) return false;
            slot_seen |= bit;
        }
        return false;
    }
    if (++w.nodes > 4'000'000) return false;

    const size_t slots_after = L - slot; // including the closure slot
    const Mask state = w.suffix[slot];
    const int max_m = static_cast<int>(std::min<size_t>(3, moves_left));

    for (int m = max_m; m >= 0; --m) {
        if (moves_left - static_cast<size_t>(m) > 3 * slots_after) continue;

        int p = phase;
        unsigned marked = 0;
        unsigned slot_seen = 1u << p;
        bool ok = true;
        for (int k = 0; k < m && ok; ++k) {
            p = (p + w.moves[vpos + static_cast<size_t>(k)] + 4) % 4;
            const unsigned bit = 1u << p;
            if ((slot_seen & bit) || (w.used[state] & bit)) ok = false;
            slot_seen |= bit;
            marked |= bit;
        }
        if (ok) {
            w.used[state] |= marked;
            const Mask next = w.suffix[slot + 1];
            const unsigned arrival = 1u << p;
            bool arrival_marked = false;
            if (slot + 1 < L) {
                if (w.used[next] & arrival)
                    ok = false;
                else {
                    w.used[next] |= arrival;
                    arrival_marked = true;
                }
            }
            if (ok) {
                w.taken[slot] = m;
                if (weave_dfs(w, slot + 1, p, vpos + static_cast<size_t>(m))) return true;
            }
            if (arrival_marked) w.used[next] &= ~arrival;
            w.used[state] &= ~marked;
        }
    }
    return false;
}

// Closed move sequences on the phase 4-cycle with a bit0 flips and b bit1
// flips, assembled from closed units: toggles (2 bit1 flips), full laps in
// either direction and zig-zags (2 flips of each bit). The interleaver is
// sensitive to the exact move order, so a deterministic mix plus seeded
// shuffles of the unit list are offered.
std::vector<std::vector<int>> move_variants(int a, int b) {
    const int toggles = (b - a) / 2;
    const int quads = a / 2;
    enum Unit { Toggle, LapUp, LapDown, ZigY, ZigX };
    const auto emit = [](std::vector<int>& v, Unit u) {
        switch (u) {
            case Toggle: v.insert(v.end(), {+1, -1}); break;
            case LapUp: v.insert(v.end(), {+1, +1, +1, +1}); break;
            case LapDown: v.insert(v.end(), {-1, -1, -1, -1}); break;
            case ZigY: v.insert(v.end(), {+1, +1, -1, -1}); break;
            case ZigX: v.insert(v.end(), {-1, -1, +1, +1}); break;
        }
    };

    std::vector<std::vector<Unit>> unit_lists;
    for (Unit q : {LapUp, LapDown, ZigY, ZigX}) {
        std::vector<Unit> base;
        for (int i = 0; i < toggles; ++i) base.push_back(Toggle);
        for (int i = 0; i < quads; ++i) base.push_back(q);
        unit_lists.push_back(base);
        std::reverse(base.begin(), base.end());
        unit_lists.push_back(base);
    }
    std::mt19937 rng(1234u + static_cast<unsigned>(a * 64 + b));
    for (int extra = 0; extra < 48; ++extra) {
        std::vector<Unit> mix;
        for (int i = 0; i < toggles; ++i) mix.push_back(Toggle);
        for (int i = 0; i < quads; ++i)
            mix.push_back(static_cast<Unit>(1 + rng() % 4));
        std::shuffle(mix.begin(), mix.end(), rng);
        unit_lists.push_back(std::move(mix));
    }

    std::vector<std::vector<int>> variants;
    for (const auto& units : unit_lists) {
        std::vector<int> v;
        for (Unit u : units) emit(v, u);
        variants.push_back(std::move(v));
    }
    return variants;
}

// Builds the closed walk over `n` positions with counts `kappa` (ascending,
// all even and >= 2). Returns the mask sequence, first == last == 0. The
// seed varies the toggle-padding layout; the enclosing interleaver retries
// with fresh layouts when a weave turns out infeasible.
std::vector<Mask> build_walk(int n, const std::vector<int>& kappa, unsigned seed) {
    const long total = std::accumulate(kappa.begin(), kappa.end(), 0L);
    if (n == 0) return {0u};

    if (n > 20) fail(ErrorCode::TooLarge, "construct_code: too many active positions");

    if (total >= (1L << n)) {
        // Balanced Gray cycle, positions matched to the requested counts in
        // sorted order, then a toggle pair per two surplus transitions. A
        // toggle (u, u^e_j, u) keeps the alternation of position j wherever
        // it is anchored, so the pairs are spread along the cycle to keep
        // every codeword's visit count within the four prefix phases the
        // enclosing interleaver may need.
        std::vector<Mask> bal = balanced_gray_masks(n);
        const size_t lap = bal.size();
        std::vector<int> cnt(static_cast<size_t>(n), 0);
        for (size_t i = 0; i < lap; ++i)
            ++cnt[static_cast<size_t>(std::countr_zero(bal[i] ^ bal[(i + 1) % lap]))];
        std::vector<int> bits(static_cast<size_t>(n));
        std::iota(bits.begin(), bits.end(), 0);
        std::stable_sort(bits.begin(), bits.end(),
                         [&](int x, int y) { return cnt[static_cast<size_t>(x)] < cnt[static_cast<size_t>(y)]; });
        // remap: walk bit j holds balanced-code bit bits[j]
        for (Mask& g : bal) {
            Mask m = 0;
            for (int j = 0; j < n; ++j)
                if (g >> bits[static_cast<size_t>(j)] & 1u) m |= 1u << j;
            g = m;
        }
        std::vector<int> cnt_lap(static_cast<size_t>(n));
        for (int j = 0; j < n; ++j)
            cnt_lap[static_cast<size_t>(j)] = cnt[static_cast<size_t>(bits[static_cast<size_t>(j)])];

        // The base may run several full laps: counts that are near-multiples
        // of the lap counts weave better as repeated laps than as toggle
        // chains off a single lap.
        int max_laps = kappa[0] / cnt_lap[0];
        for (int j = 1; j < n; ++j)
            max_laps = std::min(max_laps, kappa[static_cast<size_t>(j)] / cnt_lap[static_cast<size_t>(j)]);
        max_laps = std::max(1, max_laps);
        const int laps = 1 + static_cast<int>(seed % static_cast<unsigned>(max_laps));
        std::vector<Mask> base;
        base.reserve(lap * static_cast<size_t>(laps));
        for (int k = 0; k < laps; ++k) base.insert(base.end(), bal.begin(), bal.end());
        for (int j = 0; j < n; ++j) cnt_lap[static_cast<size_t>(j)] *= laps;

        std::vector<size_t> anchor_order(base.size());
        std::iota(anchor_order.begin(), anchor_order.end(), 0);
        std::mt19937 rng(seed * 2654435761u + 17u);
        std::shuffle(anchor_order.begin(), anchor_order.end(), rng);

        std::vector<std::vector<int>> pads_at;
        const auto place_pads = [&](int cap) -> bool {
            pads_at.assign(lap, {});
            std::vector<int> visits(static_cast<size_t>(1) << n, 0);
            for (Mask g : bal) ++visits[g];
            ++visits[0]; // closing repeat
            for (int j = 0; j < n; ++j) {
                const int extra = kappa[static_cast<size_t>(j)] -
                                  cnt[static_cast<size_t>(bits[static_cast<size_t>(j)])];
                if (extra < 0)
                    fail(ErrorCode::Internal, "construct_code: balanced counts exceed request");
                for (int k = 0; k < extra / 2; ++k) {
                    bool placed = false;
                    for (size_t step = 0; step < lap && !placed; ++step) {
                        const size_t i = anchor_order[(static_cast<size_t>(j + k) + step) % lap];
                        const Mask u = bal[i], v = u ^ (1u << j);
                        if (visits[u] < cap && visits[v] < cap) {
                            pads_at[i].push_back(j);
                            ++visits[u];
                            ++visits[v];
                            placed = true;
                        }
                    }
                    if (!placed) return false;
                }
            }
            return true;
        };
        if (!place_pads(3) && !place_pads(4))
            fail(ErrorCode::Internal, "construct_code: no anchor left for toggle padding");

        std::vector<Mask> walk;
        walk.reserve(static_cast<size_t>(total) + 1);
        for (size_t i = 0; i < lap; ++i) {
            walk.push_back(bal[i]);
            for (int j : pads_at[i]) {
                walk.push_back(bal[i] ^ (1u << j));
                walk.push_back(bal[i]);
            }
        }
        walk.push_back(0u);
        return walk;
    }

    // total < 2^n, so n >= 3 here (n <= 2 always lands in the balanced case).
    const int a = kappa[0], b = kappa[1];
    std::vector<int> suffix_kappa(kappa.begin() + 2, kappa.end());
    const auto variants = move_variants(a, b);

    for (unsigned sub = 0; sub < 24; ++sub) {
        const std::vector<Mask> suffix =
            build_walk(n - 2, suffix_kappa, seed * 24u + sub);
        for (const auto& moves : variants) {
            std::unordered_map<Mask, unsigned> used;
            std::vector<int> taken(suffix.size(), 0);
            used[suffix[0]] |= 1u;
            Weave w{suffix, moves, used, taken};
            if (!weave_dfs(w, 0, 0, 0)) continue;

            std::vector<Mask> walk;
            walk.reserve(static_cast<size_t>(total) + 1);
            int phase = 0;
            size_t vpos = 0;
            walk.push_back(suffix[0] << 2 | kPhaseMask[0]);
            for (size_t slot = 0; slot + 1 < suffix.size(); ++slot) {
                for (int k = 0; k < taken[slot]; ++k) {
                    phase = (phase + moves[vpos++] + 4) % 4;
                    walk.push_back(suffix[slot] << 2 | kPhaseMask[phase]);
                }
                walk.push_back(suffix[slot + 1] << 2 | kPhaseMask[phase]);
            }
            for (int k = 0; k < taken.back(); ++k) {
                phase = (phase + moves[vpos++] + 4) % 4;
                walk.push_back(suffix.back() << 2 | kPhaseMask[phase]);
            }
            if (phase != 0 || vpos != moves.size())
                fail(ErrorCode::Internal, "construct_code: interleaving bookkeeping broke");
            return walk;
        }
    }
    fail(ErrorCode::Internal, "construct_code: interleaving search exhausted");
}

std::vector<int> code_transition_positions(const AssociatedCode& code) {
    std::vector<int> out;
    out.reserve(code.codewords.size());
    for (size_t i = 1; i < code.codewords.size(); ++i) {
        int pos = -1, l1 = 0;
        for (size_t j = 0; j < code.codewords[i].size(); ++j) {
            const int d = std::abs(code.codewords[i][j] - code.codewords[i - 1][j]);
            if (d > 0) pos = static_cast<int>(j);
            l1 += d;
        }
        if (l1 != 1)
            fail(ErrorCode::InvalidArgument,
                 "code: consecutive codewords must differ in one position by one");
        out.push_back(pos);
    }
    return out;
}

} // namespace

AssociatedCode construct_code(const TransitionSpec& spec) {
    if (spec.ell != 2)
        fail(ErrorCode::InfeasibleSpec, "construct_code: only ell = 2 is constructive");
    if (spec.n_q < 1 || static_cast<int>(spec.kappas.size()) != spec.n_q)
        fail(ErrorCode::InfeasibleSpec, "construct_code: kappa list must have n_q entries");
    int lo = spec.kappas[0], hi = spec.kappas[0];
    for (int k : spec.kappas) {
        if (k < 0 || k % 2 != 0)
            fail(ErrorCode::InfeasibleSpec, "construct_code: counts must be even and non-negative");
        lo = std::min(lo, k);
        hi = std::max(hi, k);
    }
    if (hi - lo > 2)
        fail(ErrorCode::InfeasibleSpec, "construct_code: counts must not spread by more than 2");

    // Reduced domain: ascending counts, zero counts stripped.
    std::vector<int> order(static_cast<size_t>(spec.n_q));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
        return spec.kappas[static_cast<size_t>(x)] < spec.kappas[static_cast<size_t>(y)];
    });
    std::vector<int> active, kappa;
    for (int j : order)
        if (spec.kappas[static_cast<size_t>(j)] > 0) {
            active.push_back(j);
            kappa.push_back(spec.kappas[static_cast<size_t>(j)]);
        }

    const std::vector<Mask> walk = build_walk(static_cast<int>(active.size()), kappa, 0);

    AssociatedCode code;
    code.codewords.reserve(walk.size());
    for (Mask m : walk) {
        Codeword w(static_cast<size_t>(spec.n_q), 0);
        for (size_t k = 0; k < active.size(); ++k)
            w[static_cast<size_t>(active[k])] = static_cast<int>(m >> k & 1u);
        code.codewords.push_back(std::move(w));
    }
    return code;
}

Quantizer synthesize_quantizer(const AssociatedCode& code, const RootList& roots) {
    if (code.codewords.empty()) fail(ErrorCode::InvalidArgument, "synthesize: empty code");
    const int n_q = code.width();
    for (const auto& w : code.codewords)
        for (int v : w)
            if (v != 0 && v != 1)
                fail(ErrorCode::InvalidArgument, "synthesize: codewords must be binary");

    const std::vector<int> tpos = code_transition_positions(code);
    if (tpos.size() != roots.size())
        fail(ErrorCode::LengthMismatch, "synthesize: root count differs from transition count");
    for (size_t i = 1; i < roots.size(); ++i)
        if (!(roots[i] > roots[i - 1]))
            fail(ErrorCode::UnsortedInput, "synthesize: roots must be strictly increasing");

    std::vector<RootList> per_pos(static_cast<size_t>(n_q));
    for (size_t k = 0; k < tpos.size(); ++k)
        per_pos[static_cast<size_t>(tpos[k])].push_back(roots[k]);

    Quantizer q;
    q.n_q = n_q;
    q.ell = 2;
    q.delta = 1;
    for (int j = 0; j < n_q; ++j) {
        const auto& r = per_pos[static_cast<size_t>(j)];
        if (r.size() % 2 != 0)
            fail(ErrorCode::OddTransitionCount,
                 "synthesize: odd transition count at position " + std::to_string(j));
        if (static_cast<int>(r.size()) > kMaxRootDegree)
            fail(ErrorCode::TooLarge, "synthesize: transition count exceeds supported degree");
        // Leading sign makes the limits at +-infinity match the first codeword.
        const double lead = code.codewords[0][static_cast<size_t>(j)] == 0 ? -1.0 : 1.0;
        q.polys.push_back(from_roots(r, lead));
        q.thresholds.push_back({0.0});
        q.delta = std::max(q.delta, static_cast<int>(r.size()));
    }
    q.validate();
    return q;
}

Quantizer synthesize_quantizer_theorem1(const RootList& t) {
    if (t.empty() || t.size() % 2 != 0)
        fail(ErrorCode::LengthMismatch, "theorem1: threshold list must have even length 2 n_q");
    for (size_t i = 1; i < t.size(); ++i)
        if (!(t[i] > t[i - 1]))
            fail(ErrorCode::UnsortedInput, "theorem1: thresholds must be strictly increasing");
    const int n_q = static_cast<int>(t.size()) / 2;
    Quantizer q;
    q.n_q = n_q;
    q.ell = 2;
    q.delta = 2;
    for (int j = 0; j < n_q; ++j) {
        // Pairing (r_{n_q-j}, r_{2 n_q-j}) keeps the last ADC switching first.
        q.polys.push_back(from_roots({t[static_cast<size_t>(n_q - 1 - j)],
                                      t[static_cast<size_t>(2 * n_q - 1 - j)]},
                                     -1.0));
        q.thresholds.push_back({0.0});
    }
    q.validate();
    return q;
}

PropertyReport validate_properties(const AssociatedCode& code, int ell, int delta, int n_q) {
    PropertyReport rep;
    const auto& cw = code.codewords;
    auto failed = [&](int item, int index) {
        rep.items[static_cast<size_t>(item - 1)].pass = false;
        if (rep.items[static_cast<size_t>(item - 1)].counterexample < 0)
            rep.items[static_cast<size_t>(item - 1)].counterexample = index;
    };

    // 1: number of codewords (transition-point count plus one)
    if (static_cast<int>(cw.size()) != (ell - 1) * delta * n_q + 1) failed(1, 0);

    // 2: first codeword entries all extreme
    for (size_t j = 0; cw.size() > 0 && j < cw[0].size(); ++j)
        if (cw[0][j] != 0 && cw[0][j] != ell - 1) failed(2, static_cast<int>(j));

    // 3: consecutive codewords at L1 distance one
    for (size_t i = 1; i < cw.size(); ++i) {
        int l1 = 0;
        for (size_t j = 0; j < cw[i].size(); ++j) l1 += std::abs(cw[i][j] - cw[i - 1][j]);
        if (l1 != 1) failed(3, static_cast<int>(i - 1));
    }

    // 4: per-position transition counts equal (ell-1)*delta
    const std::vector<int> counts = transition_counts(code);
    for (size_t j = 0; j < counts.size(); ++j)
        if (counts[j] != (ell - 1) * delta) failed(4, static_cast<int>(j));

    // 5: per-position value sequences are saw-tooth between the extremes
    for (int j = 0; j < (cw.empty() ? 0 : static_cast<int>(cw[0].size())); ++j) {
        std::vector<std::pair<int, int>> vals; // (value, transition index)
        vals.emplace_back(cw[0][static_cast<size_t>(j)], 0);
        for (size_t i = 1; i < cw.size(); ++i)
            if (cw[i][static_cast<size_t>(j)] != cw[i - 1][static_cast<size_t>(j)])
                vals.emplace_back(cw[i][static_cast<size_t>(j)], static_cast<int>(i - 1));
        auto extreme = [&](int v) { return v == 0 || v == ell - 1; };
        if (!extreme(vals.front().first)) failed(5, vals.front().second);
        if (!extreme(vals.back().first)) failed(5, vals.back().second);
        for (size_t k = 1; k < vals.size(); ++k)
            if (std::abs(vals[k].first - vals[k - 1].first) != 1) failed(5, vals[k].second);
        for (size_t k = 1; k + 1 < vals.size(); ++k) {
            const int d1 = vals[k].first - vals[k - 1].first;
            const int d2 = vals[k + 1].first - vals[k].first;
            if (d1 * d2 < 0 && !extreme(vals[k].first)) failed(5, vals[k].second);
        }
    }

    // 6: code-size bound
    const double cap_pow = std::pow(static_cast<double>(ell), n_q);
    const double cap_lin = (ell - 1) * delta * n_q + (delta % 2 == 1 ? 1 : 0);
    if (static_cast<double>(code_size(code)) > std::min(cap_pow, cap_lin)) failed(6, 0);

    return rep;
}

namespace {

struct MaxSearch {
    int n_q, ell, tpos, total;
    std::vector<int> wave;         // triangle value after k transitions
    std::vector<int> counts;       // transitions used per position
    std::vector<int> seq;          // chosen positions
    std::vector<int> best_seq;
    std::vector<int> mult;         // visit multiplicity per codeword key
    std::vector<std::uint64_t> keypow;
    std::uint64_t key = 0;
    int distinct = 1, best = 1, bound = 0, max_used = -1;

    void dfs(int depth) {
        if (depth == total) {
            if (distinct > best) {
                best = distinct;
                best_seq = seq;
            }
            return;
        }
        if (best == bound) return;
        if (distinct + (total - depth) <= best) return;

        // Candidate positions in canonical order (a never-used position may
        // only follow all lower ones); moves reaching an unseen codeword go
        // first.
        std::array<int, 32> cand{};
        int nc = 0;
        const int limit = std::min(n_q - 1, max_used + 1);
        for (int pass = 0; pass < 2; ++pass) {
            for (int j = 0; j <= limit; ++j) {
                if (counts[static_cast<size_t>(j)] >= tpos) continue;
                const bool fresh = mult[next_key(j)] == 0;
                if ((pass == 0) == fresh) cand[static_cast<size_t>(nc++)] = j;
            }
        }

        for (int c = 0; c < nc; ++c) {
            const int j = cand[static_cast<size_t>(c)];
            const std::uint64_t saved = key;
            const int saved_max = max_used;
            key = next_key(j);
            ++counts[static_cast<size_t>(j)];
            max_used = std::max(max_used, j);
            const bool fresh = mult[key] == 0;
            ++mult[key];
            distinct += fresh ? 1 : 0;
            seq[static_cast<size_t>(depth)] = j;

            dfs(depth + 1);

            distinct -= fresh ? 1 : 0;
            --mult[key];
            --counts[static_cast<size_t>(j)];
            max_used = saved_max;
            key = saved;
            if (best == bound) return;
        }
    }

    std::uint64_t next_key(int j) const {
        const int before = wave[static_cast<size_t>(counts[static_cast<size_t>(j)])];
        const int after = wave[static_cast<size_t>(counts[static_cast<size_t>(j)] + 1)];
        return key + keypow[static_cast<size_t>(j)] * static_cast<std::uint64_t>(after - before);
    }
};

} // namespace

MaxCodeResult search_max_code(int n_q, int ell, int delta) {
    if (n_q < 1 || ell < 2 || delta < 1)
        fail(ErrorCode::InvalidArgument, "search_max_code: parameters must be positive, ell >= 2");
    const int total = (ell - 1) * delta * n_q;
    if (total > 16)
        fail(ErrorCode::TooLarge, "search_max_code: (ell-1)*delta*n_q must be at most 16");

    MaxSearch s;
    s.n_q = n_q;
    s.ell = ell;
    s.tpos = (ell - 1) * delta;
    s.total = total;
    s.wave.resize(static_cast<size_t>(s.tpos) + 1);
    int v = 0, dir = 1;
    for (int k = 0; k <= s.tpos; ++k) {
        s.wave[static_cast<size_t>(k)] = v;
        if (v + dir > ell - 1 || v + dir < 0) dir = -dir;
        v += dir;
    }
    s.counts.assign(static_cast<size_t>(n_q), 0);
    s.seq.assign(static_cast<size_t>(total), 0);
    s.keypow.resize(static_cast<size_t>(n_q));
    std::uint64_t pw = 1, space = 1;
    for (int j = 0; j < n_q; ++j) {
        s.keypow[static_cast<size_t>(j)] = pw;
        pw *= static_cast<std::uint64_t>(ell);
    }
    space = pw;
    s.mult.assign(space, 0);
    s.mult[0] = 1;

    // One extra codeword is possible only when the per-position wave ends away
    // from its starting extreme (odd delta).
    const bool closed = s.wave[static_cast<size_t>(s.tpos)] == 0;
    const double cap_pow = std::pow(static_cast<double>(ell), n_q);
    s.bound = static_cast<int>(std::min(cap_pow, static_cast<double>(total + (closed ? 0 : 1))));

    s.dfs(0);

    MaxCodeResult res;
    res.gamma = s.best;
    Codeword w(static_cast<size_t>(n_q), 0);
    std::vector<int> counts(static_cast<size_t>(n_q), 0);
    res.witness.codewords.push_back(w);
    for (int j : s.best_seq) {
        ++counts[static_cast<size_t>(j)];
        w[static_cast<size_t>(j)] = s.wave[static_cast<size_t>(counts[static_cast<size_t>(j)])];
        res.witness.codewords.push_back(w);
    }
    return res;
}

} // namespace qadc
