#include "nwalk/count.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace nwalk {

namespace {

struct ScaledWeights {
    std::vector<Int> w;  // weight numerators after clearing denominators
    Int scale = 1;       // common denominator; entry n divides by scale^n
};

ScaledWeights scale_weights(const NStepSet& S) {
    ScaledWeights sw;
    Int l = 1;
    for (std::size_t i = 0; i < S.size(); ++i)
        l = lcm(l, Int(S.weight(i).get_den()));
    sw.scale = l;
    for (std::size_t i = 0; i < S.size(); ++i) {
        Rat scaled = S.weight(i) * Rat(l);
        sw.w.push_back(scaled.get_num());
    }
    return sw;
}

Rat descale(const Int& value, const Int& scale, std::int64_t n) {
    if (scale == 1) return Rat(value);
    Int den;
    mpz_pow_ui(den.get_mpz_t(), scale.get_mpz_t(), static_cast<unsigned long>(n));
    Rat r(value, den);
    r.canonicalize();
    return r;
}

bool packed_contains(const PackedSet& p, std::int64_t x) {
    if (p.bits.empty()) return false;
    std::int64_t off = x - p.min;
    if (off < 0 || off >= static_cast<std::int64_t>(p.bits.size()) * 64) return false;
    return (p.bits[static_cast<std::size_t>(off >> 6)] >>
            (static_cast<std::uint64_t>(off) & 63)) & 1;
}

std::int64_t packed_max(const PackedSet& p) {
    for (std::size_t w = p.bits.size(); w-- > 0;) {
        if (p.bits[w]) {
            int hi = 63 - std::countl_zero(p.bits[w]);
            return p.min + static_cast<std::int64_t>(w * 64 + static_cast<std::size_t>(hi));
        }
    }
    return p.min;
}

PackedSet packed_sumset_floor(const PackedSet& p, const IntSet& s, bool floor) {
    // Shift-or over the mask words, then renormalize the minimum.
    std::int64_t nmin = p.min + s.min();
    std::int64_t span = packed_max(p) - p.min + s.norm() + 1;
    std::vector<std::uint64_t> bits(static_cast<std::size_t>((span + 63) / 64), 0);
    for (auto e : s) {
        std::uint64_t sh = static_cast<std::uint64_t>(e - s.min());
        std::size_t word = sh >> 6;
        unsigned rem = static_cast<unsigned>(sh & 63);
        for (std::size_t i = 0; i < p.bits.size(); ++i) {
            std::uint64_t v = p.bits[i];
            bits[i + word] |= v << rem;
            if (rem && i + word + 1 < bits.size()) bits[i + word + 1] |= v >> (64 - rem);
        }
    }
    PackedSet out;
    out.min = nmin;
    out.bits = std::move(bits);
    if (floor && out.min < 0) {
        std::int64_t drop = -out.min;
        std::vector<std::uint64_t> kept;
        std::size_t word = static_cast<std::size_t>(drop >> 6);
        unsigned rem = static_cast<unsigned>(drop & 63);
        for (std::size_t i = word; i < out.bits.size(); ++i) {
            std::uint64_t v = out.bits[i] >> rem;
            if (rem && i + 1 < out.bits.size()) v |= out.bits[i + 1] << (64 - rem);
            kept.push_back(v);
        }
        out.bits = std::move(kept);
        out.min = 0;
    }
    // renormalize: empty or leading-zero masks
    bool any = false;
    for (auto w : out.bits) any = any || w;
    if (!any) return PackedSet{};
    std::int64_t lead = 0;
    while (!((out.bits[static_cast<std::size_t>(lead >> 6)] >>
              (static_cast<std::uint64_t>(lead) & 63)) & 1))
        ++lead;
    if (lead) {
        IntSet as_set = unpack_set(out);
        return pack_set(as_set);
    }
    return out;
}

using FullLayer = std::unordered_map<PackedSet, Int, PackedSetHash>;

std::vector<Rat> full_set_dp(const NStepSet& S, std::int64_t n_max, WalkFamily family) {
    ScaledWeights sw = scale_weights(S);
    bool floored = family == WalkFamily::Meander || family == WalkFamily::Excursion;

    FullLayer layer;
    layer[pack_set(IntSet{0})] = 1;
    std::vector<Rat> out;

    auto tally = [&](std::int64_t n) {
        Int acc = 0;
        for (auto& [p, v] : layer) {
            bool keep = false;
            switch (family) {
                case WalkFamily::Walk: keep = true; break;
                case WalkFamily::Bridge: keep = packed_contains(p, 0); break;
                case WalkFamily::Meander: keep = true; break;
                case WalkFamily::Excursion: keep = p.min == 0; break;
                case WalkFamily::MinPositive: keep = p.min > 0; break;
                case WalkFamily::MaxNegative: keep = packed_max(p) < 0; break;
                case WalkFamily::SpansZero:
                    keep = p.min <= 0 && packed_max(p) >= 0;
                    break;
            }
            if (keep) acc += v;
        }
        out.push_back(descale(acc, sw.scale, n));
    };

    tally(0);
    for (std::int64_t n = 1; n <= n_max; ++n) {
        FullLayer next;
        next.reserve(layer.size() * 2);
        for (auto& [p, v] : layer) {
            for (std::size_t i = 0; i < S.size(); ++i) {
                if (sw.w[i] == 0) continue;
                PackedSet np = packed_sumset_floor(p, S.step(i), floored);
                if (floored && np.bits.empty()) continue;
                next[np] += v * sw.w[i];
            }
        }
        layer = std::move(next);
        tally(n);
    }
    return out;
}

// Dense (min, max) window per automaton state.
struct DenseLayers {
    std::int64_t lo, width;
    std::size_t nstates;
    std::vector<Int> cells;  // [q][min - lo][max - lo]

    DenseLayers(std::size_t ns, std::int64_t lo_, std::int64_t width_)
        : lo(lo_), width(width_), nstates(ns) {
        std::uint64_t total = static_cast<std::uint64_t>(ns) *
                              static_cast<std::uint64_t>(width) *
                              static_cast<std::uint64_t>(width);
        if (total > 80000000ull)
            throw std::runtime_error("type-compressed DP window too large");
        cells.assign(static_cast<std::size_t>(total), Int(0));
    }
    Int& at(std::size_t q, std::int64_t mn, std::int64_t mx) {
        return cells[(q * static_cast<std::size_t>(width) +
                      static_cast<std::size_t>(mn - lo)) *
                         static_cast<std::size_t>(width) +
                     static_cast<std::size_t>(mx - lo)];
    }
    void clear() {
        for (auto& c : cells) c = 0;
    }
};

std::vector<Rat> compressed_dp(const NStepSet& S, std::int64_t n_max,
                               WalkFamily family, const TypeAutomaton& aut) {
    ScaledWeights sw = scale_weights(S);
    bool floored = family == WalkFamily::Meander || family == WalkFamily::Excursion;

    std::int64_t lo = floored ? 0 : -n_max * S.max_depth() - 1;
    std::int64_t hi = n_max * S.max_rise() + S.max_norm() + 1;
    std::int64_t width = hi - lo + 1;
    DenseLayers cur(aut.states.size(), lo, width);
    DenseLayers nxt(aut.states.size(), lo, width);

    struct Live {
        std::size_t q;
        std::int64_t mn, mx;
    };
    std::vector<Live> live{{aut.initial, 0, 0}};
    cur.at(aut.initial, 0, 0) = 1;

    MeanderStepper stepper(aut);
    std::vector<Rat> out;

    auto tally = [&](std::int64_t n) {
        Int acc = 0;
        for (auto& st : live) {
            const Int& v = cur.at(st.q, st.mn, st.mx);
            if (v == 0) continue;
            bool keep = false;
            switch (family) {
                case WalkFamily::Walk: keep = true; break;
                case WalkFamily::Bridge:
                    keep = aut.contains_zero(st.q, st.mn, st.mx);
                    break;
                case WalkFamily::Meander: keep = true; break;
                case WalkFamily::Excursion: keep = st.mn == 0; break;
                case WalkFamily::MinPositive: keep = st.mn > 0; break;
                case WalkFamily::MaxNegative: keep = st.mx < 0; break;
                case WalkFamily::SpansZero: keep = st.mn <= 0 && st.mx >= 0; break;
            }
            if (keep) acc += v;
        }
        out.push_back(descale(acc, sw.scale, n));
    };

    tally(0);
    for (std::int64_t n = 1; n <= n_max; ++n) {
        std::vector<Live> nlive;
        auto touch = [&](std::size_t q, std::int64_t mn, std::int64_t mx) -> Int& {
            Int& cell = nxt.at(q, mn, mx);
            if (cell == 0) nlive.push_back({q, mn, mx});
            return cell;
        };
        for (auto& st : live) {
            const Int& v = cur.at(st.q, st.mn, st.mx);
            if (v == 0) continue;
            for (std::size_t i = 0; i < S.size(); ++i) {
                if (sw.w[i] == 0) continue;
                if (!floored) {
                    const auto& ar = aut.trans[st.q][i];
                    touch(ar.to, st.mn + ar.dmin, st.mx + ar.dmax) += v * sw.w[i];
                } else {
                    auto land = stepper.step(st.q, st.mn, st.mx, i);
                    if (!land) continue;
                    touch(land->to, land->min, land->max) += v * sw.w[i];
                }
            }
        }
        for (auto& st : live) cur.at(st.q, st.mn, st.mx) = 0;
        std::swap(cur.cells, nxt.cells);
        live = std::move(nlive);
        tally(n);
    }
    return out;
}

}  // namespace

std::vector<Rat> count_by_dp(const NStepSet& S, std::int64_t n_max, WalkFamily family,
                             StateMode mode, const TypeAutomaton* aut) {
    if (n_max < 0) throw std::invalid_argument("n_max must be nonnegative");
    if (mode == StateMode::FullSet) return full_set_dp(S, n_max, family);

    if (aut) return compressed_dp(S, n_max, family, *aut);
    InferResult inf = infer_types(S);
    if (!inf.ok) {
        std::string msg = "type-compressed DP: inference failed; unmatched reach sets:";
        for (auto& s : inf.unmatched) msg += " " + s.to_string();
        throw std::runtime_error(msg);
    }
    TypeAutomaton a = build_automaton(S, inf.types);
    return compressed_dp(S, n_max, family, a);
}

std::vector<Rat> classical_count(const std::vector<std::pair<std::int64_t, Rat>>& steps,
                                 std::int64_t n_max, bool excursions_only) {
    Int l = 1;
    for (auto& [j, w] : steps) l = lcm(l, Int(w.get_den()));
    std::vector<std::pair<std::int64_t, Int>> sw;
    std::int64_t up = 0;
    for (auto& [j, w] : steps) {
        Rat scaled = w * Rat(l);
        sw.emplace_back(j, Int(scaled.get_num()));
        up = std::max(up, j);
    }
    std::int64_t height = n_max * up + 1;
    std::vector<Int> dp(static_cast<std::size_t>(height + 1), Int(0));
    dp[0] = 1;
    std::vector<Rat> out;
    auto tally = [&](std::int64_t n) {
        Int acc = 0;
        if (excursions_only) {
            acc = dp[0];
        } else {
            for (auto& v : dp) acc += v;
        }
        out.push_back(descale(acc, l, n));
    };
    tally(0);
    std::vector<Int> next(dp.size());
    for (std::int64_t n = 1; n <= n_max; ++n) {
        for (auto& v : next) v = 0;
        for (std::int64_t h = 0; h <= height; ++h) {
            if (dp[static_cast<std::size_t>(h)] == 0) continue;
            for (auto& [j, w] : sw) {
                if (w == 0) continue;
                std::int64_t nh = h + j;
                if (nh < 0 || nh > height) continue;
                next[static_cast<std::size_t>(nh)] += dp[static_cast<std::size_t>(h)] * w;
            }
        }
        std::swap(dp, next);
        tally(n);
    }
    return out;
}

std::map<std::int64_t, Rat> excursion_final_max_distribution(const NStepSet& S,
                                                             std::int64_t n) {
    ScaledWeights sw = scale_weights(S);
    FullLayer layer;
    layer[pack_set(IntSet{0})] = 1;
    for (std::int64_t i = 0; i < n; ++i) {
        FullLayer next;
        for (auto& [p, v] : layer) {
            for (std::size_t k = 0; k < S.size(); ++k) {
                if (sw.w[k] == 0) continue;
                PackedSet np = packed_sumset_floor(p, S.step(k), true);
                if (np.bits.empty()) continue;
                next[np] += v * sw.w[k];
            }
        }
        layer = std::move(next);
    }
    std::map<std::int64_t, Rat> out;
    for (auto& [p, v] : layer) {
        if (p.min != 0) continue;
        out[packed_max(p)] += descale(v, sw.scale, n);
    }
    return out;
}

std::map<std::int64_t, Rat> excursion_returns_distribution(const NStepSet& S,
                                                           std::int64_t n) {
    ScaledWeights sw = scale_weights(S);
    PackedSet zero = pack_set(IntSet{0});
    std::map<std::pair<PackedSet, std::int64_t>, Int> layer;
    layer[{zero, 0}] = 1;
    for (std::int64_t i = 0; i < n; ++i) {
        std::map<std::pair<PackedSet, std::int64_t>, Int> next;
        for (auto& [key, v] : layer) {
            for (std::size_t k = 0; k < S.size(); ++k) {
                if (sw.w[k] == 0) continue;
                PackedSet np = packed_sumset_floor(key.first, S.step(k), true);
                if (np.bits.empty()) continue;
                std::int64_t ret = key.second + (np == zero ? 1 : 0);
                next[{np, ret}] += v * sw.w[k];
            }
        }
        layer = std::move(next);
    }
    std::map<std::int64_t, Rat> out;
    for (auto& [key, v] : layer) {
        if (key.first.min != 0) continue;
        out[key.second] += descale(v, sw.scale, n);
    }
    return out;
}

}  // namespace nwalk
