#include "nwalk/simulate.hpp"

#include <bit>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace nwalk {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

// floored reachable set over [0, cap] as a bitmask
struct FloorBits {
    std::vector<std::uint64_t> w;
    std::int64_t cap;

    explicit FloorBits(std::int64_t cap_) : w((cap_ + 64) / 64, 0), cap(cap_) {
        w[0] = 1;
    }
    bool alive() const {
        for (auto x : w)
            if (x) return true;
        return false;
    }
    bool is_zero_singleton() const {
        if (w[0] != 1) return false;
        for (std::size_t i = 1; i < w.size(); ++i)
            if (w[i]) return false;
        return true;
    }
    bool has_zero() const { return w[0] & 1; }
    std::int64_t max() const {
        for (std::size_t i = w.size(); i-- > 0;)
            if (w[i]) return static_cast<std::int64_t>(i) * 64 + 63 -
                             std::countl_zero(w[i]);
        return -1;
    }
    void apply(const IntSet& s) {
        std::vector<std::uint64_t> out(w.size(), 0);
        for (auto e : s) {
            if (e >= 0) {
                std::size_t word = static_cast<std::size_t>(e) >> 6;
                unsigned rem = static_cast<unsigned>(e) & 63;
                for (std::size_t i = 0; i + word < w.size(); ++i) {
                    out[i + word] |= w[i] << rem;
                    if (rem && i + word + 1 < w.size())
                        out[i + word + 1] |= w[i] >> (64 - rem);
                }
            } else {
                std::uint64_t d = static_cast<std::uint64_t>(-e);
                std::size_t word = d >> 6;
                unsigned rem = static_cast<unsigned>(d & 63);
                for (std::size_t i = word; i < w.size(); ++i) {
                    std::uint64_t v = w[i] >> rem;
                    if (rem && i + 1 < w.size()) v |= w[i + 1] << (64 - rem);
                    out[i - word] |= v;
                }
            }
        }
        // mask stray bits above cap
        std::int64_t top = cap + 1;
        if (top % 64 != 0) out.back() &= (std::uint64_t{1} << (top % 64)) - 1;
        w = std::move(out);
    }
};

}  // namespace

std::uint64_t SplitMix64::next() {
    std::uint64_t z = (state_ += kGolden);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

SplitMix64 SplitMix64::substream(std::uint64_t seed, std::uint64_t run) {
    return SplitMix64(seed + run * kGolden);
}

StepSampler::StepSampler(const NStepSet& steps) {
    if (steps.total_weight() != 1)
        throw std::invalid_argument("sampling needs weights summing to exactly 1");
    Rat cum = 0;
    Int two64 = Int(1) << 64;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        cum += steps.weight(i);
        if (i + 1 == steps.size()) {
            thresholds.push_back(~std::uint64_t{0});
            break;
        }
        Int t;  // ceil(cum * 2^64)
        mpz_cdiv_q(t.get_mpz_t(), Int(cum.get_num() * two64).get_mpz_t(),
                   Int(cum.get_den()).get_mpz_t());
        if (t >= two64)
            thresholds.push_back(~std::uint64_t{0});
        else
            thresholds.push_back(static_cast<std::uint64_t>(t.get_ui()));
    }
}

std::size_t StepSampler::pick(std::uint64_t word) const {
    for (std::size_t i = 0; i + 1 < thresholds.size(); ++i)
        if (word < thresholds[i]) return i;
    return thresholds.size() - 1;
}

SampledWalk sample_walk(const SimConfig& cfg, std::uint64_t run) {
    StepSampler sampler(cfg.steps);
    SplitMix64 rng = SplitMix64::substream(cfg.seed, run);
    SampledWalk out;
    out.trace.push_back(ReachState{});
    bool alive = true;
    for (std::int64_t i = 0; i < cfg.length; ++i) {
        std::size_t k = sampler.pick(rng.next());
        out.step_indices.push_back(k);
        out.trace.push_back(step_reach(out.trace.back(), cfg.steps.step(k)));
        if (out.trace.back().floored.empty()) alive = false;
    }
    const ReachState& fin = out.trace.back();
    out.cls.is_bridge = fin.unconstrained.contains(0);
    out.cls.is_meander = alive;
    out.cls.is_excursion = alive && fin.floored.contains(0);
    return out;
}

namespace {

struct FastRun {
    bool meander = true;
    bool excursion = false;
    std::int64_t final_max = -1;
    std::int64_t returns = 0;
};

FastRun run_floored(const NStepSet& S, const StepSampler& sampler,
                    std::uint64_t seed, std::uint64_t run, std::int64_t length) {
    SplitMix64 rng = SplitMix64::substream(seed, run);
    std::int64_t cap = length * std::max<std::int64_t>(1, S.max_rise()) + 1;
    FloorBits reach(cap);
    FastRun out;
    for (std::int64_t i = 0; i < length; ++i) {
        std::size_t k = sampler.pick(rng.next());
        if (!out.meander) continue;  // keep consuming randomness for determinism
        reach.apply(S.step(k));
        if (!reach.alive()) {
            out.meander = false;
            continue;
        }
        if (reach.is_zero_singleton()) ++out.returns;
    }
    if (out.meander) {
        out.excursion = reach.has_zero();
        out.final_max = reach.max();
    }
    return out;
}

bool run_bridge(const NStepSet& S, const StepSampler& sampler, std::uint64_t seed,
                std::uint64_t run, std::int64_t length) {
    // Track the unconstrained reach relative to its running minimum; the
    // minimum itself is additive over steps.
    SplitMix64 rng = SplitMix64::substream(seed, run);
    std::int64_t cap = length * (S.max_norm() + 1) + 1;
    FloorBits rel(cap);
    std::int64_t lo = 0;
    for (std::int64_t i = 0; i < length; ++i) {
        std::size_t k = sampler.pick(rng.next());
        const IntSet& s = S.step(k);
        rel.apply(shift_to_zero(s));
        lo += s.min();
    }
    std::int64_t off = -lo;  // 0 in reach iff this offset is present
    if (off < 0 || off > rel.cap) return false;
    return (rel.w[static_cast<std::size_t>(off >> 6)] >>
            (static_cast<std::uint64_t>(off) & 63)) & 1;
}

}  // namespace

Estimate estimate_class_probability(const SimConfig& cfg, SimFamily family) {
    StepSampler sampler(cfg.steps);
    std::uint64_t hits = 0;
    for (std::uint64_t r = 0; r < cfg.runs; ++r) {
        bool hit = false;
        if (family == SimFamily::Bridge) {
            hit = run_bridge(cfg.steps, sampler, cfg.seed, r, cfg.length);
        } else {
            FastRun res = run_floored(cfg.steps, sampler, cfg.seed, r, cfg.length);
            hit = family == SimFamily::Meander ? res.meander : res.excursion;
        }
        if (hit) ++hits;
    }
    Estimate e;
    e.hits = hits;
    e.total = cfg.runs;
    e.value = static_cast<double>(hits) / static_cast<double>(cfg.runs);
    e.stderr_ = std::sqrt(e.value * (1 - e.value) / static_cast<double>(cfg.runs));
    return e;
}

double Histogram::mean() const {
    if (accepted == 0) return 0;
    double acc = 0;
    for (auto& [k, c] : bins) acc += static_cast<double>(k) * static_cast<double>(c);
    return acc / static_cast<double>(accepted);
}

double Histogram::tv_distance(const std::vector<double>& pmf) const {
    double tv = 0;
    std::size_t top = pmf.size();
    for (auto& [k, c] : bins)
        if (k >= static_cast<std::int64_t>(top))
            tv += static_cast<double>(c) / static_cast<double>(accepted);
    for (std::size_t k = 0; k < top; ++k) {
        auto it = bins.find(static_cast<std::int64_t>(k));
        double emp = it == bins.end()
                         ? 0.0
                         : static_cast<double>(it->second) / static_cast<double>(accepted);
        tv += std::abs(emp - pmf[k]);
    }
    return tv / 2;
}

std::string Histogram::to_csv() const {
    std::ostringstream out;
    out << "bin,count\n";
    for (auto& [k, c] : bins) out << k << "," << c << "\n";
    return out.str();
}

Histogram statistic_histogram(const SimConfig& cfg, SimStatistic stat,
                              bool conditioned_on_excursion) {
    StepSampler sampler(cfg.steps);
    Histogram h;
    h.total = cfg.runs;
    for (std::uint64_t r = 0; r < cfg.runs; ++r) {
        FastRun res = run_floored(cfg.steps, sampler, cfg.seed, r, cfg.length);
        if (!res.meander) continue;
        if (conditioned_on_excursion && !res.excursion) continue;
        ++h.accepted;
        h.bins[stat == SimStatistic::FinalMax ? res.final_max : res.returns] += 1;
    }
    if (h.accepted == 0)
        throw std::runtime_error("statistic_histogram: no accepted samples");
    return h;
}

}  // namespace nwalk
