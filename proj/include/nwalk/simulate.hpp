#ifndef NWALK_SIMULATE_HPP
#define NWALK_SIMULATE_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "nwalk/step_set.hpp"
#include "nwalk/walk.hpp"

namespace nwalk {

// SplitMix64: the standard 64-bit mix generator. Substream r of a run seeds
// from seed advanced r times by the golden-ratio increment, so runs are
// independent and embarrassingly parallel.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next();
    static SplitMix64 substream(std::uint64_t seed, std::uint64_t run);

private:
    std::uint64_t state_;
};

struct SimConfig {
    NStepSet steps;            // weights must sum to exactly 1
    std::int64_t length = 0;
    std::uint64_t runs = 1;
    std::uint64_t seed = 0;
};

// Exact inverse-CDF sampler: draws a 64-bit word r and picks the first step
// whose cumulative weight exceeds r/2^64 (thresholds precomputed as exact
// ceilings, so the choice is exact).
class StepSampler {
public:
    explicit StepSampler(const NStepSet& steps);
    std::size_t pick(std::uint64_t word) const;

private:
    std::vector<std::uint64_t> thresholds;  // last entry covers everything
};

// One sampled walk with its reachable-point trace.
struct SampledWalk {
    std::vector<std::size_t> step_indices;
    std::vector<ReachState> trace;  // length+1 entries
    WalkClass cls;
};

SampledWalk sample_walk(const SimConfig& cfg, std::uint64_t run = 0);

struct Estimate {
    double value = 0;
    double stderr_ = 0;
    std::uint64_t hits = 0;
    std::uint64_t total = 0;
};

enum class SimFamily { Bridge, Meander, Excursion };

Estimate estimate_class_probability(const SimConfig& cfg, SimFamily family);

enum class SimStatistic { FinalMax, ReturnsToZero };

struct Histogram {
    std::map<std::int64_t, std::uint64_t> bins;
    std::uint64_t accepted = 0;  // samples entering the histogram
    std::uint64_t total = 0;     // runs drawn

    double mean() const;
    // Total-variation distance to pmf[k] over k >= 0.
    double tv_distance(const std::vector<double>& pmf) const;
    std::string to_csv() const;  // "bin,count" lines
};

// Empirical distribution of the statistic; with conditioning, walks that are
// not excursions are rejected (acceptance count reported). Throws
// std::runtime_error when nothing is accepted.
Histogram statistic_histogram(const SimConfig& cfg, SimStatistic stat,
                              bool conditioned_on_excursion);

}  // namespace nwalk

#endif
