#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "ngspread/graph.hpp"

namespace ngspread {

/// Seeded generator with platform-independent derived draws. mt19937_64 is
/// fully specified by the standard; the helpers below avoid std::*_distribution,
/// whose outputs vary across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }

    bool coin() { return (next() >> 63) != 0; }

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [lo, hi], inclusive.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

    /// Standard normal via Box-Muller.
    double normal();

private:
    std::mt19937_64 gen_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

/// Erdos-Renyi G(n, 1/2).
Graph random_graph(int n, Rng& rng);

/// Resamples G(n, 1/2) until connected.
Graph random_connected_graph(int n, Rng& rng);

std::vector<double> random_unit_vector(int n, Rng& rng);

std::vector<int> random_permutation(int n, Rng& rng);

/// Relabel: vertex v of g becomes perm[v].
Graph permute_graph(const Graph& g, const std::vector<int>& perm);

} // namespace ngspread
