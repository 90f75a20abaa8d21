#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "ngspread/graph.hpp"

namespace ngspread {

enum class Objective { ng, qspread };
enum class Sense { maximize, minimize };

/// All optimum graphs of an exhaustive run, up to isomorphism.
struct MaximizerSet {
    int n = 0;
    Objective objective = Objective::ng;
    Sense sense = Sense::maximize;
    double best_value = 0.0;
    std::vector<CanonicalForm> members; // sorted, pairwise non-isomorphic
    std::uint64_t graphs_scanned = 0;
    bool connected_only = false;
};

struct EnumerationStats {
    std::uint64_t visited = 0;
    std::uint64_t emitted = 0;
};

/// Visits every labeled graph on n vertices exactly once (all edge masks),
/// optionally skipping disconnected ones. n <= 8.
EnumerationStats enumerate_graphs(int n, bool connected_only,
                                  const std::function<void(const Graph&)>& visitor);

struct ScanOptions {
    bool full_scan = false; // scan all masks instead of the complement-closed half
    int jobs = 1;
};

/// Exhaustive maximum of p(G) over all labeled graphs on n vertices,
/// 3 <= n <= 8. By default only masks with |E| <= n(n-1)/4 are scanned
/// (p(G) = p(complement G)); both sides of each scanned pair are recorded.
MaximizerSet exhaustive_ng(int n, ScanOptions options = {});

struct QSpreadExtremes {
    MaximizerSet maximizers;
    MaximizerSet minimizers;
};

/// Exhaustive max and min of s_Q over connected graphs on n vertices,
/// 3 <= n <= 8, in one scan.
QSpreadExtremes exhaustive_qspread(int n, int jobs = 1);

enum class ToggleAction { add, remove, none };

/// An edge flip together with its guaranteed objective gain (a Rayleigh
/// lower bound computed from the current extreme eigenvectors).
struct ToggleDecision {
    ToggleAction action = ToggleAction::none;
    int u = 0;
    int v = 0;
    double score = 0.0;
};

/// Best strictly improving edge flip under the eigenvector rule:
///   ng:      add uv gains 2(x_u x_v - xb_u xb_v), remove gains the negation
///   qspread: add uv gains (x_u+x_v)^2 - (z_u+z_v)^2, remove the negation,
///            and removal is only offered when G-uv stays connected.
/// Ties break toward the lexicographically first (u,v). Returns action=none
/// at a fixpoint. qspread mode requires a connected graph.
ToggleDecision improving_toggle(const Graph& g, Objective mode);

struct SearchStep {
    ToggleDecision decision;
    double objective_value = 0.0; // re-measured by eigensolve after the flip
};

struct SearchTrace {
    Graph start;
    std::vector<SearchStep> steps;
    Graph fixpoint;
    bool complete = true; // false when the step budget ran out first
    std::uint64_t seed = 0;
};

/// Hill climb: apply improving_toggle until none fires or max_steps is hit.
/// The recorded objective values are strictly increasing. The seed is carried
/// in the trace for replay bookkeeping; the climb itself is deterministic.
SearchTrace local_search(const Graph& start, Objective mode, int max_steps,
                         std::uint64_t rng_seed = 0);

struct TerpaiResult {
    bool ok = false;
    double max_p = 0.0;
    double slack = 0.0; // bound - max_p
    std::uint64_t graphs_scanned = 0;
};

/// Checks p(G) <= 4n/3 - 1 + 1e-9 over every graph on n vertices, n <= 7.
TerpaiResult verify_terpai(int n, int jobs = 1);

} // namespace ngspread
