#include "ngspread/search.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <string>
#include <thread>

#include "ngspread/eigen.hpp"
#include "ngspread/spectral.hpp"

namespace ngspread {

namespace {

constexpr double kTieTol = 1e-9;    // value-equality tolerance for optimum ties
constexpr double kMinScore = 1e-12; // smallest toggle gain treated as improving

int edge_bits(int n) { return n * (n - 1) / 2; }

// --- mask-level helpers for the hot scan loops (n <= 8, no allocation) ---

void fill_adj_pair(int n, std::uint64_t mask, double* a, double* abar) {
    std::fill(a, a + n * n, 0.0);
    std::fill(abar, abar + n * n, 0.0);
    int b = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++b) {
            double x = (mask >> b) & 1u ? 1.0 : 0.0;
            a[u * n + v] = a[v * n + u] = x;
            abar[u * n + v] = abar[v * n + u] = 1.0 - x;
        }
}

void fill_signless(int n, std::uint64_t mask, double* q) {
    std::fill(q, q + n * n, 0.0);
    int deg[8] = {0};
    int b = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++b)
            if ((mask >> b) & 1u) {
                q[u * n + v] = q[v * n + u] = 1.0;
                ++deg[u];
                ++deg[v];
            }
    for (int i = 0; i < n; ++i) q[i * n + i] = deg[i];
}

bool connected_mask(int n, std::uint64_t mask) {
    unsigned rows[8] = {0};
    int b = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++b)
            if ((mask >> b) & 1u) {
                rows[u] |= 1u << v;
                rows[v] |= 1u << u;
            }
    unsigned reached = 1, frontier = 1;
    unsigned all = n == 32 ? ~0u : (1u << n) - 1;
    while (frontier != 0) {
        unsigned next = 0;
        unsigned f = frontier;
        while (f != 0) {
            int v = std::countr_zero(f);
            f &= f - 1;
            next |= rows[v];
        }
        frontier = next & ~reached;
        reached |= frontier;
    }
    return reached == all;
}

// Running optimum set with isomorphism dedup applied only to near-optimal
// graphs; everything else is discarded on the fly.
class ExtremeTracker {
public:
    explicit ExtremeTracker(bool maximize) : maximize_(maximize) {}

    bool interesting(double value) const {
        if (!has_best_) return true;
        return maximize_ ? value > best_ - kTieTol : value < best_ + kTieTol;
    }

    void offer(double value, const Graph& g) {
        if (!interesting(value)) return;
        if (!has_best_ || (maximize_ ? value > best_ : value < best_)) {
            best_ = value;
            has_best_ = true;
            prune();
        }
        CanonicalForm form = canonical_form(g);
        auto [it, inserted] = candidates_.try_emplace(form, value);
        if (!inserted)
            it->second = maximize_ ? std::max(it->second, value) : std::min(it->second, value);
    }

    void merge(const ExtremeTracker& other) {
        if (!other.has_best_) return;
        if (!has_best_ || (maximize_ ? other.best_ > best_ : other.best_ < best_)) {
            best_ = other.best_;
            has_best_ = true;
        }
        for (const auto& [form, value] : other.candidates_) {
            auto [it, inserted] = candidates_.try_emplace(form, value);
            if (!inserted)
                it->second = maximize_ ? std::max(it->second, value) : std::min(it->second, value);
        }
        prune();
    }

    double best() const { return best_; }

    std::vector<CanonicalForm> members() const {
        std::vector<CanonicalForm> out;
        for (const auto& [form, value] : candidates_)
            if (interesting(value)) out.push_back(form);
        return out;
    }

private:
    void prune() {
        for (auto it = candidates_.begin(); it != candidates_.end();)
            it = interesting(it->second) ? std::next(it) : candidates_.erase(it);
    }

    bool maximize_;
    bool has_best_ = false;
    double best_ = 0.0;
    std::map<CanonicalForm, double> candidates_;
};

// Splits [0, total) into contiguous chunks; fn(worker, lo, hi) runs on its
// own thread. Results must be merged by the caller in worker order so the
// outcome does not depend on the worker count.
void parallel_chunks(std::uint64_t total, int jobs,
                     const std::function<void(int, std::uint64_t, std::uint64_t)>& fn) {
    if (jobs < 1) jobs = 1;
    std::uint64_t max_jobs = std::min<std::uint64_t>(64, total == 0 ? 1 : total);
    if (static_cast<std::uint64_t>(jobs) > max_jobs) jobs = static_cast<int>(max_jobs);
    if (jobs == 1) {
        fn(0, 0, total);
        return;
    }
    std::vector<std::thread> threads;
    threads.reserve(jobs);
    std::uint64_t chunk = total / jobs;
    for (int w = 0; w < jobs; ++w) {
        std::uint64_t lo = chunk * w;
        std::uint64_t hi = w + 1 == jobs ? total : lo + chunk;
        threads.emplace_back(fn, w, lo, hi);
    }
    for (auto& t : threads) t.join();
}

void check_scan_order(const char* op, int n) {
    if (n < 3) throw invalid_parameter(std::string(op) + ": n must be at least 3");
    if (n > 8)
        throw size_limit_error(std::string(op) + ": exhaustive scans are capped at n = 8");
}

} // namespace

EnumerationStats enumerate_graphs(int n, bool connected_only,
                                  const std::function<void(const Graph&)>& visitor) {
    if (n < 1) throw invalid_parameter("enumerate_graphs: n must be positive");
    if (n > 8) throw size_limit_error("enumerate_graphs: n is capped at 8");
    EnumerationStats stats;
    std::uint64_t total = std::uint64_t{1} << edge_bits(n);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        ++stats.visited;
        if (connected_only && !connected_mask(n, mask)) continue;
        ++stats.emitted;
        visitor(Graph::from_edge_mask(n, mask));
    }
    return stats;
}

MaximizerSet exhaustive_ng(int n, ScanOptions options) {
    check_scan_order("exhaustive_ng", n);
    const int m = edge_bits(n);
    const std::uint64_t total = std::uint64_t{1} << m;
    const bool half = !options.full_scan;

    int jobs = options.jobs < 1 ? 1 : options.jobs;
    std::vector<ExtremeTracker> trackers(std::min<std::uint64_t>(jobs, 64),
                                         ExtremeTracker(true));
    std::vector<std::uint64_t> scanned(trackers.size(), 0);

    parallel_chunks(total, static_cast<int>(trackers.size()),
                    [&](int w, std::uint64_t lo, std::uint64_t hi) {
        double a[64], abar[64];
        ExtremeTracker& tracker = trackers[w];
        for (std::uint64_t mask = lo; mask < hi; ++mask) {
            // p(G) = p(complement), so the light half of each pair suffices
            if (half && 2 * std::popcount(mask) > m) continue;
            ++scanned[w];
            fill_adj_pair(n, mask, a, abar);
            double p = detail::extreme_eigenvalues_inplace(a, n).first +
                       detail::extreme_eigenvalues_inplace(abar, n).first;
            if (tracker.interesting(p)) {
                Graph g = Graph::from_edge_mask(n, mask);
                tracker.offer(p, g);
                tracker.offer(p, complement(g));
            }
        }
    });

    MaximizerSet out;
    out.n = n;
    out.objective = Objective::ng;
    out.sense = Sense::maximize;
    out.connected_only = false;
    ExtremeTracker merged(true);
    for (std::size_t w = 0; w < trackers.size(); ++w) {
        merged.merge(trackers[w]);
        out.graphs_scanned += scanned[w];
    }
    out.best_value = merged.best();
    out.members = merged.members();
    return out;
}

QSpreadExtremes exhaustive_qspread(int n, int jobs) {
    check_scan_order("exhaustive_qspread", n);
    const int m = edge_bits(n);
    const std::uint64_t total = std::uint64_t{1} << m;

    if (jobs < 1) jobs = 1;
    std::size_t workers = std::min<std::uint64_t>(jobs, 64);
    std::vector<ExtremeTracker> maxers(workers, ExtremeTracker(true));
    std::vector<ExtremeTracker> miners(workers, ExtremeTracker(false));
    std::vector<std::uint64_t> scanned(workers, 0);

    parallel_chunks(total, static_cast<int>(workers),
                    [&](int w, std::uint64_t lo, std::uint64_t hi) {
        double q[64];
        for (std::uint64_t mask = lo; mask < hi; ++mask) {
            if (!connected_mask(n, mask)) continue;
            ++scanned[w];
            fill_signless(n, mask, q);
            auto [q1, qn] = detail::extreme_eigenvalues_inplace(q, n);
            double s = q1 - qn;
            if (maxers[w].interesting(s))
                maxers[w].offer(s, Graph::from_edge_mask(n, mask));
            if (miners[w].interesting(s))
                miners[w].offer(s, Graph::from_edge_mask(n, mask));
        }
    });

    QSpreadExtremes out;
    ExtremeTracker max_merged(true), min_merged(false);
    std::uint64_t scanned_total = 0;
    for (std::size_t w = 0; w < workers; ++w) {
        max_merged.merge(maxers[w]);
        min_merged.merge(miners[w]);
        scanned_total += scanned[w];
    }
    out.maximizers = MaximizerSet{n,          Objective::qspread, Sense::maximize,
                                  max_merged.best(), max_merged.members(), scanned_total,
                                  true};
    out.minimizers = MaximizerSet{n,          Objective::qspread, Sense::minimize,
                                  min_merged.best(), min_merged.members(), scanned_total,
                                  true};
    return out;
}

ToggleDecision improving_toggle(const Graph& g, Objective mode) {
    ToggleDecision best; // action=none, score=0
    const int n = g.n();
    if (mode == Objective::ng) {
        if (n >= 2 && !is_connected(g) && !is_connected(complement(g)))
            throw invalid_parameter("improving_toggle: ng mode needs G or its complement connected");
        NGReport r = ng_sum(g);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                double t = r.x[u] * r.x[v] - r.x_bar[u] * r.x_bar[v];
                bool edge = g.has_edge(u, v);
                double score = edge ? -2.0 * t : 2.0 * t;
                if (score > kMinScore && score > best.score)
                    best = ToggleDecision{edge ? ToggleAction::remove : ToggleAction::add, u, v,
                                          score};
            }
    } else {
        if (!is_connected(g))
            throw invalid_parameter("improving_toggle: qspread mode needs a connected graph");
        QSpreadReport r = q_spread(g);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                double xs = (r.x[u] + r.x[v]) * (r.x[u] + r.x[v]);
                double zs = (r.z[u] + r.z[v]) * (r.z[u] + r.z[v]);
                if (g.has_edge(u, v)) {
                    double score = zs - xs;
                    if (score > kMinScore && score > best.score &&
                        is_connected(toggle_edge(g, u, v)))
                        best = ToggleDecision{ToggleAction::remove, u, v, score};
                } else {
                    double score = xs - zs;
                    if (score > kMinScore && score > best.score)
                        best = ToggleDecision{ToggleAction::add, u, v, score};
                }
            }
    }
    return best;
}

SearchTrace local_search(const Graph& start, Objective mode, int max_steps,
                         std::uint64_t rng_seed) {
    if (max_steps < 0) throw invalid_parameter("local_search: max_steps must be nonnegative");
    auto measure = [mode](const Graph& g) {
        return mode == Objective::ng ? ng_sum(g).p : q_spread(g).s;
    };
    SearchTrace trace{start, {}, start, true, rng_seed};
    Graph g = start;
    for (int step = 0; step < max_steps; ++step) {
        ToggleDecision d = improving_toggle(g, mode);
        if (d.action == ToggleAction::none) {
            trace.fixpoint = g;
            trace.complete = true;
            return trace;
        }
        g = toggle_edge(g, d.u, d.v);
        trace.steps.push_back(SearchStep{d, measure(g)});
    }
    trace.fixpoint = g;
    trace.complete = improving_toggle(g, mode).action == ToggleAction::none;
    return trace;
}

TerpaiResult verify_terpai(int n, int jobs) {
    if (n < 1) throw invalid_parameter("verify_terpai: n must be positive");
    if (n > 7) throw size_limit_error("verify_terpai: capped at n = 7");
    const int m = edge_bits(n);
    const std::uint64_t total = std::uint64_t{1} << m;

    if (jobs < 1) jobs = 1;
    std::size_t workers = std::min<std::uint64_t>(jobs, 64);
    std::vector<double> max_p(workers, 0.0);
    std::vector<std::uint64_t> scanned(workers, 0);

    parallel_chunks(total, static_cast<int>(workers),
                    [&](int w, std::uint64_t lo, std::uint64_t hi) {
        double a[64], abar[64];
        for (std::uint64_t mask = lo; mask < hi; ++mask) {
            if (2 * std::popcount(mask) > m) continue; // p is complement-symmetric
            ++scanned[w];
            fill_adj_pair(n, mask, a, abar);
            double p = detail::extreme_eigenvalues_inplace(a, n).first +
                       detail::extreme_eigenvalues_inplace(abar, n).first;
            max_p[w] = std::max(max_p[w], p);
        }
    });

    TerpaiResult out;
    for (std::size_t w = 0; w < workers; ++w) {
        out.max_p = std::max(out.max_p, max_p[w]);
        out.graphs_scanned += scanned[w];
    }
    double bound = terpai_bound(n);
    out.slack = bound - out.max_p;
    out.ok = out.max_p <= bound + 1e-9;
    return out;
}

} // namespace ngspread
