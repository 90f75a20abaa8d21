#include "ngspread/graphon.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <thread>

#include <json.hpp>

#include "ngspread/eigen.hpp"
#include "ngspread/rng.hpp"

namespace ngspread {

namespace {

constexpr int kExactCutNormCap = 24;
constexpr int kHeuristicStarts = 32;
constexpr int kPermutationCap = 40320; // 8!

} // namespace

StepGraphon::StepGraphon(std::vector<double> measures,
                         std::vector<std::vector<double>> values)
    : m_(std::move(measures)), values_(std::move(values)) {
    if (m_.empty()) throw invalid_parameter("StepGraphon: needs at least one block");
    double sum = 0.0;
    for (double mi : m_) {
        if (!(mi > 0.0)) throw invalid_parameter("StepGraphon: block measures must be positive");
        sum += mi;
    }
    if (std::abs(sum - 1.0) > 1e-12)
        throw invalid_parameter("StepGraphon: block measures must sum to 1");
    if (values_.size() != m_.size())
        throw invalid_parameter("StepGraphon: value matrix must be k x k");
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (values_[i].size() != m_.size())
            throw invalid_parameter("StepGraphon: value matrix must be k x k");
        for (std::size_t j = 0; j < values_[i].size(); ++j) {
            double v = values_[i][j];
            if (v < -1e-12 || v > 1.0 + 1e-12)
                throw invalid_parameter("StepGraphon: values must lie in [0, 1]");
            if (std::abs(v - values_[j][i]) > 1e-12)
                throw invalid_parameter("StepGraphon: value matrix must be symmetric");
        }
    }
    // mirror exactly so downstream arithmetic sees a perfectly symmetric matrix
    for (std::size_t i = 0; i < values_.size(); ++i)
        for (std::size_t j = i + 1; j < values_.size(); ++j) values_[j][i] = values_[i][j];
}

StepGraphon from_graph(const Graph& g) {
    int n = g.n();
    std::vector<double> m(n, 1.0 / n);
    std::vector<std::vector<double>> values(n, std::vector<double>(n, 0.0));
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && g.has_edge(u, v)) values[u][v] = 1.0;
    // measures may sum to 1 - eps; renormalize the last block onto the rest
    double sum = 0.0;
    for (double mi : m) sum += mi;
    m[n - 1] += 1.0 - sum;
    return StepGraphon(std::move(m), std::move(values));
}

StepGraphon limit_split_graphon() {
    return StepGraphon({1.0 / 3.0, 2.0 / 3.0}, {{1.0, 1.0}, {1.0, 0.0}});
}

StepGraphon complement(const StepGraphon& w) {
    int k = w.blocks();
    std::vector<std::vector<double>> values(k, std::vector<double>(k, 0.0));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) values[i][j] = 1.0 - w.value(i, j);
    return StepGraphon(w.measures(), std::move(values));
}

GraphonEigen max_eigen(const StepGraphon& w) {
    const int k = w.blocks();
    // conjugate to the symmetric diag(sqrt m) V diag(sqrt m); eigenvalues agree
    // with the operator's and the eigenfunction de-conjugates per block
    SymMatrix s(k);
    std::vector<double> root(k);
    for (int i = 0; i < k; ++i) root[i] = std::sqrt(w.measures()[i]);
    for (int i = 0; i < k; ++i)
        for (int j = i; j < k; ++j) s.set(i, j, root[i] * root[j] * w.value(i, j));

    EigenPair top = principal_pair(s, /*nonneg=*/true);
    GraphonEigen out;
    out.mu = top.value;
    out.f.resize(k);
    for (int i = 0; i < k; ++i) out.f[i] = top.vector[i] / root[i];

    double worst = 0.0;
    for (int i = 0; i < k; ++i) {
        double acc = 0.0;
        for (int j = 0; j < k; ++j) acc += w.value(i, j) * w.measures()[j] * out.f[j];
        worst = std::max(worst, std::abs(acc - out.mu * out.f[i]));
    }
    if (worst > 1e-10)
        throw numeric_failure("graphon eigenfunction residual " + std::to_string(worst), worst);
    out.residual = worst;
    return out;
}

double relation_check(const Graph& g) {
    double lambda1 = top_eigenvalue(adjacency_matrix(g));
    double mu = max_eigen(from_graph(g)).mu;
    return std::abs(lambda1 - g.n() * mu);
}

namespace {

std::vector<double> boundaries(const StepGraphon& w) {
    std::vector<double> b{0.0};
    double acc = 0.0;
    for (int i = 0; i < w.blocks(); ++i) {
        acc += w.measures()[i];
        b.push_back(acc);
    }
    b.back() = 1.0;
    return b;
}

int block_of(const std::vector<double>& bounds, double x) {
    int lo = 0, hi = static_cast<int>(bounds.size()) - 2;
    while (lo < hi) {
        int mid = (lo + hi + 1) / 2;
        if (bounds[mid] <= x)
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo;
}

} // namespace

StepKernel common_refinement_diff(const StepGraphon& u, const StepGraphon& w) {
    auto bu = boundaries(u);
    auto bw = boundaries(w);
    std::vector<double> cuts;
    cuts.reserve(bu.size() + bw.size());
    cuts.insert(cuts.end(), bu.begin(), bu.end());
    cuts.insert(cuts.end(), bw.begin(), bw.end());
    std::sort(cuts.begin(), cuts.end());
    std::vector<double> merged{0.0};
    for (double c : cuts)
        if (c - merged.back() > 1e-12) merged.push_back(c);
    merged.back() = 1.0;

    int cells = static_cast<int>(merged.size()) - 1;
    StepKernel out;
    out.m.resize(cells);
    std::vector<int> iu(cells), iw(cells);
    for (int c = 0; c < cells; ++c) {
        out.m[c] = merged[c + 1] - merged[c];
        double mid = 0.5 * (merged[c] + merged[c + 1]);
        iu[c] = block_of(bu, mid);
        iw[c] = block_of(bw, mid);
    }
    out.values.assign(cells, std::vector<double>(cells, 0.0));
    for (int c = 0; c < cells; ++c)
        for (int d = 0; d < cells; ++d)
            out.values[c][d] = u.value(iu[c], iu[d]) - w.value(iw[c], iw[d]);
    return out;
}

StepKernel scale_kernel(const StepKernel& k, double factor) {
    StepKernel out = k;
    for (auto& row : out.values)
        for (double& v : row) v *= factor;
    return out;
}

StepKernel add_kernels(const StepKernel& a, const StepKernel& b) {
    if (a.m != b.m)
        throw invalid_parameter("add_kernels: kernels must share the same partition");
    StepKernel out = a;
    for (std::size_t i = 0; i < out.values.size(); ++i)
        for (std::size_t j = 0; j < out.values[i].size(); ++j)
            out.values[i][j] += b.values[i][j];
    return out;
}

namespace {

// Exact cut norm over one contiguous range of S-subsets (Gray-code walk).
// Every fixed-size block of indices restarts the column sums from scratch so
// the floating-point result does not depend on how ranges are split across
// workers.
double cut_norm_range(const StepKernel& kernel, std::uint64_t lo, std::uint64_t hi) {
    constexpr std::uint64_t kBlock = 1024;
    const int k = kernel.blocks();
    std::vector<double> weighted(static_cast<std::size_t>(k) * k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            weighted[static_cast<std::size_t>(i) * k + j] =
                kernel.values[i][j] * kernel.m[i] * kernel.m[j];

    std::vector<double> col(k, 0.0); // col[j] = sum_{i in S} values[i][j] m_i m_j
    double best = 0.0;
    auto eval = [&]() {
        double pos = 0.0, neg = 0.0;
        for (int j = 0; j < k; ++j) {
            if (col[j] > 0.0)
                pos += col[j];
            else
                neg -= col[j];
        }
        best = std::max(best, std::max(pos, neg));
    };
    auto rebuild = [&](std::uint64_t gray) {
        std::fill(col.begin(), col.end(), 0.0);
        for (std::uint64_t bits = gray; bits != 0; bits &= bits - 1) {
            int i = std::countr_zero(bits);
            for (int j = 0; j < k; ++j) col[j] += weighted[static_cast<std::size_t>(i) * k + j];
        }
    };

    std::uint64_t idx = lo;
    while (idx < hi) {
        std::uint64_t block_end = std::min(hi, (idx / kBlock + 1) * kBlock);
        rebuild(idx ^ (idx >> 1));
        eval();
        for (std::uint64_t t = idx + 1; t < block_end; ++t) {
            int flip = std::countr_zero(t); // bit toggled between gray(t-1) and gray(t)
            bool added = ((t ^ (t >> 1)) >> flip) & 1u;
            const double* row = &weighted[static_cast<std::size_t>(flip) * k];
            if (added)
                for (int j = 0; j < k; ++j) col[j] += row[j];
            else
                for (int j = 0; j < k; ++j) col[j] -= row[j];
            eval();
        }
        idx = block_end;
    }
    return best;
}

double cut_norm_exact(const StepKernel& kernel, int jobs) {
    constexpr std::uint64_t kBlock = 1024;
    const int k = kernel.blocks();
    const std::uint64_t total = std::uint64_t{1} << k;
    if (jobs < 1) jobs = 1;
    std::size_t workers = std::min<std::uint64_t>(std::min(jobs, 64), total);
    if (workers <= 1) return cut_norm_range(kernel, 0, total);

    // chunk boundaries stay block-aligned so the per-subset arithmetic is
    // identical for every worker count
    std::uint64_t chunk = (total / workers + kBlock - 1) / kBlock * kBlock;
    std::vector<double> best(workers, 0.0);
    std::vector<std::thread> threads;
    for (std::size_t w = 0; w < workers; ++w) {
        std::uint64_t lo = std::min(total, chunk * w);
        std::uint64_t hi = w + 1 == workers ? total : std::min(total, lo + chunk);
        if (lo >= hi) continue;
        threads.emplace_back(
            [&kernel, &best, w, lo, hi]() { best[w] = cut_norm_range(kernel, lo, hi); });
    }
    for (auto& t : threads) t.join();
    return *std::max_element(best.begin(), best.end());
}

double cut_norm_heuristic(const StepKernel& kernel) {
    const int k = kernel.blocks();
    std::vector<double> weighted(static_cast<std::size_t>(k) * k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            weighted[static_cast<std::size_t>(i) * k + j] =
                kernel.values[i][j] * kernel.m[i] * kernel.m[j];

    double best = 0.0;
    Rng rng(0x9e3779b97f4a7c15ull);
    for (int start = 0; start < kHeuristicStarts; ++start) {
        std::vector<char> in_s(k);
        for (int i = 0; i < k; ++i) in_s[i] = rng.coin() ? 1 : 0;
        for (int sign = -1; sign <= 1; sign += 2) {
            std::vector<char> s = in_s, t(k, 0);
            double value = 0.0;
            // alternate: optimal T for S, then optimal S for T
            for (int round = 0; round < 64; ++round) {
                for (int j = 0; j < k; ++j) {
                    double c = 0.0;
                    for (int i = 0; i < k; ++i)
                        if (s[i]) c += weighted[static_cast<std::size_t>(i) * k + j];
                    t[j] = sign * c > 0.0 ? 1 : 0;
                }
                for (int i = 0; i < k; ++i) {
                    double r = 0.0;
                    for (int j = 0; j < k; ++j)
                        if (t[j]) r += weighted[static_cast<std::size_t>(i) * k + j];
                    s[i] = sign * r > 0.0 ? 1 : 0;
                }
                double now = 0.0;
                for (int i = 0; i < k; ++i)
                    if (s[i])
                        for (int j = 0; j < k; ++j)
                            if (t[j]) now += weighted[static_cast<std::size_t>(i) * k + j];
                now *= sign;
                if (now <= value + 1e-15) {
                    value = std::max(value, now);
                    break;
                }
                value = now;
            }
            best = std::max(best, value);
        }
    }
    return best;
}

} // namespace

CutNormResult cut_norm(const StepKernel& kernel, int jobs) {
    if (kernel.blocks() < 1) throw invalid_parameter("cut_norm: empty kernel");
    if (kernel.blocks() <= kExactCutNormCap)
        return CutNormResult{cut_norm_exact(kernel, jobs), true};
    return CutNormResult{cut_norm_heuristic(kernel), false};
}

namespace {

StepKernel permuted_diff(const StepGraphon& u, const StepGraphon& w,
                         const std::vector<int>& sigma) {
    const int k = u.blocks();
    StepKernel d;
    d.m = u.measures();
    d.values.assign(k, std::vector<double>(k, 0.0));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            d.values[i][j] = u.value(i, j) - w.value(sigma[i], sigma[j]);
    return d;
}

} // namespace

DeltaUpperResult delta_cut_upper(const StepGraphon& u, const StepGraphon& w) {
    DeltaUpperResult out;
    auto mu = u.measures();
    auto mw = w.measures();
    std::vector<double> su = mu, sw = mw;
    std::sort(su.begin(), su.end());
    std::sort(sw.begin(), sw.end());
    bool matched = su.size() == sw.size();
    if (matched)
        for (std::size_t i = 0; i < su.size(); ++i)
            if (std::abs(su[i] - sw[i]) > 1e-12) {
                matched = false;
                break;
            }

    if (!matched) {
        auto diff = common_refinement_diff(u, w);
        auto norm = cut_norm(diff);
        return DeltaUpperResult{norm.value, Alignment::identity_fallback, norm.exact};
    }

    const int k = u.blocks();
    int tried = 0;
    bool capped = false;
    double best = -1.0;
    bool exact_all = true;
    std::vector<int> sigma(k, -1);
    std::vector<char> used(k, 0);

    // Backtracking over measure-matching assignments, lexicographic in sigma,
    // so the identity-compatible matching is visited first.
    std::function<bool(int)> place = [&](int slot) -> bool {
        if (tried >= kPermutationCap) {
            capped = true;
            return true; // stop
        }
        if (slot == k) {
            ++tried;
            auto norm = cut_norm(permuted_diff(u, w, sigma));
            exact_all = exact_all && norm.exact;
            if (best < 0.0 || norm.value < best) best = norm.value;
            return best == 0.0; // no alignment can do better
        }
        for (int b = 0; b < k; ++b) {
            if (used[b] || std::abs(mw[b] - mu[slot]) > 1e-12) continue;
            used[b] = 1;
            sigma[slot] = b;
            bool stop = place(slot + 1);
            used[b] = 0;
            sigma[slot] = -1;
            if (stop) return true;
        }
        return false;
    };
    place(0);

    out.value = best;
    out.alignment = capped ? Alignment::permutation_capped : Alignment::permutation;
    out.exact_norm = exact_all;
    return out;
}

std::string graphon_to_json(const StepGraphon& w) {
    nlohmann::json j;
    j["m"] = w.measures();
    j["values"] = w.values();
    return j.dump();
}

StepGraphon graphon_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw invalid_parameter(std::string("graphon json: ") + e.what());
    }
    if (!j.is_object() || !j.contains("m") || !j.contains("values"))
        throw invalid_parameter("graphon json: need fields \"m\" and \"values\"");
    try {
        return StepGraphon(j["m"].get<std::vector<double>>(),
                           j["values"].get<std::vector<std::vector<double>>>());
    } catch (const nlohmann::json::exception& e) {
        throw invalid_parameter(std::string("graphon json: ") + e.what());
    }
}

StepGraphon load_graphon_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw invalid_parameter("cannot open graphon file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return graphon_from_json(buf.str());
}

} // namespace ngspread
