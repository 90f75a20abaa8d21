#pragma once

#include <string>
#include <vector>

#include "ngspread/graph.hpp"

namespace ngspread {

/// Symmetric step function on [0,1]^2: block measures m (positive, summing
/// to 1) and a symmetric value matrix with entries in [0,1].
class StepGraphon {
public:
    StepGraphon(std::vector<double> measures,
                std::vector<std::vector<double>> values);

    int blocks() const noexcept { return static_cast<int>(m_.size()); }
    const std::vector<double>& measures() const noexcept { return m_; }
    double value(int i, int j) const { return values_[i][j]; }
    const std::vector<std::vector<double>>& values() const noexcept { return values_; }

private:
    std::vector<double> m_;
    std::vector<std::vector<double>> values_;
};

/// Symmetric step function without the [0,1] range constraint; the shape
/// differences and scaled copies live in. Fields are public plumbing.
struct StepKernel {
    std::vector<double> m;
    std::vector<std::vector<double>> values;

    int blocks() const noexcept { return static_cast<int>(m.size()); }
};

/// Top eigenvalue mu of the integral operator f -> int W(.,y) f(y) dy with
/// its step eigenfunction, L2-normalized: sum f_i^2 m_i = 1. Residual is the
/// worst per-block defect |sum_j W_ij m_j f_j - mu f_i|.
struct GraphonEigen {
    double mu = 0.0;
    std::vector<double> f;
    double residual = 0.0;
};

/// Equal-block graphon of a graph: n blocks of measure 1/n, 0/1 values.
StepGraphon from_graph(const Graph& g);

/// Two-block graphon, measures (1/3, 2/3), values [[1,1],[1,0]]: the limit
/// shape of near-maximal p(G) graphs (a complete split structure).
StepGraphon limit_split_graphon();

StepGraphon complement(const StepGraphon& w);

/// Solved through the symmetric conjugate diag(sqrt m) V diag(sqrt m); the
/// eigenfunction is deterministic and nonnegative for graphon values.
GraphonEigen max_eigen(const StepGraphon& w);

/// |lambda1(G) - n * mu(W_G)|; identically zero in exact arithmetic.
double relation_check(const Graph& g);

/// Pointwise difference on the common interval refinement of both partitions.
StepKernel common_refinement_diff(const StepGraphon& u, const StepGraphon& w);

StepKernel scale_kernel(const StepKernel& k, double factor);
StepKernel add_kernels(const StepKernel& a, const StepKernel& b); // same partition

struct CutNormResult {
    double value = 0.0;
    bool exact = true; // false: alternating-maximization lower bound (k > 24)
};

/// Cut norm max_{S,T} |sum_{i in S, j in T} K_ij m_i m_j|. Exact by subset
/// enumeration up to 24 blocks (for each S the optimal T is the sign set of
/// the column sums); beyond that, alternating maximization from 32 seeded
/// starts, reported as a lower bound.
CutNormResult cut_norm(const StepKernel& k, int jobs = 1);

enum class Alignment {
    permutation,        // all measure-matching block permutations tried
    permutation_capped, // enumeration stopped at the cap; still an upper bound
    identity_fallback,  // measure multisets differ; identity alignment used
};

struct DeltaUpperResult {
    double value = 0.0;
    Alignment alignment = Alignment::permutation;
    bool exact_norm = true; // cut norms inside were exact
};

/// Upper bound on the cut metric: min over measure-matching block
/// permutations of ||U - W^sigma||_cut (at most 40320 permutations tried,
/// identity first). Only block relabelings are searched, so the true
/// infimum over all measure-preserving maps may be smaller.
DeltaUpperResult delta_cut_upper(const StepGraphon& u, const StepGraphon& w);

/// {"m": [...], "values": [[...]]}
std::string graphon_to_json(const StepGraphon& w);
StepGraphon graphon_from_json(const std::string& text);
StepGraphon load_graphon_file(const std::string& path);

} // namespace ngspread
