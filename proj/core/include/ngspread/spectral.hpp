#pragma once

#include <span>
#include <vector>

#include "ngspread/eigen.hpp"
#include "ngspread/graph.hpp"

namespace ngspread {

/// Spectral radius sum p(G) = lambda1(G) + lambda1(complement) with the
/// nonnegative unit eigenvectors of both sides.
struct NGReport {
    double lambda1 = 0.0;
    double lambda1_bar = 0.0;
    double p = 0.0;
    std::vector<double> x;     // Perron vector of A(G)
    std::vector<double> x_bar; // Perron vector of A(complement)
};

/// Signless-Laplacian spread s = q1 - qn with the extreme eigenvectors.
struct QSpreadReport {
    double q1 = 0.0;
    double qn = 0.0;
    double s = 0.0;
    std::vector<double> x; // nonnegative unit eigenvector of q1
    std::vector<double> z; // unit eigenvector of qn
};

/// Vertex classes cut out of the extreme Q-eigenvectors:
///   z_small: |z_v| <  epsilon / sqrt(n)
///   x_small: x_v   <  1 / (2 sqrt(n))
///   z_large: complement of z_small.
struct DiagnosticPartition {
    double epsilon = 0.1;
    std::vector<int> z_small;
    std::vector<int> x_small;
    std::vector<int> z_large;
    double x_max_scaled = 0.0; // max_v x_v * sqrt(n)
    double z_max_scaled = 0.0; // max_v |z_v| * sqrt(n)
};

/// Inequalities every near-maximal-spread graph must satisfy, evaluated
/// verbatim on the given graph.
struct ExtremalityFlags {
    bool q1_above_2n_minus_5 = false;  // q1 > 2n - 5
    bool qn_below_3 = false;           // qn < 3
    bool size_above_threshold = false; // |E| > (n-1)(n-3)/2
    bool x_max_below_threshold = false; // every x_v < sqrt(n)/(n-3); needs n >= 4
    bool x_small_below_8 = false;      // |x_small| < 8; needs n >= 4
};

struct DiagnosticsReport {
    DiagnosticPartition partition;
    ExtremalityFlags flags;
};

NGReport ng_sum(const Graph& g);

/// Conjectured maximum of p over n-vertex graphs, evaluated in closed form
/// per residue of n mod 3.
double ng_bound(int n);

/// Proven maximum bound 4n/3 - 1.
double terpai_bound(int n);

/// Closed-form spectral radius of the complete split graph CS_{n,omega}:
/// (omega - 1 + sqrt(-3 omega^2 + (4n-2) omega + 1)) / 2.
double cs_lambda1(int n, int omega);

/// Clique sizes maximizing f(w) = sqrt(-3w^2 + (4n-2)w + 1) - w over the
/// integers: floor/ceil of the critical point, both when f ties within
/// 1e-12 (exact tie whenever n = 2 mod 3). Sorted ascending.
std::vector<int> optimal_clique(int n);

QSpreadReport q_spread(const Graph& g);

/// sum over edges of (x_u+x_v)^2 - (z_u+z_v)^2 for unit x, z; never exceeds
/// s_Q(G) and attains it at the extreme eigenvectors.
double rayleigh_spread(const Graph& g, std::span<const double> x,
                       std::span<const double> z);

/// Max over vertex pairs of |(l1 x_u^2 + l1b xb_u^2) - (l1 x_v^2 + l1b xb_v^2)|,
/// a flatness diagnostic of the two Perron vectors; zero on vertex-transitive
/// graphs.
double ng_deviation(const Graph& g);

DiagnosticsReport asymptotic_diagnostics(const Graph& g, double epsilon);

} // namespace ngspread
