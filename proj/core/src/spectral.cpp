#include "ngspread/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace ngspread {

NGReport ng_sum(const Graph& g) {
    EigenPair a = principal_pair(adjacency_matrix(g), /*nonneg=*/true);
    EigenPair b = principal_pair(adjacency_matrix(complement(g)), /*nonneg=*/true);
    NGReport r;
    r.lambda1 = a.value;
    r.lambda1_bar = b.value;
    r.p = a.value + b.value;
    r.x = std::move(a.vector);
    r.x_bar = std::move(b.vector);
    return r;
}

double ng_bound(int n) {
    if (n < 1) throw invalid_parameter("ng_bound: n must be positive");
    double base = 4.0 * n / 3.0 - 5.0 / 3.0;
    double nn = static_cast<double>(n);
    switch (n % 3) {
    case 0:
        return base - (3.0 * nn - 1.0 - std::sqrt(9.0 * nn * nn - 6.0 * nn + 9.0)) / 6.0;
    case 1:
        return base - (3.0 * nn - 2.0 - std::sqrt(9.0 * nn * nn - 12.0 * nn + 12.0)) / 6.0;
    default:
        return base;
    }
}

double terpai_bound(int n) {
    if (n < 1) throw invalid_parameter("terpai_bound: n must be positive");
    return 4.0 * n / 3.0 - 1.0;
}

double cs_lambda1(int n, int omega) {
    if (omega < 1 || omega > n)
        throw invalid_parameter("cs_lambda1: need 1 <= omega <= n");
    double w = omega, nn = n;
    return (w - 1.0 + std::sqrt(-3.0 * w * w + (4.0 * nn - 2.0) * w + 1.0)) / 2.0;
}

namespace {

// Objective whose integer argmax is the optimal clique size.
double clique_gain(int n, int w) {
    double x = w, nn = n;
    return std::sqrt(-3.0 * x * x + (4.0 * nn - 2.0) * x + 1.0) - x;
}

} // namespace

std::vector<int> optimal_clique(int n) {
    if (n < 2) throw invalid_parameter("optimal_clique: n must be at least 2");
    // Critical point of f(x) = sqrt(-3x^2 + (4n-2)x + 1) - x; its floor and
    // ceiling are (n-3)/3, n/3 or (n-1)/3, (n+2)/3 or (n-2)/3, (n+1)/3 for
    // n = 0, 1, 2 mod 3 respectively.
    double x0 = (2.0 * n - 1.0 - std::sqrt(static_cast<double>(n) * n - n + 1.0)) / 3.0;
    int lo = static_cast<int>(std::floor(x0));
    int hi = static_cast<int>(std::ceil(x0));
    lo = std::max(lo, 0);
    hi = std::max(hi, lo);

    double flo = clique_gain(n, lo);
    double fhi = hi == lo ? flo : clique_gain(n, hi);
    std::vector<int> arg;
    if (flo > fhi + 1e-12)
        arg = {lo};
    else if (fhi > flo + 1e-12)
        arg = {hi};
    else if (lo == hi)
        arg = {lo};
    else
        arg = {lo, hi}; // exact tie; happens precisely when n = 2 mod 3
    return arg;
}

QSpreadReport q_spread(const Graph& g) {
    SymMatrix q = signless_laplacian(g);
    EigenPair top = principal_pair(q, /*nonneg=*/true);
    EigenPair bottom = min_pair(q);
    QSpreadReport r;
    r.q1 = top.value;
    r.qn = bottom.value;
    r.s = top.value - bottom.value;
    r.x = std::move(top.vector);
    r.z = std::move(bottom.vector);
    return r;
}

double rayleigh_spread(const Graph& g, std::span<const double> x, std::span<const double> z) {
    if (static_cast<int>(x.size()) != g.n() || static_cast<int>(z.size()) != g.n())
        throw invalid_parameter("rayleigh_spread: vector length must equal graph order");
    auto norm = [](std::span<const double> v) {
        double s = 0.0;
        for (double t : v) s += t * t;
        return std::sqrt(s);
    };
    if (std::abs(norm(x) - 1.0) > 1e-9 || std::abs(norm(z) - 1.0) > 1e-9)
        throw invalid_parameter("rayleigh_spread: x and z must be unit vectors");
    return quadratic_form(g, x) - quadratic_form(g, z);
}

double ng_deviation(const Graph& g) {
    NGReport r = ng_sum(g);
    double lo = 0.0, hi = 0.0;
    for (int v = 0; v < g.n(); ++v) {
        double t = r.lambda1 * r.x[v] * r.x[v] + r.lambda1_bar * r.x_bar[v] * r.x_bar[v];
        if (v == 0) {
            lo = hi = t;
        } else {
            lo = std::min(lo, t);
            hi = std::max(hi, t);
        }
    }
    return hi - lo;
}

DiagnosticsReport asymptotic_diagnostics(const Graph& g, double epsilon) {
    if (epsilon <= 0.0) throw invalid_parameter("asymptotic_diagnostics: epsilon must be positive");
    const int n = g.n();
    QSpreadReport r = q_spread(g);

    DiagnosticsReport out;
    out.partition.epsilon = epsilon;
    const double sqrt_n = std::sqrt(static_cast<double>(n));
    const double z_cut = epsilon / sqrt_n;
    const double x_cut = 1.0 / (2.0 * sqrt_n);
    double x_max = 0.0, z_max = 0.0;
    for (int v = 0; v < n; ++v) {
        x_max = std::max(x_max, r.x[v]);
        z_max = std::max(z_max, std::abs(r.z[v]));
        if (std::abs(r.z[v]) < z_cut)
            out.partition.z_small.push_back(v);
        else
            out.partition.z_large.push_back(v);
        if (r.x[v] < x_cut) out.partition.x_small.push_back(v);
    }
    out.partition.x_max_scaled = x_max * sqrt_n;
    out.partition.z_max_scaled = z_max * sqrt_n;

    out.flags.q1_above_2n_minus_5 = r.q1 > 2.0 * n - 5.0;
    out.flags.qn_below_3 = r.qn < 3.0;
    out.flags.size_above_threshold =
        g.edge_count() > static_cast<double>(n - 1) * (n - 3) / 2.0;
    if (n >= 4) {
        double cap = sqrt_n / (n - 3);
        out.flags.x_max_below_threshold = x_max < cap;
        out.flags.x_small_below_8 = static_cast<int>(out.partition.x_small.size()) < 8;
    }
    return out;
}

} // namespace ngspread
