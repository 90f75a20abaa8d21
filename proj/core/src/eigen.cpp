#include "ngspread/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <numeric>
#include <string>

namespace ngspread {

SymMatrix::SymMatrix(int order) : order_(order) {
    if (order < 1 || order > kMaxVertices)
        throw invalid_parameter("SymMatrix: order must be in [1, 64]");
    a_.assign(static_cast<std::size_t>(order) * order, 0.0);
}

void SymMatrix::check_index(int i, int j) const {
    if (i < 0 || i >= order_ || j < 0 || j >= order_)
        throw invalid_parameter("SymMatrix: index out of range");
}

double SymMatrix::at(int i, int j) const {
    check_index(i, j);
    return a_[static_cast<std::size_t>(i) * order_ + j];
}

void SymMatrix::set(int i, int j, double value) {
    check_index(i, j);
    a_[static_cast<std::size_t>(i) * order_ + j] = value;
    a_[static_cast<std::size_t>(j) * order_ + i] = value;
}

double SymMatrix::trace() const {
    double t = 0.0;
    for (int i = 0; i < order_; ++i) t += a_[static_cast<std::size_t>(i) * order_ + i];
    return t;
}

double SymMatrix::frobenius_norm() const {
    double s = 0.0;
    for (double x : a_) s += x * x;
    return std::sqrt(s);
}

SymMatrix adjacency_matrix(const Graph& g) {
    SymMatrix m(g.n());
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (g.has_edge(u, v)) m.set(u, v, 1.0);
    return m;
}

SymMatrix signless_laplacian(const Graph& g) {
    SymMatrix m(g.n());
    for (int u = 0; u < g.n(); ++u) {
        m.set(u, u, static_cast<double>(g.degree(u)));
        for (int v = u + 1; v < g.n(); ++v)
            if (g.has_edge(u, v)) m.set(u, v, 1.0);
    }
    return m;
}

namespace detail {

namespace {

double off_norm_sq(const double* a, int n) {
    double s = 0.0;
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q) {
            double x = a[p * n + q];
            s += 2.0 * x * x;
        }
    return s;
}

} // namespace

double jacobi_inplace(double* a, double* v, int n, int max_sweeps) {
    double norm0 = 0.0;
    for (int i = 0; i < n * n; ++i) norm0 += a[i] * a[i];
    norm0 = std::sqrt(norm0);
    const double tol = 1e-12 * std::max(norm0, 1.0);

    double off = std::sqrt(off_norm_sq(a, n));
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        if (off <= tol) return off;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                double apq = a[p * n + q];
                if (apq == 0.0) continue;
                double app = a[p * n + p];
                double aqq = a[q * n + q];
                double theta = (aqq - app) / (2.0 * apq);
                double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                if (theta < 0.0) t = -t;
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                double tau = s / (1.0 + c);

                a[p * n + p] = app - t * apq;
                a[q * n + q] = aqq + t * apq;
                a[p * n + q] = a[q * n + p] = 0.0;
                for (int i = 0; i < n; ++i) {
                    if (i == p || i == q) continue;
                    double aip = a[i * n + p];
                    double aiq = a[i * n + q];
                    double nip = aip - s * (aiq + tau * aip);
                    double niq = aiq + s * (aip - tau * aiq);
                    a[i * n + p] = a[p * n + i] = nip;
                    a[i * n + q] = a[q * n + i] = niq;
                }
                if (v != nullptr) {
                    for (int i = 0; i < n; ++i) {
                        double vip = v[i * n + p];
                        double viq = v[i * n + q];
                        v[i * n + p] = vip - s * (viq + tau * vip);
                        v[i * n + q] = viq + s * (vip - tau * viq);
                    }
                }
            }
        }
        off = std::sqrt(off_norm_sq(a, n));
    }
    if (off <= tol) return off;
    throw numeric_failure("jacobi: no convergence after " + std::to_string(max_sweeps) +
                              " sweeps (off-norm " + std::to_string(off) + ")",
                          off);
}

std::pair<double, double> extreme_eigenvalues_inplace(double* a, int n) {
    jacobi_inplace(a, nullptr, n);
    double lo = a[0], hi = a[0];
    for (int i = 1; i < n; ++i) {
        double d = a[i * n + i];
        lo = std::min(lo, d);
        hi = std::max(hi, d);
    }
    return {hi, lo};
}

} // namespace detail

namespace {

struct Decomposition {
    int n = 0;
    std::vector<double> values;  // sorted non-increasing
    std::vector<double> vectors; // row-major; column j is the eigenvector of values[j]
};

Decomposition decompose(const SymMatrix& m) {
    int n = m.order();
    std::vector<double> a = m.data();
    std::vector<double> v(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i) * n + i] = 1.0;
    detail::jacobi_inplace(a.data(), v.data(), n);

    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](int x, int y) {
        return a[static_cast<std::size_t>(x) * n + x] > a[static_cast<std::size_t>(y) * n + y];
    });

    Decomposition d;
    d.n = n;
    d.values.resize(n);
    d.vectors.resize(static_cast<std::size_t>(n) * n);
    for (int j = 0; j < n; ++j) {
        int src = idx[j];
        d.values[j] = a[static_cast<std::size_t>(src) * n + src];
        for (int i = 0; i < n; ++i)
            d.vectors[static_cast<std::size_t>(i) * n + j] =
                v[static_cast<std::size_t>(i) * n + src];
    }
    return d;
}

std::vector<double> column(const Decomposition& d, int j) {
    std::vector<double> out(d.n);
    for (int i = 0; i < d.n; ++i) out[i] = d.vectors[static_cast<std::size_t>(i) * d.n + j];
    return out;
}

double residual_inf(const SymMatrix& m, double value, std::span<const double> vec) {
    int n = m.order();
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
        double acc = 0.0;
        for (int k = 0; k < n; ++k) acc += m.at(i, k) * vec[k];
        worst = std::max(worst, std::abs(acc - value * vec[i]));
    }
    return worst;
}

void normalize(std::vector<double>& v) {
    double norm2 = 0.0;
    for (double x : v) norm2 += x * x;
    double inv = 1.0 / std::sqrt(norm2);
    for (double& x : v) x *= inv;
}

// Deterministic sign: flip so the first entry of largest magnitude is positive.
void fix_sign(std::vector<double>& v) {
    int arg = 0;
    for (int i = 1; i < static_cast<int>(v.size()); ++i)
        if (std::abs(v[i]) > std::abs(v[arg])) arg = i;
    if (v[arg] < 0.0)
        for (double& x : v) x = -x;
}

EigenPair certified_pair(const SymMatrix& m, double value, std::vector<double> vec) {
    normalize(vec);
    double res = residual_inf(m, value, vec);
    if (res > 1e-10)
        throw numeric_failure("eigenpair residual " + std::to_string(res) + " exceeds 1e-10", res);
    return EigenPair{value, std::move(vec), res};
}

} // namespace

Spectrum full_spectrum(const SymMatrix& m) {
    Decomposition d = decompose(m);
    double max_res = 0.0;
    for (int j = 0; j < d.n; ++j) {
        auto vec = column(d, j);
        max_res = std::max(max_res, residual_inf(m, d.values[j], vec));
    }
    if (max_res > 1e-10)
        throw numeric_failure("spectrum residual " + std::to_string(max_res) + " exceeds 1e-10",
                              max_res);
    double sum = std::accumulate(d.values.begin(), d.values.end(), 0.0);
    double tr = m.trace();
    if (std::abs(sum - tr) > 1e-9)
        throw numeric_failure("spectrum trace defect " + std::to_string(sum - tr), sum - tr);
    return Spectrum{std::move(d.values), max_res};
}

EigenPair principal_pair(const SymMatrix& m, bool nonneg) {
    int n = m.order();
    if (nonneg) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (m.at(i, j) < 0.0)
                    throw invalid_parameter(
                        "principal_pair: nonneg requested on a matrix with negative entries");
    }
    Decomposition d = decompose(m);
    double top = d.values[0];
    if (!nonneg) {
        auto vec = column(d, 0);
        fix_sign(vec);
        return certified_pair(m, top, std::move(vec));
    }
    // Project the all-ones vector onto the top eigenspace. For a nonnegative
    // matrix that projection is entrywise nonnegative and does not depend on
    // the basis chosen inside a degenerate eigenspace. Exact ties (components
    // of a disconnected graph) come out of Jacobi split by ~1e-13, well under
    // this tolerance.
    const double gap_tol = 1e-11 * std::max(std::abs(top), 1.0);
    std::vector<double> proj(n, 0.0);
    for (int j = 0; j < d.n && top - d.values[j] <= gap_tol; ++j) {
        double overlap = 0.0;
        for (int i = 0; i < n; ++i) overlap += d.vectors[static_cast<std::size_t>(i) * n + j];
        for (int i = 0; i < n; ++i)
            proj[i] += overlap * d.vectors[static_cast<std::size_t>(i) * n + j];
    }
    double norm2 = 0.0;
    for (double x : proj) norm2 += x * x;
    if (norm2 > 1e-16) {
        std::vector<double> vec = proj;
        normalize(vec);
        double res = residual_inf(m, top, vec);
        if (res <= 1e-10) return EigenPair{top, std::move(vec), res};
        // distinct-but-close eigenvalues got merged; the plain top vector is
        // still certified below
    }
    auto vec = column(d, 0);
    fix_sign(vec);
    return certified_pair(m, top, std::move(vec));
}

EigenPair min_pair(const SymMatrix& m) {
    Decomposition d = decompose(m);
    auto vec = column(d, d.n - 1);
    fix_sign(vec);
    return certified_pair(m, d.values[d.n - 1], std::move(vec));
}

double top_eigenvalue(const SymMatrix& m) {
    std::vector<double> a = m.data();
    return detail::extreme_eigenvalues_inplace(a.data(), m.order()).first;
}

std::pair<double, double> extreme_eigenvalues(const SymMatrix& m) {
    std::vector<double> a = m.data();
    return detail::extreme_eigenvalues_inplace(a.data(), m.order());
}

double quadratic_form(const Graph& g, std::span<const double> y) {
    if (static_cast<int>(y.size()) != g.n())
        throw invalid_parameter("quadratic_form: vector length must equal graph order");
    double acc = 0.0;
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (g.has_edge(u, v)) {
                double s = y[u] + y[v];
                acc += s * s;
            }
    return acc;
}

} // namespace ngspread
