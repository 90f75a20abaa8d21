#pragma once

#include <span>
#include <utility>
#include <vector>

#include "ngspread/graph.hpp"

namespace ngspread {

/// Dense symmetric matrix, full row-major storage mirrored on write.
class SymMatrix {
public:
    explicit SymMatrix(int order);

    int order() const noexcept { return order_; }

    double at(int i, int j) const;
    void set(int i, int j, double value); // writes (i,j) and (j,i)

    double trace() const;
    double frobenius_norm() const;

    const std::vector<double>& data() const noexcept { return a_; }

private:
    void check_index(int i, int j) const;

    int order_ = 1;
    std::vector<double> a_;
};

/// One certified eigenpair: unit vector, residual = ||M v - value v||_inf.
struct EigenPair {
    double value = 0.0;
    std::vector<double> vector;
    double residual = 0.0;
};

/// All eigenvalues sorted non-increasing, with the worst eigenpair residual
/// observed while computing them.
struct Spectrum {
    std::vector<double> values;
    double max_residual = 0.0;
};

SymMatrix adjacency_matrix(const Graph& g);
SymMatrix signless_laplacian(const Graph& g);

/// Full spectrum by cyclic Jacobi sweeps. Certificates: final off-diagonal
/// Frobenius norm <= 1e-12 * max(||M||_F, 1), eigenvalue sum = trace within
/// 1e-9. Throws numeric_failure if 50 sweeps do not converge.
Spectrum full_spectrum(const SymMatrix& m);

/// Largest eigenvalue with unit eigenvector. With nonneg=true the matrix
/// must be entrywise nonnegative and the returned vector is the projection
/// of the all-ones vector onto the top eigenspace: nonnegative (entries
/// >= -1e-12) and independent of the eigenbasis Jacobi happened to produce,
/// so ties between components of a disconnected graph resolve
/// deterministically.
EigenPair principal_pair(const SymMatrix& m, bool nonneg);

/// Least eigenvalue with unit eigenvector, sign fixed deterministically.
EigenPair min_pair(const SymMatrix& m);

/// Values-only fast paths for scan loops (same Jacobi kernel, no vectors).
double top_eigenvalue(const SymMatrix& m);
std::pair<double, double> extreme_eigenvalues(const SymMatrix& m); // {max, min}

/// sum over edges uv of (y_u + y_v)^2, which equals y^T Q(G) y.
double quadratic_form(const Graph& g, std::span<const double> y);

namespace detail {

/// Jacobi kernel on a row-major full symmetric n x n array. Diagonal of `a`
/// receives the (unordered) eigenvalues; if v != nullptr it must hold the
/// n x n identity on entry and receives the rotations (columns are
/// eigenvectors). Returns the achieved off-norm. Throws numeric_failure
/// after max_sweeps.
double jacobi_inplace(double* a, double* v, int n, int max_sweeps = 50);

/// {max, min} eigenvalues of the symmetric array without allocation.
std::pair<double, double> extreme_eigenvalues_inplace(double* a, int n);

} // namespace detail

} // namespace ngspread
