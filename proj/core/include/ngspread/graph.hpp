#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "ngspread/errors.hpp"

namespace ngspread {

inline constexpr int kMaxVertices = 64;
inline constexpr int kCanonicalMaxVertices = 10;

/// Simple undirected graph on up to 64 vertices, one bitset row per vertex.
/// Symmetric, zero diagonal, no bits at positions >= n. Vertices are
/// 0-based. Treat instances as immutable values once built; every
/// operation below returns a fresh graph.
class Graph {
public:
    explicit Graph(int n);

    /// Decode an edge bitmask in column order (0,1),(0,2),(1,2),(0,3),...
    /// (bit 0 = pair (0,1)). Requires n(n-1)/2 <= 64.
    static Graph from_edge_mask(int n, std::uint64_t mask);

    /// Inverse of from_edge_mask.
    std::uint64_t edge_mask() const;

    int n() const noexcept { return n_; }

    bool has_edge(int u, int v) const;
    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    /// Adjacency row of v as a bitset (bit u set iff uv is an edge).
    std::uint64_t row(int v) const;

    int degree(int v) const;
    int edge_count() const;

    /// Bitmask with the low n bits set.
    std::uint64_t vertex_mask() const noexcept;

    bool operator==(const Graph& other) const noexcept;

private:
    void check_vertex(int v) const;
    void check_pair(int u, int v) const;

    int n_ = 1;
    std::array<std::uint64_t, kMaxVertices> rows_{};
};

enum class GraphKind { path, cycle, star, complete, complete_bipartite, empty };

/// Clique on the first omega vertices fully joined to an independent set on
/// the remaining n-omega. Requires 1 <= omega <= n <= 64.
Graph complete_split(int n, int omega);

/// Complete graph on vertices 0..n-2 plus a pendant vertex n-1 attached to
/// vertex 0. Requires n >= 3.
Graph pendant_clique(int n);

/// Standard family constructor. `extra` is the first part size for
/// complete_bipartite (required, in [1, n-1]) and ignored otherwise.
Graph named_graph(GraphKind kind, int n, std::optional<int> extra = std::nullopt);

Graph complement(const Graph& g);

/// Flip the uv bit; everything else unchanged. Requires u != v.
Graph toggle_edge(const Graph& g, int u, int v);

bool is_connected(const Graph& g);

std::vector<int> degree_sequence(const Graph& g);        // label order
std::vector<int> sorted_degree_sequence(const Graph& g); // ascending

/// Labeling-invariant encoding: the lexicographically minimal upper-triangle
/// bit string over all relabelings, read in column order
/// (0,1),(0,2),(1,2),(0,3),... with the first bit most significant.
/// Equal forms <=> isomorphic graphs.
struct CanonicalForm {
    int n = 0;
    std::uint64_t bits = 0;

    auto operator<=>(const CanonicalForm&) const = default;
};

/// Exact minimal form by pruned permutation search. Requires n <= 10.
CanonicalForm canonical_form(const Graph& g);

/// Canonical representative graph encoded by a form.
Graph graph_from_canonical(const CanonicalForm& form);

} // namespace ngspread
