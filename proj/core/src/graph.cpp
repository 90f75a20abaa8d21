#include "ngspread/graph.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace ngspread {

namespace {

std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

} // namespace

Graph::Graph(int n) : n_(n) {
    if (n < 1 || n > kMaxVertices)
        throw invalid_parameter("graph order must be in [1, 64], got " + std::to_string(n));
}

Graph Graph::from_edge_mask(int n, std::uint64_t mask) {
    if (n < 1 || n > 11)
        throw invalid_parameter("from_edge_mask: order must be in [1, 11]");
    Graph g(n);
    int b = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++b)
            if ((mask >> b) & 1u) {
                g.rows_[u] |= bit(v);
                g.rows_[v] |= bit(u);
            }
    return g;
}

std::uint64_t Graph::edge_mask() const {
    if (n_ > 11) throw invalid_parameter("edge_mask: order must be at most 11");
    std::uint64_t mask = 0;
    int b = 0;
    for (int v = 1; v < n_; ++v)
        for (int u = 0; u < v; ++u, ++b)
            if ((rows_[v] >> u) & 1u) mask |= std::uint64_t{1} << b;
    return mask;
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw invalid_parameter("vertex " + std::to_string(v) + " out of range for n=" +
                                std::to_string(n_));
}

void Graph::check_pair(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v)
        throw invalid_parameter("self-loop at vertex " + std::to_string(u) + " not allowed");
}

bool Graph::has_edge(int u, int v) const {
    check_pair(u, v);
    return (rows_[u] >> v) & 1u;
}

void Graph::add_edge(int u, int v) {
    check_pair(u, v);
    rows_[u] |= bit(v);
    rows_[v] |= bit(u);
}

void Graph::remove_edge(int u, int v) {
    check_pair(u, v);
    rows_[u] &= ~bit(v);
    rows_[v] &= ~bit(u);
}

std::uint64_t Graph::row(int v) const {
    check_vertex(v);
    return rows_[v];
}

int Graph::degree(int v) const {
    check_vertex(v);
    return std::popcount(rows_[v]);
}

int Graph::edge_count() const {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += std::popcount(rows_[v]);
    return twice / 2;
}

std::uint64_t Graph::vertex_mask() const noexcept {
    return n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
}

bool Graph::operator==(const Graph& other) const noexcept {
    if (n_ != other.n_) return false;
    for (int v = 0; v < n_; ++v)
        if (rows_[v] != other.rows_[v]) return false;
    return true;
}

Graph complete_split(int n, int omega) {
    if (n < 1 || n > kMaxVertices)
        throw invalid_parameter("complete_split: n must be in [1, 64]");
    if (omega < 1 || omega > n)
        throw invalid_parameter("complete_split: omega must be in [1, n]");
    Graph g(n);
    for (int u = 0; u < omega; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph pendant_clique(int n) {
    if (n < 3)
        throw invalid_parameter("pendant_clique: n must be at least 3");
    if (n > kMaxVertices)
        throw invalid_parameter("pendant_clique: n must be at most 64");
    Graph g(n);
    for (int u = 0; u + 1 < n - 1; ++u)
        for (int v = u + 1; v < n - 1; ++v) g.add_edge(u, v);
    g.add_edge(0, n - 1);
    return g;
}

Graph named_graph(GraphKind kind, int n, std::optional<int> extra) {
    if (n < 1 || n > kMaxVertices)
        throw invalid_parameter("named_graph: n must be in [1, 64]");
    Graph g(n);
    switch (kind) {
    case GraphKind::empty:
        break;
    case GraphKind::path:
        for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
        break;
    case GraphKind::cycle:
        if (n < 3) throw invalid_parameter("named_graph: cycle needs n >= 3");
        for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
        g.add_edge(n - 1, 0);
        break;
    case GraphKind::star:
        for (int v = 1; v < n; ++v) g.add_edge(0, v);
        break;
    case GraphKind::complete:
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
        break;
    case GraphKind::complete_bipartite: {
        if (!extra)
            throw invalid_parameter("named_graph: complete_bipartite needs a part size");
        int a = *extra;
        if (a < 1 || a > n - 1)
            throw invalid_parameter("named_graph: part size must be in [1, n-1]");
        for (int u = 0; u < a; ++u)
            for (int v = a; v < n; ++v) g.add_edge(u, v);
        break;
    }
    }
    return g;
}

Graph complement(const Graph& g) {
    Graph h(g.n());
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (!g.has_edge(u, v)) h.add_edge(u, v);
    return h;
}

Graph toggle_edge(const Graph& g, int u, int v) {
    Graph h = g;
    if (h.has_edge(u, v))
        h.remove_edge(u, v);
    else
        h.add_edge(u, v);
    return h;
}

bool is_connected(const Graph& g) {
    std::uint64_t reached = 1;
    std::uint64_t frontier = 1;
    while (frontier != 0) {
        std::uint64_t next = 0;
        std::uint64_t f = frontier;
        while (f != 0) {
            int v = std::countr_zero(f);
            f &= f - 1;
            next |= g.row(v);
        }
        frontier = next & ~reached;
        reached |= frontier;
    }
    return reached == g.vertex_mask();
}

std::vector<int> degree_sequence(const Graph& g) {
    std::vector<int> d(g.n());
    for (int v = 0; v < g.n(); ++v) d[v] = g.degree(v);
    return d;
}

std::vector<int> sorted_degree_sequence(const Graph& g) {
    auto d = degree_sequence(g);
    std::sort(d.begin(), d.end());
    return d;
}

namespace {

// Depth-first minimal-string search. Placing vertex w at position k appends
// the k bits adj(w, placed[0..k-1]); prefixes already above the incumbent
// are cut. Candidates are tried low-degree-first so a near-minimal leaf is
// found early and tightens the bound.
struct CanonicalSearch {
    const Graph& g;
    int n;
    int total_bits;
    std::vector<int> order;  // vertices sorted by (degree, label)
    std::vector<int> placed; // positions filled so far
    std::uint64_t used = 0;
    std::uint64_t best = ~std::uint64_t{0};
    bool have_best = false;

    explicit CanonicalSearch(const Graph& graph)
        : g(graph), n(graph.n()), total_bits(graph.n() * (graph.n() - 1) / 2) {
        order.resize(n);
        for (int v = 0; v < n; ++v) order[v] = v;
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            int da = g.degree(a), db = g.degree(b);
            return da != db ? da < db : a < b;
        });
        placed.reserve(n);
    }

    void run() {
        descend(0, 0, 0);
    }

    void descend(int depth, std::uint64_t prefix, int prefix_bits) {
        if (depth == n) {
            if (!have_best || prefix < best) {
                best = prefix;
                have_best = true;
            }
            return;
        }
        for (int idx = 0; idx < n; ++idx) {
            int w = order[idx];
            if (used & (std::uint64_t{1} << w)) continue;
            std::uint64_t chunk = 0;
            for (int j = 0; j < depth; ++j)
                chunk = (chunk << 1) | ((g.row(w) >> placed[j]) & 1u);
            std::uint64_t candidate = (prefix << depth) | chunk;
            int bits = prefix_bits + depth;
            if (have_best && candidate > (best >> (total_bits - bits))) continue;
            placed.push_back(w);
            used |= std::uint64_t{1} << w;
            descend(depth + 1, candidate, bits);
            used &= ~(std::uint64_t{1} << w);
            placed.pop_back();
        }
    }
};

} // namespace

CanonicalForm canonical_form(const Graph& g) {
    if (g.n() > kCanonicalMaxVertices)
        throw size_limit_error("canonical_form: n must be at most " +
                               std::to_string(kCanonicalMaxVertices));
    CanonicalSearch search(g);
    search.run();
    return CanonicalForm{g.n(), search.best};
}

Graph graph_from_canonical(const CanonicalForm& form) {
    if (form.n < 1 || form.n > kCanonicalMaxVertices)
        throw invalid_parameter("graph_from_canonical: bad order");
    Graph g(form.n);
    int total_bits = form.n * (form.n - 1) / 2;
    int b = 0;
    for (int v = 1; v < form.n; ++v)
        for (int u = 0; u < v; ++u, ++b)
            if ((form.bits >> (total_bits - 1 - b)) & 1u) g.add_edge(u, v);
    return g;
}

} // namespace ngspread
