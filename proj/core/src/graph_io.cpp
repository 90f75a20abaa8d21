#include "ngspread/graph_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

namespace ngspread {

namespace {

constexpr int kG6Offset = 63;

void append_bits(std::string& out, const std::vector<bool>& bits) {
    for (std::size_t i = 0; i < bits.size(); i += 6) {
        int value = 0;
        for (std::size_t j = 0; j < 6; ++j) {
            value <<= 1;
            if (i + j < bits.size() && bits[i + j]) value |= 1;
        }
        out.push_back(static_cast<char>(value + kG6Offset));
    }
}

} // namespace

std::string to_graph6(const Graph& g) {
    std::string out;
    int n = g.n();
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kG6Offset));
    } else {
        // 18-bit order prefix for 63 <= n <= 258047
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + kG6Offset));
        out.push_back(static_cast<char>(((n >> 6) & 63) + kG6Offset));
        out.push_back(static_cast<char>((n & 63) + kG6Offset));
    }
    std::vector<bool> bits;
    bits.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) bits.push_back(g.has_edge(u, v));
    append_bits(out, bits);
    return out;
}

Graph from_graph6(const std::string& text) {
    std::string s = text;
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' '))
        s.pop_back();
    if (s.rfind(">>graph6<<", 0) == 0) s.erase(0, 10);
    if (s.empty()) throw invalid_parameter("graph6: empty input");

    std::size_t pos = 0;
    auto take = [&]() -> int {
        if (pos >= s.size()) throw invalid_parameter("graph6: truncated input");
        int c = static_cast<unsigned char>(s[pos++]);
        if (c < kG6Offset || c > 126)
            throw invalid_parameter("graph6: invalid byte at position " + std::to_string(pos - 1));
        return c - kG6Offset;
    };

    int n;
    if (s[0] == '~') {
        ++pos;
        if (pos < s.size() && s[pos] == '~')
            throw invalid_parameter("graph6: orders beyond 258047 not supported");
        int a = take(), b = take(), c = take();
        n = (a << 12) | (b << 6) | c;
    } else {
        n = take();
    }
    if (n < 1 || n > kMaxVertices)
        throw invalid_parameter("graph6: order " + std::to_string(n) + " out of range [1, 64]");

    Graph g(n);
    int need = n * (n - 1) / 2;
    int got = 0;
    int u = 0, v = 1;
    while (got < need) {
        int value = take();
        for (int j = 5; j >= 0 && got < need; --j, ++got) {
            if ((value >> j) & 1) g.add_edge(u, v);
            if (++u == v) {
                u = 0;
                ++v;
            }
        }
    }
    if (pos != s.size()) throw invalid_parameter("graph6: trailing bytes");
    return g;
}

std::string graph_to_json(const Graph& g) {
    nlohmann::json j;
    j["n"] = g.n();
    auto edges = nlohmann::json::array();
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (g.has_edge(u, v)) edges.push_back({u, v});
    j["edges"] = std::move(edges);
    return j.dump();
}

Graph graph_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw invalid_parameter(std::string("graph json: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
        throw invalid_parameter("graph json: missing integer field \"n\"");
    int n = j["n"].get<int>();
    if (n < 1 || n > kMaxVertices)
        throw invalid_parameter("graph json: order out of range [1, 64]");
    Graph g(n);
    if (j.contains("edges")) {
        if (!j["edges"].is_array()) throw invalid_parameter("graph json: \"edges\" must be an array");
        for (const auto& e : j["edges"]) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
                !e[1].is_number_integer())
                throw invalid_parameter("graph json: each edge must be a pair of integers");
            g.add_edge(e[0].get<int>(), e[1].get<int>());
        }
    }
    return g;
}

Graph parse_graph_auto(const std::string& text) {
    for (char c : text) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
        if (c == '{') return graph_from_json(text);
        break;
    }
    return from_graph6(text);
}

Graph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw invalid_parameter("cannot open graph file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph_auto(buf.str());
}

} // namespace ngspread
