#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "errors.hpp"

namespace etacolor {

/// Simple undirected graph on vertices 0..n-1.
///
/// Stores sorted adjacency lists plus (for n <= kBitsetLimit) one bitset row
/// per vertex, giving O(1) has_edge and word-parallel neighbourhood unions.
/// Construction validates simplicity: no loops, no duplicate edges, endpoints
/// in range.
class Graph {
public:
    static constexpr std::size_t kBitsetLimit = 16384;

    Graph() = default;

    Graph(std::size_t n, std::vector<std::pair<std::uint32_t, std::uint32_t>> edges)
        : n_(n) {
        for (auto& [u, v] : edges) {
            if (u >= n_ || v >= n_)
                throw BadInputError("edge endpoint out of range: (" + std::to_string(u) +
                                    "," + std::to_string(v) + ") with n=" + std::to_string(n_));
            if (u == v)
                throw BadInputError("loop at vertex " + std::to_string(u));
            if (u > v) std::swap(u, v);
        }
        std::sort(edges.begin(), edges.end());
        if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
            throw BadInputError("duplicate edge in input");
        edges_ = std::move(edges);

        adj_.assign(n_, {});
        for (auto [u, v] : edges_) {
            adj_[u].push_back(v);
            adj_[v].push_back(u);
        }
        for (auto& nb : adj_) std::sort(nb.begin(), nb.end());

        if (n_ <= kBitsetLimit) {
            row_words_ = (n_ + 63) / 64;
            bits_.assign(n_ * row_words_, 0);
            for (auto [u, v] : edges_) {
                bits_[u * row_words_ + v / 64] |= std::uint64_t{1} << (v % 64);
                bits_[v * row_words_ + u / 64] |= std::uint64_t{1} << (u % 64);
            }
        }
    }

    std::size_t num_vertices() const { return n_; }
    std::size_t num_edges() const { return edges_.size(); }

    const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges() const { return edges_; }
    const std::vector<std::uint32_t>& neighbours(std::uint32_t v) const { return adj_[v]; }

    bool has_edge(std::uint32_t u, std::uint32_t v) const {
        if (u == v) return false;
        if (!bits_.empty())
            return (bits_[u * row_words_ + v / 64] >> (v % 64)) & 1;
        const auto& nb = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
        std::uint32_t w = adj_[u].size() <= adj_[v].size() ? v : u;
        return std::binary_search(nb.begin(), nb.end(), w);
    }

    std::size_t degree(std::uint32_t v) const { return adj_[v].size(); }

    std::size_t max_degree() const {
        std::size_t d = 0;
        for (const auto& nb : adj_) d = std::max(d, nb.size());
        return d;
    }

    /// Bitset row for v, or nullptr when n exceeds the bitset limit.
    const std::uint64_t* row(std::uint32_t v) const {
        return bits_.empty() ? nullptr : bits_.data() + v * row_words_;
    }
    std::size_t row_words() const { return row_words_; }

private:
    std::size_t n_ = 0;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges_;
    std::vector<std::vector<std::uint32_t>> adj_;
    std::vector<std::uint64_t> bits_;
    std::size_t row_words_ = 0;
};

/// Parses the plain edge-list format:
///
///     n m
///     u v        (m lines, 0 <= u < v < n)
///
/// Blank lines and lines starting with '#' are skipped.
inline Graph parse_edge_list(std::istream& in) {
    std::string line;
    auto next_data_line = [&]() -> bool {
        while (std::getline(in, line)) {
            auto pos = line.find_first_not_of(" \t\r");
            if (pos == std::string::npos || line[pos] == '#') continue;
            return true;
        }
        return false;
    };

    if (!next_data_line()) throw BadInputError("edge list: missing header line");
    std::istringstream head(line);
    long long n = -1, m = -1;
    if (!(head >> n >> m) || n < 0 || m < 0)
        throw BadInputError("edge list: header must be 'n m' with n,m >= 0");

    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        if (!next_data_line())
            throw BadInputError("edge list: expected " + std::to_string(m) +
                                " edges, got " + std::to_string(i));
        std::istringstream row(line);
        long long u = -1, v = -1;
        if (!(row >> u >> v) || u < 0 || v < 0)
            throw BadInputError("edge list: bad edge line '" + line + "'");
        if (u >= v)
            throw BadInputError("edge list: edges must satisfy u < v, got '" + line + "'");
        edges.emplace_back(static_cast<std::uint32_t>(u), static_cast<std::uint32_t>(v));
    }
    return Graph(static_cast<std::size_t>(n), std::move(edges));
}

/// Parses the JSON graph format: {"n": 5, "edges": [[0,1],[1,2]]}.
inline Graph parse_graph_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw BadInputError("graph JSON: need object with 'n' and 'edges'");
    if (!j["n"].is_number_unsigned())
        throw BadInputError("graph JSON: 'n' must be a non-negative integer");
    std::size_t n = j["n"].get<std::size_t>();
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned())
            throw BadInputError("graph JSON: each edge must be a pair of vertex ids");
        edges.emplace_back(e[0].get<std::uint32_t>(), e[1].get<std::uint32_t>());
    }
    return Graph(n, std::move(edges));
}

/// Loads a graph from a file, sniffing the format: content starting with '{'
/// is JSON, anything else is the plain edge-list format.
inline Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw BadInputError("cannot open graph file: " + path);
    std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    auto pos = content.find_first_not_of(" \t\r\n");
    if (pos != std::string::npos && content[pos] == '{') {
        nlohmann::json j = nlohmann::json::parse(content, nullptr, true, true);
        return parse_graph_json(j);
    }
    std::istringstream ss(content);
    return parse_edge_list(ss);
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

inline nlohmann::json graph_to_json(const Graph& g) {
    nlohmann::json edges = nlohmann::json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    return {{"n", g.num_vertices()}, {"edges", std::move(edges)}};
}

}  // namespace etacolor
