#include "upbforge/graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace upbforge {

int popcount(VertexMask m) { return std::popcount(m); }

std::vector<int> mask_to_vertices(VertexMask m) {
    std::vector<int> out;
    while (m != 0) {
        out.push_back(std::countr_zero(m) + 1);
        m &= m - 1;
    }
    return out;
}

VertexMask vertices_to_mask(std::span<const int> vs) {
    VertexMask m = 0;
    for (int v : vs) {
        if (v < 1 || v > kMaxVertices) throw std::out_of_range("vertex out of range");
        m |= vertex_bit(v);
    }
    return m;
}

Graph::Graph(int k) : k_(k) {
    if (k < 1 || k > kMaxVertices) {
        throw std::invalid_argument("graph vertex count must be in [1, 64], got " +
                                    std::to_string(k));
    }
    adj_.assign(static_cast<std::size_t>(k), 0);
}

Graph::Graph(int k, std::span<const Edge> edges) : Graph(k) {
    for (const auto& [i, j] : edges) {
        if (has_edge(i, j)) {
            throw std::invalid_argument("duplicate edge (" + std::to_string(i) + "," +
                                        std::to_string(j) + ")");
        }
        add_edge(i, j);
    }
}

void Graph::check_vertex(int v) const {
    if (v < 1 || v > k_) {
        throw std::out_of_range("vertex " + std::to_string(v) + " out of range [1, " +
                                std::to_string(k_) + "]");
    }
}

bool Graph::has_edge(int i, int j) const {
    check_vertex(i);
    check_vertex(j);
    return (adj_[i - 1] & vertex_bit(j)) != 0;
}

VertexMask Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[v - 1];
}

int Graph::degree(int v) const { return popcount(neighbors(v)); }

bool Graph::is_regular(int r) const { return irregular_vertices(r).empty(); }

std::vector<int> Graph::irregular_vertices(int r) const {
    std::vector<int> out;
    for (int v = 1; v <= k_; ++v) {
        if (degree(v) != r) out.push_back(v);
    }
    return out;
}

void Graph::add_edge(int i, int j) {
    check_vertex(i);
    check_vertex(j);
    if (i == j) throw std::invalid_argument("loop at vertex " + std::to_string(i));
    if (has_edge(i, j)) return;
    if (i > j) std::swap(i, j);
    adj_[i - 1] |= vertex_bit(j);
    adj_[j - 1] |= vertex_bit(i);
    edges_.insert(std::upper_bound(edges_.begin(), edges_.end(), Edge{i, j}), Edge{i, j});
}

Graph complete_graph(int k) {
    Graph g(k);
    for (int i = 1; i <= k; ++i) {
        for (int j = i + 1; j <= k; ++j) g.add_edge(i, j);
    }
    return g;
}

Graph graph_union(std::span<const Graph> gs) {
    if (gs.empty()) throw std::invalid_argument("union of an empty list of graphs");
    Graph out(gs.front().vertex_count());
    for (const auto& g : gs) {
        if (g.vertex_count() != out.vertex_count()) {
            throw std::invalid_argument("union: graphs have different vertex counts");
        }
        for (const auto& [i, j] : g.edges()) out.add_edge(i, j);
    }
    return out;
}

bool edge_disjoint(std::span<const Graph> gs) {
    std::size_t total = 0;
    for (const auto& g : gs) total += g.edge_count();
    return graph_union(gs).edge_count() == total;
}

Graph cayley_z13(int p, int q) {
    constexpr int n = 13;
    if (p < 1 || p > 6 || q < 1 || q > 6 || p == q) {
        throw std::invalid_argument("Cayley connection set must be {p, q} with 1 <= p != q <= 6");
    }
    Graph g(n);
    for (int a = 0; a < n; ++a) {
        for (int s : {p, q}) g.add_edge(a + 1, (a + s) % n + 1);
    }
    return g;
}

std::vector<K13Decomposition> enumerate_k13_decompositions() {
    std::vector<K13Decomposition> out;
    // Block containing 1 first, then the block containing the smallest
    // remaining element; each partition appears once.
    for (int a = 2; a <= 6; ++a) {
        std::vector<int> rest;
        for (int x = 2; x <= 6; ++x) {
            if (x != a) rest.push_back(x);
        }
        const int b0 = rest[0];
        for (std::size_t i = 1; i < rest.size(); ++i) {
            std::vector<int> last;
            for (std::size_t j = 1; j < rest.size(); ++j) {
                if (j != i) last.push_back(rest[j]);
            }
            PairPartition p{{{{1, a}, {b0, rest[i]}, {last[0], last[1]}}}};
            out.push_back({p,
                           {cayley_z13(1, a), cayley_z13(b0, rest[i]),
                            cayley_z13(last[0], last[1])}});
        }
    }
    return out;
}

std::string to_string(const PairPartition& p) {
    std::string s;
    for (const auto& b : p.blocks) {
        if (!s.empty()) s += " ";
        s += "{" + std::to_string(b[0]) + "," + std::to_string(b[1]) + "}";
    }
    return s;
}

}  // namespace upbforge
