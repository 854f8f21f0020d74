#pragma once

// Undirected simple graphs on vertices 1..k (k <= 64), with per-vertex
// adjacency bitmasks so that vertex-subset manipulations are word ops.

#include <array>
#include <cstdint>
#include <utility>
#include <span>
#include <string>
#include <vector>

namespace upbforge {

/// Subset of vertices; bit (v-1) set means vertex v is present.
using VertexMask = std::uint64_t;

inline constexpr int kMaxVertices = 64;

inline VertexMask vertex_bit(int v) { return VertexMask{1} << (v - 1); }
inline VertexMask all_vertices(int k) {
    return k >= kMaxVertices ? ~VertexMask{0} : (VertexMask{1} << k) - 1;
}
int popcount(VertexMask m);
/// Sorted 1-based vertex list of a mask.
std::vector<int> mask_to_vertices(VertexMask m);
VertexMask vertices_to_mask(std::span<const int> vs);

using Edge = std::pair<int, int>;

class Graph {
public:
    /// Empty graph on k vertices. Throws std::invalid_argument unless 1 <= k <= 64.
    explicit Graph(int k);
    /// Throws on loops, duplicates, or out-of-range endpoints.
    Graph(int k, std::span<const Edge> edges);

    int vertex_count() const { return k_; }
    std::size_t edge_count() const { return edges_.size(); }
    /// Sorted (i < j) edge list.
    const std::vector<Edge>& edges() const { return edges_; }

    bool has_edge(int i, int j) const;
    VertexMask neighbors(int v) const;
    int degree(int v) const;
    bool is_regular(int r) const;
    /// Vertices whose degree differs from r.
    std::vector<int> irregular_vertices(int r) const;

    void add_edge(int i, int j);

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.k_ == b.k_ && a.edges_ == b.edges_;
    }

private:
    void check_vertex(int v) const;

    int k_;
    std::vector<Edge> edges_;
    std::vector<VertexMask> adj_;
};

Graph complete_graph(int k);

/// Edge union; all graphs must share the vertex count.
Graph graph_union(std::span<const Graph> gs);

bool edge_disjoint(std::span<const Graph> gs);

/// Cayley graph of Z_13 with connection set {+-p, +-q}, 1 <= p != q <= 6.
/// Residue r is vertex r + 1.
Graph cayley_z13(int p, int q);

/// Partition of {1..6} into three 2-element blocks.
struct PairPartition {
    std::array<std::array<int, 2>, 3> blocks;
};

struct K13Decomposition {
    PairPartition partition;
    std::array<Graph, 3> graphs;
};

/// The 15 decompositions of K_13 into three Cayley graphs of Z_13.
std::vector<K13Decomposition> enumerate_k13_decompositions();

std::string to_string(const PairPartition& p);

}  // namespace upbforge
