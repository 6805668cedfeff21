#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace wfc {

/// Finite simple undirected graph on vertices 0..n-1.
///
/// Adjacency is stored as one 64-bit neighbourhood mask per vertex, so the
/// supported order is capped at 64. All set operations used by the search
/// cores (common neighbourhoods, candidate pruning) are single word ops.
class Graph {
public:
    static constexpr int max_order = 64;

    Graph() = default;
    explicit Graph(int n);

    int order() const { return n_; }
    std::size_t edge_count() const;

    bool has_edge(int u, int v) const;
    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    /// Neighbourhood of v as a bit mask.
    std::uint64_t neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(int v) const;
    std::uint64_t common_neighbors(int u, int v) const;

    /// Mask with one bit per vertex.
    std::uint64_t vertex_mask() const;

    /// Induced subgraph on the vertices of `mask`, relabelled densely in
    /// increasing vertex order.
    Graph induced(std::uint64_t mask) const;

    /// Copy with one fresh vertex appended, adjacent to the vertices of
    /// `attach`.
    Graph with_vertex(std::uint64_t attach) const;

    /// Relabelled copy: vertex v becomes perm[v].
    Graph permuted(const std::vector<int>& perm) const;

    std::vector<std::pair<int, int>> edges() const;

    /// BFS distances from v; -1 for unreachable vertices.
    std::vector<int> distances_from(int v) const;
    bool connected() const;

    bool operator==(const Graph&) const = default;

private:
    void check_vertex(int v) const;

    int n_ = 0;
    std::vector<std::uint64_t> adj_;
};

/// Injective map between the vertices of two graphs. Injectivity and range
/// are validated at construction.
struct VertexMap {
    Graph source;
    Graph target;
    std::vector<int> map;

    VertexMap(Graph src, Graph tgt, std::vector<int> assignment);

    int operator()(int v) const { return map[static_cast<std::size_t>(v)]; }
};

bool is_embedding(const VertexMap& m);       // induced: edge iff edge
bool is_weak_embedding(const VertexMap& m);  // edges map to edges

VertexMap identity_map(const Graph& g);

// --- named constructors -----------------------------------------------

struct MarkedGraph {
    Graph graph;
    std::map<std::string, int> marks;
};

Graph cycle_graph(int n);     // n >= 3
Graph complete_graph(int n);  // n >= 0
Graph path_graph(int n);      // n >= 1 vertices, n-1 edges
Graph empty_graph(int n);
Graph petersen_graph();

/// Two triangles sharing the centre v. Marks: v, v1..v4.
MarkedGraph bowtie_graph();
/// Three triangles sharing the centre p. Marks: p.
MarkedGraph windmill33_graph();
/// Path on path_len vertices plus one extra leaf attached at `attach_at`.
Graph near_path_graph(int path_len, int attach_at);
/// Subdivision of K_n; per_edge[i] internal vertices on the i-th edge of
/// K_n (edges in lexicographic order).
Graph subdivision_of_complete(int n, const std::vector<int>& per_edge);

// --- diagnostics -------------------------------------------------------

/// Max shortest-path distance over connected pairs; nullopt when the graph
/// is disconnected.
std::optional<int> diameter(const Graph& g);

/// A vertex adjacent to all others, lowest index, if one exists.
std::optional<int> dominating_vertex(const Graph& g);

/// All edges {u,v} with no common neighbor.
std::vector<std::pair<int, int>> edges_not_in_triangle(const Graph& g);

struct StronglyRegularParams {
    int k;
    int lambda;
    int mu;
    bool operator==(const StronglyRegularParams&) const = default;
};

/// (k, lambda, mu) if g is strongly regular; requires g connected, not
/// complete, not edgeless.
std::optional<StronglyRegularParams> strongly_regular_params(const Graph& g);

/// True when the neighbourhood of some vertex contains a matching of size
/// `size` (i.e. `size` pairwise disjoint edges among its neighbours).
bool has_center_with_matching(const Graph& g, int size);

/// Matching of `want` pairwise disjoint edges in g, if present.
std::optional<std::vector<std::pair<int, int>>> find_matching(const Graph& g, int want);

/// Sorted list of the vertices in `mask`.
std::vector<int> mask_to_vertices(std::uint64_t mask);
std::uint64_t vertices_to_mask(const std::vector<int>& vs);

}  // namespace wfc
