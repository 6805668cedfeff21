#include "wfc/graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace wfc {

Graph::Graph(int n) : n_(n) {
    if (n < 0 || n > max_order)
        throw std::invalid_argument("graph order must be between 0 and 64");
    adj_.assign(static_cast<std::size_t>(n), 0);
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("vertex out of range");
}

std::size_t Graph::edge_count() const {
    std::size_t twice = 0;
    for (auto row : adj_) twice += static_cast<std::size_t>(std::popcount(row));
    return twice / 2;
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (adj_[static_cast<std::size_t>(u)] >> v) & 1u;
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    adj_[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
    adj_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
}

void Graph::remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    adj_[static_cast<std::size_t>(u)] &= ~(std::uint64_t{1} << v);
    adj_[static_cast<std::size_t>(v)] &= ~(std::uint64_t{1} << u);
}

int Graph::degree(int v) const {
    check_vertex(v);
    return std::popcount(adj_[static_cast<std::size_t>(v)]);
}

std::uint64_t Graph::common_neighbors(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return adj_[static_cast<std::size_t>(u)] & adj_[static_cast<std::size_t>(v)];
}

std::uint64_t Graph::vertex_mask() const {
    return n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
}

Graph Graph::induced(std::uint64_t mask) const {
    mask &= vertex_mask();
    std::vector<int> vs = mask_to_vertices(mask);
    Graph out(static_cast<int>(vs.size()));
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (has_edge(vs[i], vs[j])) out.add_edge(static_cast<int>(i), static_cast<int>(j));
    return out;
}

Graph Graph::with_vertex(std::uint64_t attach) const {
    attach &= vertex_mask();
    Graph out(n_ + 1);
    out.adj_ = adj_;
    out.adj_.push_back(attach);
    for (int v : mask_to_vertices(attach))
        out.adj_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << n_;
    return out;
}

Graph Graph::permuted(const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != n_)
        throw std::invalid_argument("permutation size mismatch");
    Graph out(n_);
    for (auto [u, v] : edges()) out.add_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    return out;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u) {
        std::uint64_t higher = adj_[static_cast<std::size_t>(u)] >> (u + 1);
        while (higher) {
            int v = u + 1 + std::countr_zero(higher);
            out.emplace_back(u, v);
            higher &= higher - 1;
        }
    }
    return out;
}

std::vector<int> Graph::distances_from(int v) const {
    check_vertex(v);
    std::vector<int> dist(static_cast<std::size_t>(n_), -1);
    dist[static_cast<std::size_t>(v)] = 0;
    std::uint64_t frontier = std::uint64_t{1} << v;
    std::uint64_t seen = frontier;
    int d = 0;
    while (frontier) {
        std::uint64_t next = 0;
        for (int u : mask_to_vertices(frontier)) next |= adj_[static_cast<std::size_t>(u)];
        next &= ~seen;
        ++d;
        for (int u : mask_to_vertices(next)) dist[static_cast<std::size_t>(u)] = d;
        seen |= next;
        frontier = next;
    }
    return dist;
}

bool Graph::connected() const {
    if (n_ <= 1) return true;
    auto dist = distances_from(0);
    return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

VertexMap::VertexMap(Graph src, Graph tgt, std::vector<int> assignment)
    : source(std::move(src)), target(std::move(tgt)), map(std::move(assignment)) {
    if (static_cast<int>(map.size()) != source.order())
        throw std::invalid_argument("vertex map size must equal source order");
    std::uint64_t used = 0;
    for (int img : map) {
        if (img < 0 || img >= target.order())
            throw std::invalid_argument("vertex map image out of range");
        std::uint64_t bit = std::uint64_t{1} << img;
        if (used & bit) throw std::invalid_argument("vertex map must be injective");
        used |= bit;
    }
}

bool is_embedding(const VertexMap& m) {
    int n = m.source.order();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (m.source.has_edge(u, v) != m.target.has_edge(m(u), m(v))) return false;
    return true;
}

bool is_weak_embedding(const VertexMap& m) {
    int n = m.source.order();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (m.source.has_edge(u, v) && !m.target.has_edge(m(u), m(v))) return false;
    return true;
}

VertexMap identity_map(const Graph& g) {
    std::vector<int> id(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) id[static_cast<std::size_t>(v)] = v;
    return VertexMap(g, g, id);
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    Graph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph path_graph(int n) {
    if (n < 1) throw std::invalid_argument("path needs at least 1 vertex");
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph empty_graph(int n) { return Graph(n); }

Graph petersen_graph() {
    Graph g(10);
    for (int v = 0; v < 5; ++v) {
        g.add_edge(v, (v + 1) % 5);          // outer cycle
        g.add_edge(5 + v, 5 + (v + 2) % 5);  // inner pentagram
        g.add_edge(v, 5 + v);                // spokes
    }
    return g;
}

MarkedGraph bowtie_graph() {
    Graph g(5);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(1, 2);
    g.add_edge(0, 3);
    g.add_edge(0, 4);
    g.add_edge(3, 4);
    return {g, {{"v", 0}, {"v1", 1}, {"v2", 2}, {"v3", 3}, {"v4", 4}}};
}

MarkedGraph windmill33_graph() {
    Graph g(7);
    for (int w = 0; w < 3; ++w) {
        int a = 1 + 2 * w;
        int b = 2 + 2 * w;
        g.add_edge(0, a);
        g.add_edge(0, b);
        g.add_edge(a, b);
    }
    return {g, {{"p", 0}}};
}

Graph near_path_graph(int path_len, int attach_at) {
    if (path_len < 1) throw std::invalid_argument("near path needs a nonempty path");
    if (attach_at < 0 || attach_at >= path_len)
        throw std::invalid_argument("near path attachment must lie on the path");
    Graph g = path_graph(path_len).with_vertex(std::uint64_t{1} << attach_at);
    return g;
}

Graph subdivision_of_complete(int n, const std::vector<int>& per_edge) {
    if (n < 1) throw std::invalid_argument("subdivision base must be nonempty");
    std::size_t m = static_cast<std::size_t>(n) * (n - 1) / 2;
    if (per_edge.size() != m)
        throw std::invalid_argument("subdivision needs one count per edge of K_n");
    int total = n;
    for (int c : per_edge) {
        if (c < 0) throw std::invalid_argument("subdivision counts must be nonnegative");
        total += c;
    }
    if (total > Graph::max_order) throw std::invalid_argument("subdivision exceeds order bound");
    Graph g(total);
    int next = n;
    std::size_t e = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++e) {
            int prev = u;
            for (int i = 0; i < per_edge[e]; ++i) {
                g.add_edge(prev, next);
                prev = next++;
            }
            g.add_edge(prev, v);
        }
    return g;
}

std::optional<int> diameter(const Graph& g) {
    int best = 0;
    for (int v = 0; v < g.order(); ++v) {
        auto dist = g.distances_from(v);
        for (int d : dist) {
            if (d < 0) return std::nullopt;
            best = std::max(best, d);
        }
    }
    return best;
}

std::optional<int> dominating_vertex(const Graph& g) {
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == g.order() - 1) return v;
    return std::nullopt;
}

std::vector<std::pair<int, int>> edges_not_in_triangle(const Graph& g) {
    std::vector<std::pair<int, int>> out;
    for (auto [u, v] : g.edges())
        if (g.common_neighbors(u, v) == 0) out.emplace_back(u, v);
    return out;
}

std::optional<StronglyRegularParams> strongly_regular_params(const Graph& g) {
    if (g.order() < 2 || g.edge_count() == 0)
        throw std::invalid_argument("strongly regular parameters need an edge");
    if (g.edge_count() == static_cast<std::size_t>(g.order()) * (g.order() - 1) / 2)
        throw std::invalid_argument("strongly regular parameters undefined for complete graphs");
    if (!g.connected())
        throw std::invalid_argument("strongly regular parameters need a connected graph");
    int k = g.degree(0);
    int lambda = -1, mu = -1;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) != k) return std::nullopt;
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v) {
            int c = std::popcount(g.common_neighbors(u, v));
            int& slot = g.has_edge(u, v) ? lambda : mu;
            if (slot < 0)
                slot = c;
            else if (slot != c)
                return std::nullopt;
        }
    return StronglyRegularParams{k, lambda < 0 ? 0 : lambda, mu < 0 ? 0 : mu};
}

namespace {

bool extend_matching(const Graph& g, std::uint64_t used, int want,
                     std::vector<std::pair<int, int>>& acc) {
    if (want == 0) return true;
    // Branch on the lowest free vertex: match it or discard it.
    std::uint64_t free = g.vertex_mask() & ~used;
    while (free) {
        int u = std::countr_zero(free);
        std::uint64_t partners = g.neighbors(u) & ~used;
        while (partners) {
            int v = std::countr_zero(partners);
            partners &= partners - 1;
            acc.emplace_back(u, v);
            if (extend_matching(g, used | (std::uint64_t{1} << u) | (std::uint64_t{1} << v), want - 1, acc))
                return true;
            acc.pop_back();
        }
        used |= std::uint64_t{1} << u;  // u stays unmatched
        free &= free - 1;
    }
    return false;
}

}  // namespace

std::optional<std::vector<std::pair<int, int>>> find_matching(const Graph& g, int want) {
    std::vector<std::pair<int, int>> acc;
    if (extend_matching(g, 0, want, acc)) return acc;
    return std::nullopt;
}

bool has_center_with_matching(const Graph& g, int size) {
    for (int c = 0; c < g.order(); ++c) {
        if (g.degree(c) < 2 * size) continue;
        if (find_matching(g.induced(g.neighbors(c)), size)) return true;
    }
    return false;
}

std::vector<int> mask_to_vertices(std::uint64_t mask) {
    std::vector<int> out;
    while (mask) {
        out.push_back(std::countr_zero(mask));
        mask &= mask - 1;
    }
    return out;
}

std::uint64_t vertices_to_mask(const std::vector<int>& vs) {
    std::uint64_t mask = 0;
    for (int v : vs) mask |= std::uint64_t{1} << v;
    return mask;
}

}  // namespace wfc
