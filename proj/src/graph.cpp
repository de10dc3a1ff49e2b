#include "andbip/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace andbip {

Edge::Edge(Vertex a, Vertex b) {
    if (a == b) {
        throw std::invalid_argument("self-loop: edge endpoints must differ (" + vertex_name(a) + ")");
    }
    u = std::min(a, b);
    v = std::max(a, b);
}

std::string to_string(const Edge& e) {
    return "{" + vertex_name(e.u) + "," + vertex_name(e.v) + "}";
}

EdgeSet::EdgeSet(std::vector<Edge> edges) : edges_(std::move(edges)) {
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool EdgeSet::insert(Edge e) {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it != edges_.end() && *it == e) return false;
    edges_.insert(it, e);
    return true;
}

bool EdgeSet::contains(Edge e) const {
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

EdgeSet EdgeSet::set_union(const EdgeSet& other) const {
    EdgeSet out;
    out.edges_.reserve(size() + other.size());
    std::set_union(edges_.begin(), edges_.end(), other.edges_.begin(), other.edges_.end(),
                   std::back_inserter(out.edges_));
    return out;
}

EdgeSet EdgeSet::set_difference(const EdgeSet& other) const {
    EdgeSet out;
    std::set_difference(edges_.begin(), edges_.end(), other.edges_.begin(), other.edges_.end(),
                        std::back_inserter(out.edges_));
    return out;
}

EdgeSet EdgeSet::set_intersection(const EdgeSet& other) const {
    EdgeSet out;
    std::set_intersection(edges_.begin(), edges_.end(), other.edges_.begin(), other.edges_.end(),
                          std::back_inserter(out.edges_));
    return out;
}

std::string to_string(const EdgeSet& s) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const Edge& e : s) {
        if (!first) os << ", ";
        os << to_string(e);
        first = false;
    }
    os << "}";
    return os.str();
}

bool Bipartition::in_a(Vertex v) const {
    return std::binary_search(class_a.begin(), class_a.end(), v);
}

bool Bipartition::in_b(Vertex v) const {
    return std::binary_search(class_b.begin(), class_b.end(), v);
}

bool Bipartition::covers(int n) const {
    if (class_a.size() + class_b.size() != static_cast<std::size_t>(n)) return false;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (Vertex v : class_a) {
        if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) return false;
        seen[static_cast<std::size_t>(v)] = 1;
    }
    for (Vertex v : class_b) {
        if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) return false;
        seen[static_cast<std::size_t>(v)] = 1;
    }
    return true;
}

std::vector<Edge> CycleWitness::edges() const {
    std::vector<Edge> out;
    out.reserve(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        out.emplace_back(vertices[i], vertices[(i + 1) % vertices.size()]);
    }
    return out;
}

EdgeSet CycleWitness::edge_set() const {
    return EdgeSet(edges());
}

std::string to_string(const CycleWitness& c) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < c.vertices.size(); ++i) {
        if (i) os << " ";
        os << vertex_name(c.vertices[i]);
    }
    os << ")";
    return os.str();
}

Graph::Graph(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
    words_ = (n + 63) / 64;
    bits_.assign(static_cast<std::size_t>(n) * words_, 0);
}

void Graph::check_vertex(Vertex v) const {
    if (v < 0 || v >= n_) {
        throw std::invalid_argument("vertex index out of range: " + vertex_name(v) +
                                    " (n=" + std::to_string(n_) + ")");
    }
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    return (row(u)[v >> 6] >> (v & 63)) & 1u;
}

bool Graph::add_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) {
        throw std::invalid_argument("self-loop: edge endpoints must differ (" + vertex_name(u) + ")");
    }
    if (adjacent(u, v)) return false;
    bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
    bits_[static_cast<std::size_t>(v) * words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
    ++m_;
    return true;
}

bool Graph::remove_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v || !adjacent(u, v)) return false;
    bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] &= ~(std::uint64_t{1} << (v & 63));
    bits_[static_cast<std::size_t>(v) * words_ + (u >> 6)] &= ~(std::uint64_t{1} << (u & 63));
    --m_;
    return true;
}

int Graph::degree(Vertex u) const {
    check_vertex(u);
    int d = 0;
    const std::uint64_t* r = row(u);
    for (int w = 0; w < words_; ++w) d += std::popcount(r[w]);
    return d;
}

std::vector<Vertex> Graph::neighbors(Vertex u) const {
    check_vertex(u);
    std::vector<Vertex> out;
    const std::uint64_t* r = row(u);
    for (int w = 0; w < words_; ++w) {
        std::uint64_t bits = r[w];
        while (bits) {
            int b = std::countr_zero(bits);
            out.push_back(w * 64 + b);
            bits &= bits - 1;
        }
    }
    return out;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (Vertex u = 0; u < n_; ++u) {
        for (Vertex v : neighbors(u)) {
            if (u < v) out.emplace_back(u, v);
        }
    }
    return out;
}

EdgeSet Graph::edge_set() const {
    return EdgeSet(edges());
}

bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.m_ == b.m_ && a.bits_ == b.bits_;
}

Graph remove_edges(const Graph& g, const EdgeSet& f, bool strict) {
    Graph out = g;
    for (const Edge& e : f) {
        if (!out.remove_edge(e.u, e.v) && strict) {
            throw std::invalid_argument("edge not in graph: " + to_string(e));
        }
    }
    return out;
}

namespace {

// Closes the BFS tree cycle created by a same-color edge {u,v}: walk both
// parent chains to their lowest common ancestor.
CycleWitness close_tree_cycle(const std::vector<Vertex>& parent, const std::vector<int>& depth,
                              Vertex u, Vertex v) {
    std::vector<Vertex> pu{u};
    std::vector<Vertex> pv{v};
    Vertex a = u;
    Vertex b = v;
    while (depth[static_cast<std::size_t>(a)] > depth[static_cast<std::size_t>(b)]) {
        a = parent[static_cast<std::size_t>(a)];
        pu.push_back(a);
    }
    while (depth[static_cast<std::size_t>(b)] > depth[static_cast<std::size_t>(a)]) {
        b = parent[static_cast<std::size_t>(b)];
        pv.push_back(b);
    }
    while (a != b) {
        a = parent[static_cast<std::size_t>(a)];
        b = parent[static_cast<std::size_t>(b)];
        pu.push_back(a);
        pv.push_back(b);
    }
    // pu = u..lca, pv = v..lca; output lca..u, then v..(child of lca).
    CycleWitness c;
    c.vertices.assign(pu.rbegin(), pu.rend());
    c.vertices.insert(c.vertices.end(), pv.begin(), pv.end() - 1);
    return c;
}

}  // namespace

TwoColorResult two_color(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    std::vector<Vertex> parent(static_cast<std::size_t>(n), -1);
    std::vector<int> depth(static_cast<std::size_t>(n), 0);

    for (Vertex s = 0; s < n; ++s) {
        if (color[static_cast<std::size_t>(s)] != -1) continue;
        color[static_cast<std::size_t>(s)] = 0;  // component root goes to class A
        std::deque<Vertex> queue{s};
        while (!queue.empty()) {
            Vertex u = queue.front();
            queue.pop_front();
            for (Vertex v : g.neighbors(u)) {
                if (color[static_cast<std::size_t>(v)] == -1) {
                    color[static_cast<std::size_t>(v)] = 1 - color[static_cast<std::size_t>(u)];
                    parent[static_cast<std::size_t>(v)] = u;
                    depth[static_cast<std::size_t>(v)] = depth[static_cast<std::size_t>(u)] + 1;
                    queue.push_back(v);
                } else if (color[static_cast<std::size_t>(v)] == color[static_cast<std::size_t>(u)]) {
                    return close_tree_cycle(parent, depth, u, v);
                }
            }
        }
    }

    Bipartition p;
    for (Vertex v = 0; v < n; ++v) {
        (color[static_cast<std::size_t>(v)] == 0 ? p.class_a : p.class_b).push_back(v);
    }
    return p;
}

bool is_bipartite(const Graph& g) {
    return std::holds_alternative<Bipartition>(two_color(g));
}

namespace {

constexpr int kUnreached = -1;

// Depth-limited search for the lexicographically smallest simple even path
// from `from` to `to` in g - banned, used only when the layered BFS walk
// revisits a vertex (impossible when g - e is bipartite).
bool lex_simple_path(const Graph& g, Edge banned, Vertex at, Vertex to, int remaining,
                     std::vector<char>& used, std::vector<Vertex>& path) {
    if (remaining == 0) return at == to;
    if (at == to) return false;
    for (Vertex y : g.neighbors(at)) {
        if (used[static_cast<std::size_t>(y)]) continue;
        if (Edge(at, y) == banned) continue;
        used[static_cast<std::size_t>(y)] = 1;
        path.push_back(y);
        if (lex_simple_path(g, banned, y, to, remaining - 1, used, path)) return true;
        path.pop_back();
        used[static_cast<std::size_t>(y)] = 0;
    }
    return false;
}

}  // namespace

std::optional<CycleWitness> find_odd_cycle_through_edge(const Graph& g, Edge e) {
    if (!g.adjacent(e.u, e.v)) {
        throw std::invalid_argument("edge not in graph: " + to_string(e));
    }
    const int n = g.vertex_count();

    // dist[x][p]: shortest walk length from e.u to x with parity p, in g - e.
    std::vector<std::array<int, 2>> dist(static_cast<std::size_t>(n), {kUnreached, kUnreached});
    std::deque<std::pair<Vertex, int>> queue;
    dist[static_cast<std::size_t>(e.u)][0] = 0;
    queue.emplace_back(e.u, 0);
    while (!queue.empty()) {
        auto [x, p] = queue.front();
        queue.pop_front();
        int d = dist[static_cast<std::size_t>(x)][p];
        for (Vertex y : g.neighbors(x)) {
            if (Edge(x, y) == e) continue;
            if (dist[static_cast<std::size_t>(y)][1 - p] == kUnreached) {
                dist[static_cast<std::size_t>(y)][1 - p] = d + 1;
                queue.emplace_back(y, 1 - p);
            }
        }
    }

    const int len = dist[static_cast<std::size_t>(e.v)][0];  // even walk e.v -> e.u
    if (len == kUnreached) return std::nullopt;

    // Greedy reconstruction: from e.v, always step to the smallest neighbor
    // that stays on a shortest even walk to e.u.
    std::vector<Vertex> walk{e.v};
    Vertex at = e.v;
    bool simple = true;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    seen[static_cast<std::size_t>(e.v)] = 1;
    for (int remaining = len; remaining > 0; --remaining) {
        const int want = remaining - 1;
        Vertex next = -1;
        for (Vertex y : g.neighbors(at)) {
            if (Edge(at, y) == e) continue;
            if (dist[static_cast<std::size_t>(y)][want & 1] == want) {
                next = y;
                break;  // neighbors come ascending
            }
        }
        at = next;
        walk.push_back(at);
        if (seen[static_cast<std::size_t>(at)]) simple = false;
        seen[static_cast<std::size_t>(at)] = 1;
    }

    if (!simple) {
        // Non-bipartite g - e can force the layered walk through a repeated
        // vertex; fall back to iterative deepening over simple paths.
        for (int target = len; target <= n; target += 2) {
            std::vector<char> used(static_cast<std::size_t>(n), 0);
            used[static_cast<std::size_t>(e.v)] = 1;
            std::vector<Vertex> path{e.v};
            if (lex_simple_path(g, e, e.v, e.u, target, used, path)) {
                walk = std::move(path);
                walk.push_back(e.u);
                break;
            }
            if (target == n || target + 2 > n) return std::nullopt;
        }
    }

    // walk = e.v .. e.u; the witness starts with the queried edge.
    CycleWitness c;
    c.vertices.reserve(walk.size());
    c.vertices.push_back(e.u);
    c.vertices.insert(c.vertices.end(), walk.begin(), walk.end() - 1);
    return c;
}

std::string vertex_name(Vertex v) {
    return "v" + std::to_string(v);
}

}  // namespace andbip
