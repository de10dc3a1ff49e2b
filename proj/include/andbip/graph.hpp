#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace andbip {

using Vertex = int;

/// Undirected edge, stored normalized with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b);  // normalizes; throws on a == b

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

std::string to_string(const Edge& e);  // "{v0,v1}"

/// Finite set of normalized edges. Backed by a sorted unique vector, so
/// iteration order is deterministic and set algebra is exact.
class EdgeSet {
public:
    EdgeSet() = default;
    explicit EdgeSet(std::vector<Edge> edges);

    bool insert(Edge e);  // true if newly added
    bool contains(Edge e) const;
    std::size_t size() const { return edges_.size(); }
    bool empty() const { return edges_.empty(); }

    const std::vector<Edge>& edges() const { return edges_; }
    auto begin() const { return edges_.begin(); }
    auto end() const { return edges_.end(); }

    EdgeSet set_union(const EdgeSet& other) const;
    EdgeSet set_difference(const EdgeSet& other) const;
    EdgeSet set_intersection(const EdgeSet& other) const;

    friend bool operator==(const EdgeSet&, const EdgeSet&) = default;
    friend auto operator<=>(const EdgeSet&, const EdgeSet&) = default;

private:
    std::vector<Edge> edges_;  // sorted, unique
};

std::string to_string(const EdgeSet& s);

/// Two-coloring of (a subset of) the vertex set. Classes are disjoint
/// sorted vertex lists.
struct Bipartition {
    std::vector<Vertex> class_a;
    std::vector<Vertex> class_b;

    bool in_a(Vertex v) const;
    bool in_b(Vertex v) const;
    /// True iff every vertex of {0,..,n-1} is in exactly one class.
    bool covers(int n) const;

    friend bool operator==(const Bipartition&, const Bipartition&) = default;
};

/// Ordered closed walk on distinct vertices; odd length certifies
/// non-bipartiteness of the host graph.
struct CycleWitness {
    std::vector<Vertex> vertices;

    std::size_t length() const { return vertices.size(); }
    bool odd() const { return vertices.size() % 2 == 1; }
    std::vector<Edge> edges() const;   // consecutive pairs, cyclically
    EdgeSet edge_set() const;

    friend bool operator==(const CycleWitness&, const CycleWitness&) = default;
};

std::string to_string(const CycleWitness& c);

/// Simple undirected graph on vertices 0..n-1. Adjacency is a per-vertex
/// bitset sized to n, so adjacency queries and the solver's cut counting
/// are word-parallel. Immutable once built; mutation is single-threaded.
class Graph {
public:
    explicit Graph(int n = 0);

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }

    bool adjacent(Vertex u, Vertex v) const;
    /// Inserts {u,v}; idempotent on repeats. Rejects self-loops and
    /// out-of-range indices with distinct errors.
    bool add_edge(Vertex u, Vertex v);
    bool remove_edge(Vertex u, Vertex v);  // true if present

    int degree(Vertex u) const;
    std::vector<Vertex> neighbors(Vertex u) const;  // ascending
    std::vector<Edge> edges() const;                // sorted
    EdgeSet edge_set() const;

    /// Raw adjacency row for word-parallel kernels.
    const std::uint64_t* row(Vertex u) const { return bits_.data() + static_cast<std::size_t>(u) * words_; }
    int row_words() const { return words_; }

    friend bool operator==(const Graph& a, const Graph& b);

private:
    void check_vertex(Vertex v) const;

    int n_ = 0;
    int m_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> bits_;
};

/// Returns a copy of g with the edges of f removed. In strict mode every
/// edge of f must be present in g; in lenient mode missing edges are
/// ignored.
Graph remove_edges(const Graph& g, const EdgeSet& f, bool strict = true);

using TwoColorResult = std::variant<Bipartition, CycleWitness>;

/// BFS 2-coloring. On success the bipartition is canonical per component:
/// the lowest-index vertex of each component goes to class A, and the scan
/// order is deterministic (ascending indices). On failure returns an odd
/// cycle valid in g.
TwoColorResult two_color(const Graph& g);

bool is_bipartite(const Graph& g);

/// Shortest odd cycle through e, or nullopt if none exists. The witness
/// starts with e (smaller endpoint first); among shortest cycles the
/// completion path is lexicographically smallest. Found by BFS over
/// (vertex, parity) layers in g - e; exact whenever g - e is bipartite,
/// with a bounded-depth fallback search otherwise.
std::optional<CycleWitness> find_odd_cycle_through_edge(const Graph& g, Edge e);

/// "v{i}" — the vertex spelling used by all reports.
std::string vertex_name(Vertex v);

}  // namespace andbip
