#pragma once

#include "polardrg/bitset.hpp"
#include "polardrg/field.hpp"
#include "polardrg/matrix.hpp"

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace polardrg {

class PolarGeometry;

/// Simple undirected graph with one adjacency bitset per vertex.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n);
    explicit Graph(std::vector<std::string> labels);

    std::size_t size() const noexcept { return adj_.size(); }
    std::size_t edge_count() const;
    std::size_t degree(std::size_t v) const { return adj_[v].count(); }

    void add_edge(std::size_t u, std::size_t v);
    bool adjacent(std::size_t u, std::size_t v) const { return adj_[u].test(v); }
    const Bitset& neighbours(std::size_t v) const { return adj_[v]; }
    const std::vector<std::string>& labels() const noexcept { return labels_; }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<std::string> labels_;
    std::vector<Bitset> adj_;
};

/// {b_0..b_{d-1}; c_1..c_d} together with a_1..a_d.
struct IntersectionArray {
    int d = 0;
    std::vector<std::int64_t> b;
    std::vector<std::int64_t> c;
    std::vector<std::int64_t> a;

    std::int64_t k() const { return b.empty() ? 0 : b.front(); }
    friend bool operator==(const IntersectionArray&, const IntersectionArray&) = default;
};

std::string to_string(const IntersectionArray& arr);

/// Witness that a graph is not distance-regular: with i = dist(v, w), the
/// count `which` ('a', 'b', 'c', or 'd' for an eccentricity mismatch) at
/// (v, w) differs from the one seen at the reference vertex 0.
struct Counterexample {
    std::size_t v = 0;
    std::size_t w = 0;
    int distance = 0;
    char which = 'c';
    std::int64_t found = 0;
    std::int64_t expected = 0;

    friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

using DrgResult = std::variant<IntersectionArray, Counterexample>;

/// Generators of H(2d-1, q^2) adjacent when they meet in vector rank d-1.
/// Throws OddAmbientDimension for odd n.
Graph build_dual_polar_graph(PolarGeometry& geometry);

inline constexpr std::int64_t default_vertex_bound = 100000;

/// All q^(d^2) Hermitian d x d matrices over GF(q^2), ordered by
/// (diagonal entries as GF(q) positions, strictly-upper entries by index).
std::vector<MatrixGF> hermitian_matrices(int d, const Field& f, std::int64_t vertex_bound = default_vertex_bound);

/// Hermitian matrices adjacent when their difference has rank 1.
Graph build_hermitian_forms_graph(int d, std::int64_t q, std::int64_t vertex_bound = default_vertex_bound);

/// BFS layers Gamma_0(v), Gamma_1(v), ... up to the eccentricity of v.
std::vector<Bitset> distance_partition(const Graph& g, std::size_t v);

/// Throws Disconnected if the graph is not connected.
DrgResult check_distance_regular(const Graph& g, int workers = 1);

/// Throws EmptySet if `subset` is empty.
Graph induced_subgraph(const Graph& g, const Bitset& subset);

} // namespace polardrg
