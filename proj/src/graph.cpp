#include "polardrg/graph.hpp"

#include "polardrg/error.hpp"
#include "polardrg/polar_space.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <thread>

namespace polardrg {

Graph::Graph(std::size_t n)
    : labels_(n)
    , adj_(n, Bitset(n))
{
    for (std::size_t i = 0; i < n; ++i)
        labels_[i] = std::to_string(i);
}

Graph::Graph(std::vector<std::string> labels)
    : labels_(std::move(labels))
    , adj_(labels_.size(), Bitset(labels_.size()))
{
}

std::size_t Graph::edge_count() const
{
    std::size_t total = 0;
    for (const auto& row : adj_)
        total += row.count();
    return total / 2;
}

void Graph::add_edge(std::size_t u, std::size_t v)
{
    if (u == v)
        throw Error(ErrorCode::InvalidParams, "self-loops are not allowed");
    adj_[u].set(v);
    adj_[v].set(u);
}

std::string to_string(const IntersectionArray& arr)
{
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < arr.b.size(); ++i)
        os << (i ? "," : "") << arr.b[i];
    os << ';';
    for (std::size_t i = 0; i < arr.c.size(); ++i)
        os << (i ? "," : "") << arr.c[i];
    os << '}';
    return os.str();
}

namespace {

std::string matrix_label(const MatrixGF& m)
{
    std::string s;
    for (int r = 0; r < m.rows; ++r) {
        if (r)
            s += '|';
        for (int c = 0; c < m.cols; ++c) {
            if (c)
                s += ',';
            s += std::to_string(m(r, c));
        }
    }
    return s;
}

} // namespace

Graph build_dual_polar_graph(PolarGeometry& geometry)
{
    const HermitianSpace& space = geometry.space();
    if (space.n() % 2 != 0)
        throw Error(ErrorCode::OddAmbientDimension,
                    "dual polar graph needs even ambient dimension, got n = " + std::to_string(space.n()));
    const auto& gens = geometry.generators();
    std::vector<std::string> labels;
    labels.reserve(gens.size());
    for (const auto& g : gens)
        labels.push_back(matrix_label(g.basis()));
    Graph graph(std::move(labels));

    // Generators meeting in rank d-1 are exactly those sharing a rank-(d-1)
    // t.i. subspace; the generators through each one form a clique.
    const int d = space.d_rank();
    if (d < 1)
        return graph;
    for (const auto& clique : geometry.generators_through(d - 1))
        for (std::size_t i = 0; i < clique.size(); ++i)
            for (std::size_t j = i + 1; j < clique.size(); ++j)
                graph.add_edge(clique[i], clique[j]);
    return graph;
}

namespace {

struct HermitianLayout {
    int d;
    int q;
    int q2;
    std::vector<std::pair<int, int>> upper; // (row, col), row < col
    std::size_t positions() const { return static_cast<std::size_t>(d) + upper.size(); }
    int radix(std::size_t pos) const { return pos < static_cast<std::size_t>(d) ? q : q2; }
};

HermitianLayout layout_for(int d, const Field& f)
{
    HermitianLayout l{d, f.q(), f.size(), {}};
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j)
            l.upper.emplace_back(i, j);
    return l;
}

std::int64_t checked_count(int d, std::int64_t q, std::int64_t bound)
{
    std::int64_t count = 1;
    for (int i = 0; i < d * d; ++i) {
        count *= q;
        if (count > bound)
            throw Error(ErrorCode::TooLarge, "q^(d^2) exceeds vertex bound " + std::to_string(bound));
    }
    return count;
}

MatrixGF matrix_from_digits(const HermitianLayout& l, const std::vector<int>& digits, const Field& f)
{
    MatrixGF m(l.d, l.d);
    for (int i = 0; i < l.d; ++i)
        m(i, i) = f.subfield()[digits[i]];
    for (std::size_t k = 0; k < l.upper.size(); ++k) {
        auto [i, j] = l.upper[k];
        const Elem x = static_cast<Elem>(digits[l.d + k]);
        m(i, j) = x;
        m(j, i) = f.conj(x);
    }
    return m;
}

} // namespace

std::vector<MatrixGF> hermitian_matrices(int d, const Field& f, std::int64_t vertex_bound)
{
    if (d < 1)
        throw Error(ErrorCode::InvalidParams, "matrix size must be positive");
    const auto count = checked_count(d, f.q(), vertex_bound);
    const auto l = layout_for(d, f);
    std::vector<MatrixGF> out;
    out.reserve(static_cast<std::size_t>(count));
    std::vector<int> digits(l.positions(), 0);
    for (std::int64_t v = 0; v < count; ++v) {
        out.push_back(matrix_from_digits(l, digits, f));
        // Last position varies fastest.
        for (std::size_t pos = digits.size(); pos-- > 0;) {
            if (++digits[pos] < l.radix(pos))
                break;
            digits[pos] = 0;
        }
    }
    return out;
}

Graph build_hermitian_forms_graph(int d, std::int64_t q, std::int64_t vertex_bound)
{
    if (d < 1)
        throw Error(ErrorCode::InvalidParams, "matrix size must be positive");
    checked_count(d, q, vertex_bound);
    const auto field = make_field(q);
    const Field& f = *field;
    const auto l = layout_for(d, f);
    const auto mats = hermitian_matrices(d, f, vertex_bound);

    std::vector<std::string> labels;
    labels.reserve(mats.size());
    for (const auto& m : mats)
        labels.push_back(matrix_label(m));
    Graph graph(std::move(labels));

    auto digits_of = [&](const MatrixGF& m) {
        std::vector<int> dg(l.positions());
        for (int i = 0; i < d; ++i)
            dg[i] = f.subfield_position(m(i, i));
        for (std::size_t k = 0; k < l.upper.size(); ++k)
            dg[d + k] = m(l.upper[k].first, l.upper[k].second);
        return dg;
    };
    auto code_of = [&](const std::vector<int>& dg) {
        std::size_t code = 0;
        for (std::size_t pos = 0; pos < dg.size(); ++pos)
            code = code * static_cast<std::size_t>(l.radix(pos)) + static_cast<std::size_t>(dg[pos]);
        return code;
    };

    // The rank-1 Hermitian matrices are the differences that give edges.
    std::vector<const MatrixGF*> rank_one;
    for (const auto& m : mats)
        if (rank(m, f) == 1)
            rank_one.push_back(&m);

    for (std::size_t u = 0; u < mats.size(); ++u) {
        for (const MatrixGF* r : rank_one) {
            MatrixGF sum(d, d);
            for (std::size_t i = 0; i < sum.entries.size(); ++i)
                sum.entries[i] = f.add(mats[u].entries[i], r->entries[i]);
            const std::size_t v = code_of(digits_of(sum));
            if (v > u)
                graph.add_edge(u, v);
        }
    }
    return graph;
}

std::vector<Bitset> distance_partition(const Graph& g, std::size_t v)
{
    const std::size_t n = g.size();
    std::vector<Bitset> layers;
    Bitset seen(n);
    Bitset frontier(n);
    frontier.set(v);
    seen.set(v);
    while (frontier.any()) {
        layers.push_back(frontier);
        Bitset next(n);
        frontier.for_each([&](std::size_t x) { next |= g.neighbours(x); });
        next.subtract(seen);
        seen |= next;
        frontier = std::move(next);
    }
    return layers;
}

namespace {

struct Counts {
    std::int64_t a, b, c;
};

Counts counts_at(const Graph& g, const std::vector<Bitset>& layers, std::size_t w, int i)
{
    const auto& nb = g.neighbours(w);
    const int ecc = static_cast<int>(layers.size()) - 1;
    Counts k{};
    k.c = i > 0 ? static_cast<std::int64_t>(and_count(nb, layers[i - 1])) : 0;
    k.a = static_cast<std::int64_t>(and_count(nb, layers[i]));
    k.b = i < ecc ? static_cast<std::int64_t>(and_count(nb, layers[i + 1])) : 0;
    return k;
}

std::optional<Counterexample> first_violation(const Graph& g, std::size_t v, const std::vector<Counts>& ref)
{
    const auto layers = distance_partition(g, v);
    const int d = static_cast<int>(ref.size()) - 1;
    std::vector<int> dist(g.size(), -1);
    for (int i = 0; i < static_cast<int>(layers.size()); ++i)
        layers[i].for_each([&](std::size_t x) { dist[x] = i; });

    for (std::size_t w = 0; w < g.size(); ++w) {
        const int i = dist[w];
        if (i < 0)
            throw Error(ErrorCode::Disconnected, "vertex " + std::to_string(w) + " unreachable");
        if (i > d)
            return Counterexample{v, w, i, 'd', i, d};
        const Counts k = counts_at(g, layers, w, i);
        if (k.c != ref[i].c)
            return Counterexample{v, w, i, 'c', k.c, ref[i].c};
        if (k.a != ref[i].a)
            return Counterexample{v, w, i, 'a', k.a, ref[i].a};
        if (k.b != ref[i].b)
            return Counterexample{v, w, i, 'b', k.b, ref[i].b};
    }
    return std::nullopt;
}

} // namespace

DrgResult check_distance_regular(const Graph& g, int workers)
{
    const std::size_t n = g.size();
    if (n < 2)
        throw Error(ErrorCode::PreconditionFailed, "distance-regularity check needs at least 2 vertices");

    const auto layers0 = distance_partition(g, 0);
    std::size_t reached = 0;
    for (const auto& l : layers0)
        reached += l.count();
    if (reached != n)
        throw Error(ErrorCode::Disconnected, "graph is disconnected");

    // Reference counts from the first vertex of each layer around vertex 0.
    std::vector<Counts> ref;
    for (int i = 0; i < static_cast<int>(layers0.size()); ++i)
        ref.push_back(counts_at(g, layers0, layers0[i].indices().front(), i));

    workers = std::max(1, workers);
    std::vector<std::optional<Counterexample>> found(workers);
    auto run = [&](int wk) {
        for (std::size_t v = static_cast<std::size_t>(wk); v < n; v += static_cast<std::size_t>(workers)) {
            if (auto c = first_violation(g, v, ref)) {
                found[wk] = c;
                return;
            }
        }
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::jthread> pool;
        for (int wk = 0; wk < workers; ++wk)
            pool.emplace_back(run, wk);
    }

    std::optional<Counterexample> best;
    for (const auto& c : found)
        if (c && (!best || std::pair(c->v, c->w) < std::pair(best->v, best->w)))
            best = c;
    if (best)
        return *best;

    IntersectionArray arr;
    arr.d = static_cast<int>(ref.size()) - 1;
    for (int i = 0; i < arr.d; ++i)
        arr.b.push_back(ref[i].b);
    for (int i = 1; i <= arr.d; ++i) {
        arr.c.push_back(ref[i].c);
        arr.a.push_back(ref[i].a);
    }
    return arr;
}

Graph induced_subgraph(const Graph& g, const Bitset& subset)
{
    if (subset.none())
        throw Error(ErrorCode::EmptySet, "induced subgraph of the empty set");
    const auto keep = subset.indices();
    std::vector<std::string> labels;
    labels.reserve(keep.size());
    for (auto v : keep)
        labels.push_back(g.labels()[v]);
    Graph h(std::move(labels));
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = i + 1; j < keep.size(); ++j)
            if (g.adjacent(keep[i], keep[j]))
                h.add_edge(i, j);
    return h;
}

} // namespace polardrg
