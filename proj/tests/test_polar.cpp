#include "doctest.h"
#include "oracles.hpp"

#include "polardrg/error.hpp"
#include "polardrg/polar_space.hpp"

#include <algorithm>
#include <random>
#include <set>

using namespace polardrg;

namespace {

Subspace random_subspace(std::mt19937& rng, int n, const Field& f)
{
    std::uniform_int_distribution<int> rows(0, n);
    std::uniform_int_distribution<int> elem(0, f.size() - 1);
    MatrixGF m(rows(rng), n);
    for (auto& e : m.entries)
        e = static_cast<Elem>(elem(rng));
    return Subspace::span(std::move(m), f);
}

MatrixGF row_vector(std::initializer_list<Elem> xs)
{
    MatrixGF m(1, static_cast<int>(xs.size()));
    std::copy(xs.begin(), xs.end(), m.entries.begin());
    return m;
}

std::int64_t gaussian_binomial(int n, int k, std::int64_t Q)
{
    std::int64_t num = 1, den = 1;
    for (int i = 0; i < k; ++i) {
        std::int64_t a = 1, b = 1;
        for (int j = 0; j < n - i; ++j)
            a *= Q;
        for (int j = 0; j < i + 1; ++j)
            b *= Q;
        num *= a - 1;
        den *= b - 1;
    }
    return num / den;
}

} // namespace

TEST_CASE("matrix helpers")
{
    const auto f = make_field(3);
    MatrixGF m(2, 3);
    m(0, 0) = 1;
    m(0, 1) = 2;
    m(1, 0) = 2;
    m(1, 1) = f->mul(2, 2);
    CHECK(rank(m, *f) == 1);
    const MatrixGF ns = null_space(m, *f);
    CHECK(ns.rows == 2);
    const MatrixGF prod = multiply(m, dagger(ns, *f), *f);
    CHECK(std::all_of(prod.entries.begin(), prod.entries.end(), [](Elem e) { return e == 0; }));
    CHECK(rank(MatrixGF::identity(4), *f) == 4);
    CHECK(stack(m, m).rows == 4);
    const MatrixGF dd = dagger(dagger(m, *f), *f);
    CHECK(dd == m);
}

TEST_CASE("hermitian_inner")
{
    const auto f2 = make_field(2);
    const HermitianSpace s2(2, f2);
    const std::vector<Elem> e1{1, 0}, zero{0, 0}, y{2, 3};
    CHECK(hermitian_inner(e1, e1, s2) == 1);
    CHECK(hermitian_inner(zero, y, s2) == 0);
    const std::vector<Elem> bad{1, 0, 0};
    CHECK_THROWS_AS(hermitian_inner(bad, e1, s2), Error);

    const auto f3 = make_field(3);
    const HermitianSpace s4(4, f3);
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> elem(0, 8);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Elem> x(4), w(4);
        for (auto& e : x)
            e = static_cast<Elem>(elem(rng));
        for (auto& e : w)
            e = static_cast<Elem>(elem(rng));
        REQUIRE(hermitian_inner(x, w, s4) == f3->conj(hermitian_inner(w, x, s4)));
        // linear in the second argument, semilinear in the first
        const Elem c = static_cast<Elem>(elem(rng));
        std::vector<Elem> cx(4), cw(4);
        for (int i = 0; i < 4; ++i) {
            cx[i] = f3->mul(c, x[i]);
            cw[i] = f3->mul(c, w[i]);
        }
        REQUIRE(hermitian_inner(x, cw, s4) == f3->mul(c, hermitian_inner(x, w, s4)));
        REQUIRE(hermitian_inner(cx, w, s4) == f3->mul(f3->conj(c), hermitian_inner(x, w, s4)));
    }
}

TEST_CASE("hermitian space validates its gram matrix")
{
    const auto f = make_field(3);
    MatrixGF g = MatrixGF::identity(2);
    g(0, 1) = 2;
    CHECK_THROWS_AS(HermitianSpace(2, f, g), Error);
    CHECK_THROWS_AS(HermitianSpace(2, f, MatrixGF(2, 2)), Error);
    CHECK_THROWS_AS(HermitianSpace(3, f, MatrixGF::identity(2)), Error);
    CHECK(HermitianSpace(2, f).identity_gram());
}

TEST_CASE("perp is an inclusion-reversing involution")
{
    for (auto [n, q] : {std::pair{4, 2}, std::pair{4, 3}, std::pair{5, 2}}) {
        CAPTURE(n);
        CAPTURE(q);
        const auto f = make_field(q);
        const HermitianSpace space(n, f);
        CHECK(perp(Subspace::full(n), space) == Subspace::zero(n));
        CHECK(perp(Subspace::zero(n), space) == Subspace::full(n));
        CHECK(is_totally_isotropic(Subspace::zero(n), space));
        CHECK_FALSE(is_totally_isotropic(Subspace::full(n), space));
        std::mt19937 rng(static_cast<unsigned>(n * 100 + q));
        for (int i = 0; i < 200; ++i) {
            const Subspace u = random_subspace(rng, n, *f);
            const Subspace pu = perp(u, space);
            REQUIRE(u.rank() + pu.rank() == n);
            REQUIRE(perp(pu, space) == u);
            const Subspace w = random_subspace(rng, n, *f);
            if (contains(w, u, *f))
                REQUIRE(contains(pu, perp(w, space), *f));
        }
    }
}

TEST_CASE("subspace canonical form and incidence")
{
    const auto f = make_field(2);
    MatrixGF m(2, 3);
    m(0, 0) = 1;
    m(0, 1) = 1;
    m(1, 0) = 1;
    m(1, 2) = 1;
    MatrixGF swapped(2, 3);
    std::copy(m.row(1).begin(), m.row(1).end(), swapped.row(0).begin());
    std::copy(m.row(0).begin(), m.row(0).end(), swapped.row(1).begin());
    const Subspace u = Subspace::span(m, *f);
    CHECK(u == Subspace::span(swapped, *f));
    CHECK(u.rank() == 2);
    CHECK(u.dimension() == 1);
    CHECK(incident(u, u, *f));
    CHECK(incident(Subspace::zero(3), u, *f));
    const Subspace p = Subspace::span(row_vector({0, 1, 1}), *f);
    CHECK(incident(p, u, *f));
    CHECK(intersection_rank(p, u, *f) == 1);
    const Subspace r = Subspace::span(row_vector({1, 0, 0}), *f);
    CHECK_FALSE(incident(r, u, *f));
    CHECK(intersection_rank(r, u, *f) == 0);
    const Subspace zero_span = Subspace::span(MatrixGF(2, 3), *f);
    CHECK(zero_span == Subspace::zero(3));
}

TEST_CASE("subspaces_of counts are gaussian binomials")
{
    const auto f = make_field(2);
    for (int r = 0; r <= 3; ++r)
        CHECK(static_cast<std::int64_t>(subspaces_of(Subspace::full(3), r, *f).size()) == gaussian_binomial(3, r, 4));
    const auto lines = subspaces_of(Subspace::full(3), 2, *f);
    CHECK(std::set<Subspace>(lines.begin(), lines.end()).size() == lines.size());
}

TEST_CASE("isotropic point counts match brute force")
{
    for (auto [n, q] : {std::pair{3, 2}, std::pair{4, 2}, std::pair{4, 3}, std::pair{5, 2}, std::pair{3, 4}}) {
        CAPTURE(n);
        CAPTURE(q);
        const auto f = make_field(q);
        const HermitianSpace space(n, f);
        const auto points = enumerate_isotropic(space, 1);
        CHECK(static_cast<std::int64_t>(points.size()) == oracle::isotropic_point_count(n, *f));
        for (const auto& p : points)
            REQUIRE(contains(perp(p, space), p, *f));
    }
}

TEST_CASE("generator enumeration")
{
    struct Case {
        int n, q;
        std::size_t generators;
    };
    for (const Case c : {Case{4, 2, 27}, Case{4, 3, 112}, Case{6, 2, 891}, Case{5, 2, 297}}) {
        CAPTURE(c.n);
        CAPTURE(c.q);
        const auto f = make_field(c.q);
        const HermitianSpace space(c.n, f);
        const auto gens = enumerate_isotropic(space, space.d_rank());
        CHECK(gens.size() == c.generators);
        CHECK(gens.size() % static_cast<std::size_t>(c.q) == 1);
        CHECK(std::is_sorted(gens.begin(), gens.end()));
        CHECK(std::adjacent_find(gens.begin(), gens.end()) == gens.end());
        for (const auto& g : gens) {
            REQUIRE(g.rank() == space.d_rank());
            REQUIRE(is_totally_isotropic(g, space));
            if (c.n % 2 == 0)
                REQUIRE(perp(g, space) == g);
        }
    }
}

TEST_CASE("generators of H(3,4) by pairing orthogonal points")
{
    const auto f = make_field(2);
    const HermitianSpace space(4, f);
    const auto points = enumerate_isotropic(space, 1);
    std::set<Subspace> lines;
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (hermitian_inner(points[i].basis().row(0), points[j].basis().row(0), space) == 0)
                lines.insert(Subspace::span(stack(points[i].basis(), points[j].basis()), *f));
    const auto gens = enumerate_isotropic(space, 2);
    CHECK(std::vector<Subspace>(lines.begin(), lines.end()) == gens);
}

TEST_CASE("enumerate_isotropic range and determinism")
{
    const auto f = make_field(3);
    const HermitianSpace space(4, f);
    CHECK_THROWS_AS(enumerate_isotropic(space, 3), Error);
    CHECK_THROWS_AS(enumerate_isotropic(space, -1), Error);
    CHECK(enumerate_isotropic(space, 0).size() == 1);
    CHECK(enumerate_isotropic(space, 2) == enumerate_isotropic(space, 2, 3));
    const auto ext = isotropic_extensions(Subspace::zero(4), space);
    CHECK(ext == enumerate_isotropic(space, 1));
}

TEST_CASE("each point of H(3,9) lies on q+1 generators")
{
    PolarGeometry geom(HermitianSpace(4, make_field(3)));
    const auto& through = geom.generators_through(1);
    REQUIRE(through.size() == 280);
    for (const auto& list : through)
        CHECK(list.size() == 4);
    // direct cross-check on the first few points
    const auto& pts = geom.stratum(1);
    const auto& gens = geom.generators();
    for (std::size_t i = 0; i < 10; ++i) {
        std::vector<std::size_t> direct;
        for (std::size_t g = 0; g < gens.size(); ++g)
            if (contains(gens[g], pts[i], geom.space().field()))
                direct.push_back(g);
        CHECK(direct == through[i]);
    }
    CHECK(geom.index_of(gens[5]) == std::optional<std::size_t>(5));
}
