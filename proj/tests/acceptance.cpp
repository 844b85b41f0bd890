// Acceptance runner: prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include "oracles.hpp"

#include "polardrg/classical_params.hpp"
#include "polardrg/classification.hpp"
#include "polardrg/graph.hpp"
#include "polardrg/hemisystem.hpp"
#include "polardrg/polar_space.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

using namespace polardrg;
using oracle::ratio;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void expect(bool cond, const std::string& what)
    {
        if (!cond) {
            ok = false;
            detail += (detail.empty() ? "" : "; ") + what;
        }
    }
};

ClassicalParams P(int d, std::int64_t b, std::int64_t alpha, std::int64_t beta)
{
    return ClassicalParams::make(d, Integer(b), ratio(alpha), ratio(beta));
}

bool has(const std::vector<ClassicalParams>& v, const ClassicalParams& p)
{
    return std::find(v.begin(), v.end(), p) != v.end();
}

std::string show(const std::vector<ClassicalParams>& v)
{
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? " " : "") + to_string(v[i]);
    return s + "]";
}

std::optional<IntersectionArray> drg(const Graph& g)
{
    const auto r = check_distance_regular(g);
    if (const auto* a = std::get_if<IntersectionArray>(&r))
        return *a;
    return std::nullopt;
}

Outcome c1()
{
    Outcome o;
    PolarGeometry geom(HermitianSpace(4, make_field(2)));
    const Graph g = build_dual_polar_graph(geom);
    o.expect(g.size() == 27, "vertex count " + std::to_string(g.size()));
    const auto arr = drg(g);
    o.expect(arr && to_string(*arr) == "{10,8;1,5}", "array");
    if (arr) {
        const auto fits = fit_params(*arr);
        o.expect(fits == std::vector<ClassicalParams>{P(2, -2, -6, -10), P(2, 4, 0, 2)}, "fits " + show(fits));
    }
    return o;
}

Outcome c2()
{
    Outcome o;
    PolarGeometry geom(HermitianSpace(6, make_field(2)));
    const Graph g = build_dual_polar_graph(geom);
    o.expect(g.size() == 891, "vertex count " + std::to_string(g.size()));
    o.expect(distance_partition(g, 0).size() == 4, "diameter");
    const auto arr = drg(g);
    o.expect(arr && arr->d == 3, "not distance-regular of diameter 3");
    if (arr) {
        o.expect(*arr == intersection_array_from(P(3, 4, 0, 2)), "array " + to_string(*arr));
        const auto fits = fit_params(*arr);
        o.expect(has(fits, P(3, 4, 0, 2)) && has(fits, P(3, -2, -6, 14)), "fits " + show(fits));
    }
    return o;
}

Outcome c3()
{
    Outcome o;
    struct Case {
        int d, q;
        std::size_t n;
        const char* array;
    };
    for (const Case c : {Case{2, 2, 16, "{5,4;1,2}"}, Case{2, 3, 81, "{20,18;1,6}"}, Case{3, 2, 512, "{21,20,16;1,2,12}"}}) {
        const Graph g = build_hermitian_forms_graph(c.d, c.q);
        const std::string tag = "(" + std::to_string(c.d) + "," + std::to_string(c.q) + ") ";
        o.expect(g.size() == c.n, tag + "vertex count");
        const auto arr = drg(g);
        o.expect(arr && to_string(*arr) == c.array, tag + "array");
        if (arr)
            o.expect(*arr == intersection_array_from(hermitian_forms_params(c.d, c.q)), tag + "formula mismatch");
        if (arr && c.d == 3) {
            const auto fits = fit_params(*arr);
            o.expect(fits == std::vector<ClassicalParams>{P(3, -2, -3, 7)}, tag + "fits " + show(fits));
        }
    }
    return o;
}

Outcome c4()
{
    Outcome o;
    int checked = 0;
    for (int q : {3, 5, 7, 9, 11})
        for (int d = 1; d <= 8; ++d) {
            const auto fam = ClassicalParams::make(d, Integer(-q), ratio(-(q + 1), 2), Rational(oracle::family_beta(q, d)));
            for (int t = 1; t <= d; ++t) {
                const auto s = reduction_shift(fam, t);
                ++checked;
                if (s.d != t || s.b != fam.b || s.alpha != fam.alpha || s.beta != Rational(oracle::family_beta(q, t)))
                    o.expect(false, "q=" + std::to_string(q) + " d=" + std::to_string(d) + " t=" + std::to_string(t));
            }
        }
    o.expect(checked == 5 * 36, "case count");
    return o;
}

Outcome c5()
{
    Outcome o;
    int checked = 0;
    for (int q = 3; q <= 31; q += 2) {
        if (!prime_power(q))
            continue;
        for (int d = 2; d <= 6; ++d) {
            const auto fam = negative_type_family(d, q);
            const auto arr = intersection_array_from(fam.params);
            ++checked;
            const std::int64_t a1 = (q - 3) / 2, c2 = (q - 1) * (q - 1) / 2;
            o.expect(arr.a[0] == a1 && arr.c[1] == c2 && fam.a1 == a1 && fam.c2 == c2,
                     "q=" + std::to_string(q) + " d=" + std::to_string(d));
        }
    }
    o.expect(checked == 13 * 5, "case count " + std::to_string(checked));
    return o;
}

Outcome c6()
{
    Outcome o;
    for (int d : {4, 5, 6})
        for (int q : {5, 7, 9}) {
            const auto v = classify(negative_type_family(d, q).params);
            o.expect(v.tag() == "Case3.Nonexistent" && v.q == q && v.d == d,
                     "d=" + std::to_string(d) + " q=" + std::to_string(q) + " gave " + v.tag());
        }
    for (int d = 3; d <= 8; ++d)
        o.expect(classify(negative_type_family(d, 3).params).tag() == "Case3.OpenQ3", "q=3 d=" + std::to_string(d));
    const auto golay = classify(P(3, -2, -3, 8));
    o.expect(golay.kind == VerdictKind::TianSporadic && golay.name == "extended ternary Golay code graph", "Golay");
    const auto witt = classify(P(3, -2, -4, 10));
    o.expect(witt.kind == VerdictKind::TianSporadic && witt.name == "large Witt graph", "Witt");
    for (int q : {5, 7}) {
        const auto ex = exclusion_trace(negative_type_family(3, q).params);
        for (int want : {1, 4}) {
            const auto it = std::find_if(ex.begin(), ex.end(), [&](const Exclusion& e) { return e.tian_case == want; });
            o.expect(it != ex.end() && it->forced_q && *it->forced_q == ratio(-1),
                     "q=" + std::to_string(q) + " case (" + std::to_string(want) + ")");
        }
    }
    return o;
}

Outcome c7()
{
    Outcome o;
    PolarGeometry geom(HermitianSpace(4, make_field(3)));
    SearchConfig cfg;
    cfg.deterministic = true;
    cfg.max_nodes = 10'000'000;
    const auto r = search_hemisystem(geom, 0, cfg);
    const auto* found = std::get_if<SearchFound>(&r);
    o.expect(found != nullptr, "search did not find a hemisystem");
    if (!found)
        return o;
    const auto& h = found->hemisystem;
    o.expect(h.members.count() == 56, "size " + std::to_string(h.members.count()));
    o.expect(found->nodes <= 10'000'000, "nodes");
    o.expect(verify_hemisystem(geom, h.members, 0).pass(), "verify");
    const auto rep = vanhove_pipeline(geom, h);
    const auto* arr = std::get_if<IntersectionArray>(&rep.drg);
    o.expect(arr && to_string(*arr) == "{10,9;1,2}", "array");
    o.expect(arr && arr->a[0] == 0 && arr->c[1] == 2, "a1/c2");
    o.expect(has(rep.fits, P(2, -3, -2, -5)), "fits " + show(rep.fits));
    o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(found->nodes) + " nodes";
    return o;
}

Outcome c8()
{
    Outcome o;
    PolarGeometry geom(HermitianSpace(4, make_field(2)));
    const auto r = search_hemisystem(geom, 0);
    const auto* inf = std::get_if<SearchInfeasible>(&r);
    o.expect(inf != nullptr, "not Infeasible");
    if (inf) {
        o.expect(inf->witness_unit.has_value(), "no witness");
        o.expect(inf->witness_count % 2 == 1, "witness count even");
        if (inf->witness_unit)
            o.expect(geom.generators_through(1)[*inf->witness_unit].size() == inf->witness_count, "witness count wrong");
    }
    return o;
}

Outcome c9()
{
    Outcome o;
    for (auto [n, q, want] : {std::tuple{4, 2, 27}, std::tuple{4, 3, 112}, std::tuple{6, 2, 891}}) {
        const auto gens = enumerate_isotropic(HermitianSpace(n, make_field(q)), n / 2);
        const auto got = static_cast<int>(gens.size());
        o.expect(got == want && got % q == 1, "H(" + std::to_string(n - 1) + "," + std::to_string(q) + "^2) " + std::to_string(got));
    }
    return o;
}

Outcome c10()
{
    Outcome o;
    for (int q : {2, 3, 4, 5}) {
        const auto f = make_field(q);
        const auto pf = oracle::poly_field(*f);
        const int s = f->size();
        bool ok = s == q * q;
        int fixed = 0;
        for (int a = 0; a < s && ok; ++a) {
            const Elem x = static_cast<Elem>(a);
            ok = ok && f->add(x, 0) == x && f->mul(x, 1) == x && f->add(x, f->neg(x)) == 0;
            ok = ok && (x == 0 || f->mul(x, f->inv(x)) == 1);
            ok = ok && f->conj(f->conj(x)) == x && f->conj(x) == pf.pow(x, q);
            fixed += f->conj(x) == x ? 1 : 0;
            for (int b = 0; b < s && ok; ++b) {
                const Elem y = static_cast<Elem>(b);
                ok = ok && f->add(x, y) == pf.add(x, y) && f->mul(x, y) == pf.mul(x, y);
                ok = ok && f->add(x, y) == f->add(y, x) && f->mul(x, y) == f->mul(y, x);
                ok = ok && f->conj(f->mul(x, y)) == f->mul(f->conj(x), f->conj(y));
                ok = ok && f->conj(f->add(x, y)) == f->add(f->conj(x), f->conj(y));
                for (int c = 0; c < s && ok; ++c) {
                    const Elem z = static_cast<Elem>(c);
                    ok = ok && f->add(f->add(x, y), z) == f->add(x, f->add(y, z));
                    ok = ok && f->mul(f->mul(x, y), z) == f->mul(x, f->mul(y, z));
                    ok = ok && f->mul(x, f->add(y, z)) == f->add(f->mul(x, y), f->mul(x, z));
                }
            }
        }
        ok = ok && fixed == q && static_cast<int>(f->subfield().size()) == q;
        for (Elem x : f->subfield())
            for (Elem y : f->subfield())
                ok = ok && f->in_subfield(f->add(x, y)) && f->in_subfield(f->mul(x, y));
        o.expect(ok, "q=" + std::to_string(q));
    }
    return o;
}

struct Criterion {
    int id;
    const char* title;
    double limit_s;
    std::function<Outcome()> run;
};

} // namespace

int main()
{
    const Criterion criteria[] = {
        {1, "dual polar graph H(3,4): 27 vertices, {10,8;1,5}, two fits", 5, c1},
        {2, "dual polar graph H(5,4): 891 vertices, diameter 3, array and fits", 120, c2},
        {3, "Hermitian forms graphs (2,2), (2,3), (3,2)", 120, c3},
        {4, "reduction identity for q in {3,5,7,9,11}, 1 <= t <= d <= 8", 1, c4},
        {5, "family constants a_1 and c_2 for odd q in [3,31], d in [2,6]", 1, c5},
        {6, "classification verdicts and exclusion traces", 60, c6},
        {7, "H(3,9) hemisystem search, verify and pipeline", 120, c7},
        {8, "H(3,4) search is infeasible with an odd-count witness", 1, c8},
        {9, "generator counts 27, 112, 891 are 1 mod q", 120, c9},
        {10, "field tables for q in {2,3,4,5}", 10, c10},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.expect(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        o.expect(secs < c.limit_s, "time limit " + std::to_string(c.limit_s) + " s exceeded");
        failures += o.ok ? 0 : 1;
        std::printf("%s  %2d  %-68s %8.3f s%s%s\n", o.ok ? "PASS" : "FAIL", c.id, c.title, secs,
                    o.detail.empty() ? "" : "  ", o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failures, std::size(criteria));
    return failures == 0 ? 0 : 1;
}
