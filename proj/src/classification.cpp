#include "polardrg/classification.hpp"

#include "polardrg/error.hpp"
#include "polardrg/field.hpp"

#include <algorithm>
#include <boost/multiprecision/integer.hpp>

namespace polardrg {

std::vector<std::string> Hypotheses::failed() const
{
    std::vector<std::string> out;
    if (!b_lt_minus1)
        out.emplace_back("b < -1");
    if (!a1_nonzero)
        out.emplace_back("a_1 != 0");
    if (!c2_gt_1)
        out.emplace_back("c_2 > 1");
    return out;
}

Hypotheses check_hypotheses(const ClassicalParams& p)
{
    return Hypotheses{p.b < -1, classical_a(p, 1) != 0, classical_c(p, 2) > 1};
}

std::string Verdict::tag() const
{
    switch (kind) {
    case VerdictKind::DualPolarHermitian: return "DualPolarHermitian";
    case VerdictKind::HermitianForms: return "HermitianForms";
    case VerdictKind::Case3:
        switch (status) {
        case Case3Status::Nonexistent: return "Case3.Nonexistent";
        case Case3Status::OpenQ3: return "Case3.OpenQ3";
        case Case3Status::RankTwo: return "Case3.RankTwo";
        }
        break;
    case VerdictKind::TianSporadic: return "TianSporadic";
    case VerdictKind::TianNearHexagon: return "TianNearHexagon";
    case VerdictKind::HypothesesNotMet: return "HypothesesNotMet";
    case VerdictKind::Unrecognized: return "Unrecognized";
    }
    return "Unrecognized";
}

namespace {

using Poly = std::vector<Rational>;

void trim(Poly& p)
{
    while (!p.empty() && p.back() == 0)
        p.pop_back();
}

Poly pmul(const Poly& a, const Poly& b)
{
    if (a.empty() || b.empty())
        return {};
    Poly r(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

Poly psub(Poly a, const Poly& b)
{
    if (a.size() < b.size())
        a.resize(b.size(), Rational(0));
    for (std::size_t i = 0; i < b.size(); ++i)
        a[i] -= b[i];
    trim(a);
    return a;
}

Rational peval(const Poly& p, const Rational& x)
{
    Rational acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

std::vector<Integer> divisors(Integer n)
{
    if (n < 0)
        n = -n;
    std::vector<Integer> out;
    for (Integer k = 1; k * k <= n; ++k)
        if (n % k == 0) {
            out.push_back(k);
            if (k * k != n)
                out.push_back(n / k);
        }
    return out;
}

/// A rational function num(q)/den(q).
struct RationalFn {
    Poly num;
    Poly den;
    std::string text;
};

struct Solution {
    std::optional<Rational> forced;
    std::string detail;
};

Solution solve_equal(const RationalFn& lhs, const RationalFn& rhs)
{
    const Poly cross = psub(pmul(lhs.num, rhs.den), pmul(rhs.num, lhs.den));
    const auto roots = rational_roots(cross);
    Solution s;
    if (!roots) {
        s.detail = "identity in q";
        return s;
    }
    std::vector<Rational> admissible;
    for (const auto& r : *roots)
        if (peval(lhs.den, r) != 0 && peval(rhs.den, r) != 0)
            admissible.push_back(r);
    if (admissible.size() == 1)
        s.forced = admissible.front();
    s.detail = "cross-multiplied to a polynomial with rational roots {";
    for (std::size_t i = 0; i < admissible.size(); ++i)
        s.detail += (i ? ", " : "") + to_string(admissible[i]);
    s.detail += "}";
    return s;
}

std::optional<std::int64_t> as_prime_power(const Integer& x)
{
    if (x < 2 || x > Integer(1) << 40)
        return std::nullopt;
    const auto v = static_cast<std::int64_t>(x);
    if (!prime_power(v))
        return std::nullopt;
    return v;
}

std::optional<std::int64_t> match_dual_polar(const ClassicalParams& c)
{
    if (c.b > 0) {
        const Integer root = boost::multiprecision::sqrt(c.b);
        if (root * root != c.b)
            return std::nullopt;
        auto q = as_prime_power(root);
        if (q && c == dual_polar_params(c.d, *q))
            return q;
        return std::nullopt;
    }
    auto q = as_prime_power(-c.b);
    if (q && c == dual_polar_params_negative(c.d, *q))
        return q;
    return std::nullopt;
}

std::optional<std::int64_t> match_hermitian_forms(const ClassicalParams& c)
{
    auto q = as_prime_power(-c.b);
    if (q && c == hermitian_forms_params(c.d, *q))
        return q;
    return std::nullopt;
}

std::optional<std::int64_t> match_family(const ClassicalParams& c)
{
    auto q = as_prime_power(-c.b);
    if (!q || *q % 2 == 0 || c.d < 2)
        return std::nullopt;
    if (c == negative_type_family(c.d, *q).params)
        return q;
    return std::nullopt;
}

struct Sporadic {
    const char* name;
    int alpha;
    int beta;
};
constexpr Sporadic sporadics[] = {
    {"extended ternary Golay code graph", -3, 8},
    {"large Witt graph", -4, 10},
};

} // namespace

std::optional<std::vector<Rational>> rational_roots(std::vector<Rational> coeffs)
{
    trim(coeffs);
    if (coeffs.empty())
        return std::nullopt;
    std::vector<Rational> roots;
    if (coeffs.front() == 0) {
        roots.emplace_back(0);
        while (coeffs.front() == 0)
            coeffs.erase(coeffs.begin());
    }
    Integer lcm = 1;
    for (const auto& c : coeffs)
        lcm = boost::multiprecision::lcm(lcm, denominator(c));
    std::vector<Integer> ints;
    for (const auto& c : coeffs)
        ints.push_back(numerator(Rational(c * lcm)));

    for (const auto& r : divisors(ints.front()))
        for (const auto& s : divisors(ints.back()))
            for (int sign : {-1, 1}) {
                const Rational x = frac(Integer(sign) * r, s);
                if (peval(coeffs, x) == 0 && std::find(roots.begin(), roots.end(), x) == roots.end())
                    roots.push_back(x);
            }
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::vector<Exclusion> exclusion_trace(const ClassicalParams& p)
{
    const auto q = p.d == 3 ? match_family(p) : std::nullopt;
    if (!q)
        throw Error(ErrorCode::NotFamilyParams, to_string(p) + " is not (3, -q, -(q+1)/2, -((-q)^3+1)/2) for odd q");
    const Rational qv(*q);
    std::vector<Exclusion> out;

    {
        // Tian (1): alpha would have to equal the dual polar alpha.
        const RationalFn lhs{{Rational(-1), Rational(-1)}, {Rational(2)}, "-(q+1)/2"};
        const RationalFn rhs{{Rational(0), Rational(-1), Rational(-1)}, {Rational(-1), Rational(1)}, "-q(q+1)/(q-1)"};
        const auto sol = solve_equal(lhs, rhs);
        Exclusion e;
        e.tian_case = 1;
        e.equation = lhs.text + " = " + rhs.text;
        e.instance = to_string(peval(lhs.num, qv) / peval(lhs.den, qv)) + " vs " +
                     to_string(peval(rhs.num, qv) / peval(rhs.den, qv));
        e.forced_q = sol.forced;
        e.reason = sol.detail + "; q = " + (sol.forced ? to_string(*sol.forced) : std::string("?")) +
                   " is not a prime power";
        out.push_back(std::move(e));
    }
    for (int k = 0; k < 2; ++k) {
        Exclusion e;
        e.tian_case = 2 + k;
        e.equation = "-q = -2";
        e.instance = "-" + std::to_string(*q) + " vs -2";
        e.reason = std::string(sporadics[k].name) + " has b = -2, so q = 2 is even; q must be odd";
        out.push_back(std::move(e));
    }
    {
        // Tian (4): b = -a_1 - 1 with a_1 = (q-3)/2.
        const RationalFn lhs{{Rational(0), Rational(-1)}, {Rational(1)}, "-q"};
        const RationalFn rhs{{Rational(1, 2), Rational(-1, 2)}, {Rational(1)}, "-(q-3)/2 - 1"};
        const auto sol = solve_equal(lhs, rhs);
        Exclusion e;
        e.tian_case = 4;
        e.equation = lhs.text + " = " + rhs.text;
        e.instance = to_string(-qv) + " vs " + to_string(peval(rhs.num, qv));
        e.forced_q = sol.forced;
        e.reason = sol.detail + "; q = " + (sol.forced ? to_string(*sol.forced) : std::string("?")) +
                   " is not a prime power";
        out.push_back(std::move(e));
    }
    return out;
}

Verdict classify(const ClassicalParams& p)
{
    Verdict v;
    auto& trace = v.trace;
    if (p.d <= 1) {
        trace.push_back("diameter " + std::to_string(p.d) + " is below the classified range");
        return v;
    }

    std::vector<ClassicalParams> reps{p};
    const auto arr = try_intersection_array_from(p);
    if (arr) {
        trace.push_back("intersection array " + to_string(*arr));
        for (auto& f : fit_params(*arr))
            if (std::find(reps.begin(), reps.end(), f) == reps.end())
                reps.push_back(std::move(f));
    } else {
        trace.push_back("parameters do not give a feasible intersection array");
    }
    std::sort(reps.begin(), reps.end(), [](const auto& x, const auto& y) { return x.b < y.b; });
    {
        std::string line = "classical parameter sets:";
        for (const auto& r : reps)
            line += " " + to_string(r);
        trace.push_back(line);
    }

    for (const auto& r : reps)
        if (auto q = match_dual_polar(r)) {
            v.kind = VerdictKind::DualPolarHermitian;
            v.q = *q;
            trace.push_back("matches the dual polar graph of H(" + std::to_string(2 * p.d - 1) + ", " +
                            std::to_string(*q) + "^2) via " + to_string(r));
            return v;
        }
    for (const auto& r : reps)
        if (auto q = match_hermitian_forms(r)) {
            v.kind = VerdictKind::HermitianForms;
            v.q = *q;
            trace.push_back("matches the Hermitian forms graph on " + std::to_string(p.d) + "x" + std::to_string(p.d) +
                            " matrices over GF(" + std::to_string(*q) + "^2)");
            return v;
        }
    if (p.d == 3)
        for (const auto& r : reps)
            for (const auto& s : sporadics)
                if (r == ClassicalParams::make(3, -2, s.alpha, s.beta)) {
                    v.kind = VerdictKind::TianSporadic;
                    v.name = s.name;
                    trace.push_back(std::string("matches the ") + s.name);
                    return v;
                }

    for (const auto& r : reps) {
        const auto q = match_family(r);
        if (!q)
            continue;
        v.kind = VerdictKind::Case3;
        v.q = *q;
        v.d = p.d;
        trace.push_back("matches (d, -q, -(q+1)/2, -((-q)^d+1)/2) with q = " + std::to_string(*q));
        const auto fam = negative_type_family(p.d, *q);
        trace.push_back("a_1 = (q-3)/2 = " + fam.a1.str() + ", c_2 = (q-1)^2/2 = " + fam.c2.str());
        if (p.d == 2) {
            v.status = Case3Status::RankTwo;
            trace.push_back("d = 2 lies outside the d >= 3 classification");
            return v;
        }
        if (*q == 3) {
            v.status = Case3Status::OpenQ3;
            trace.push_back("q = 3 gives a_1 = 0, so the hypothesis a_1 != 0 fails; existence is open");
            return v;
        }
        v.status = Case3Status::Nonexistent;
        trace.push_back("hypotheses hold: b < -1, a_1 = " + fam.a1.str() + " != 0, c_2 = " + fam.c2.str() + " > 1");
        ClassicalParams at3 = r;
        if (p.d > 3) {
            at3 = reduction_shift(r, 3);
            trace.push_back("reduction to t = 3 gives " + to_string(at3) + " with the same a_1 and c_2");
        }
        for (const auto& e : exclusion_trace(at3))
            trace.push_back("excludes Tian case (" + std::to_string(e.tian_case) + "): " + e.equation + " [" +
                            e.instance + "]; " + e.reason);
        return v;
    }

    if (!arr) {
        trace.push_back("no listed family matches and the hypotheses cannot be evaluated");
        return v;
    }

    Hypotheses h = check_hypotheses(p);
    for (const auto& r : reps)
        h.b_lt_minus1 = h.b_lt_minus1 || r.b < -1;
    if (!h.all()) {
        v.kind = VerdictKind::HypothesesNotMet;
        v.failed = h.failed();
        std::string line = "failed hypotheses:";
        for (const auto& f : v.failed)
            line += " " + f;
        trace.push_back(line);
        return v;
    }

    if (p.d == 3 && arr) {
        const Integer a1(arr->a[0]);
        const Integer c2(arr->c[1]);
        const ClassicalParams hex{3, -a1 - 1, -frac(c2, a1) - 1, Rational((a1 + 1) * (c2 + a1 + 1))};
        if (std::find(reps.begin(), reps.end(), hex) != reps.end()) {
            v.kind = VerdictKind::TianNearHexagon;
            trace.push_back("matches the maximal near hexagon template " + to_string(hex) +
                            " (no existence claim)");
            return v;
        }
        trace.push_back("hypotheses hold but none of the four d = 3 cases match");
        return v;
    }
    trace.push_back("hypotheses hold but no listed family matches");
    return v;
}

} // namespace polardrg
