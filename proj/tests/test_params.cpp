#include "doctest.h"
#include "oracles.hpp"

#include "polardrg/classical_params.hpp"
#include "polardrg/error.hpp"

#include <algorithm>

using namespace polardrg;
using oracle::ratio;

namespace {

ClassicalParams P(int d, std::int64_t b, Rational alpha, Rational beta)
{
    return ClassicalParams::make(d, Integer(b), std::move(alpha), std::move(beta));
}

ClassicalParams P(int d, std::int64_t b, std::int64_t alpha, std::int64_t beta)
{
    return P(d, b, ratio(alpha), ratio(beta));
}

bool contains(const std::vector<ClassicalParams>& v, const ClassicalParams& p)
{
    return std::find(v.begin(), v.end(), p) != v.end();
}

IntersectionArray arr_of(std::vector<std::int64_t> b, std::vector<std::int64_t> c)
{
    IntersectionArray a;
    a.d = static_cast<int>(b.size());
    a.b = b;
    a.c = c;
    for (int i = 0; i < a.d; ++i)
        a.a.push_back(b[0] - (i + 1 < a.d ? b[i + 1] : 0) - c[i]);
    return a;
}

void check_against_oracle(const ClassicalParams& p)
{
    const auto arr = intersection_array_from(p);
    const auto raw = oracle::classical_array(p.d, p.b, p.alpha, p.beta);
    REQUIRE(arr.d == p.d);
    for (int i = 0; i < p.d; ++i)
        REQUIRE(raw.b[i] == ratio(arr.b[i]));
    for (int i = 1; i <= p.d; ++i) {
        REQUIRE(raw.c[i] == ratio(arr.c[i - 1]));
        REQUIRE(raw.a[i] == ratio(arr.a[i - 1]));
    }
}

std::vector<ClassicalParams> battery()
{
    std::vector<ClassicalParams> out;
    for (int d : {2, 3})
        for (int q : {2, 3}) {
            out.push_back(dual_polar_params(d, q));
            out.push_back(dual_polar_params_negative(d, q));
            out.push_back(hermitian_forms_params(d, q));
        }
    out.push_back(P(3, -2, -3, 8));
    out.push_back(P(3, -2, -4, 10));
    for (int q : {2, 3, 4, 5})
        out.push_back(dual_polar_params_negative(3, q));
    for (int q : {3, 5, 7, 9})
        for (int d = 2; d <= 6; ++d)
            out.push_back(negative_type_family(d, q).params);
    return out;
}

} // namespace

TEST_CASE("rational parsing")
{
    CHECK(parse_rational("3") == ratio(3));
    CHECK(parse_rational("-7/2") == ratio(-7, 2));
    CHECK(parse_rational("4/-6") == ratio(-2, 3));
    CHECK(to_string(ratio(-7, 2)) == "-7/2");
    CHECK(to_string(ratio(6, 3)) == "2");
    for (const char* bad : {"", "1/0", "x", "1/2/3", "3.5"})
        CHECK_THROWS_AS(parse_rational(bad), Error);
    CHECK(frac(2, -4) == ratio(-1, 2));
    CHECK_THROWS_AS(frac(1, 0), Error);
}

TEST_CASE("classical params validation")
{
    CHECK_THROWS_AS(P(2, 0, 0, 1), Error);
    CHECK_THROWS_AS(P(2, -1, 0, 1), Error);
    CHECK_THROWS_AS(P(0, 2, 0, 1), Error);
    CHECK(P(2, -2, 0, 1).negative_type());
    CHECK_FALSE(P(2, 4, 0, 2).negative_type());
    CHECK(to_string(P(2, -3, -2, -5)) == "(2,-3,-2,-5)");
}

TEST_CASE("bracket")
{
    for (std::int64_t b = -6; b <= 6; ++b)
        for (int i = 0; i <= 12; ++i)
            REQUIRE(bracket(i, Integer(b)) == oracle::bracket_sum(i, Integer(b)));
    CHECK(bracket(3, Integer(-2)) == 3);
    CHECK(bracket(0, Integer(17)) == 0);
    CHECK(bracket(1, Integer(-17)) == 1);
    CHECK(bracket(5, Integer(1)) == 5);
    CHECK(bracket(40, Integer(-7)) == oracle::bracket_sum(40, Integer(-7)));
}

TEST_CASE("intersection arrays from parameters")
{
    const auto h34 = intersection_array_from(P(2, 4, 0, 2));
    CHECK(to_string(h34) == "{10,8;1,5}");
    CHECK(h34.a == std::vector<std::int64_t>{1, 5});
    const auto gew = intersection_array_from(P(2, -3, -2, -5));
    CHECK(to_string(gew) == "{10,9;1,2}");
    CHECK(gew.a == std::vector<std::int64_t>{0, 8});
    CHECK(to_string(intersection_array_from(P(3, -2, -3, 8))) == "{24,22,20;1,2,12}");
    CHECK(to_string(intersection_array_from(P(3, -2, -4, 10))) == "{30,28,24;1,3,15}");
    CHECK(to_string(intersection_array_from(P(3, -2, -3, 7))) == "{21,20,16;1,2,12}");
    for (const auto& p : battery()) {
        CAPTURE(to_string(p));
        check_against_oracle(p);
    }
    CHECK_THROWS_AS(intersection_array_from(P(2, 2, ratio(1, 3), ratio(1))), Error);
    CHECK_THROWS_AS(intersection_array_from(P(2, 2, 0, -3)), Error);
    CHECK_FALSE(try_intersection_array_from(P(2, 2, 0, -3)));
    CHECK(try_intersection_array_from(P(2, 4, 0, 2)));
}

TEST_CASE("dual polar parameter pairs give identical arrays")
{
    for (int d : {2, 3})
        for (int q : {2, 3}) {
            CAPTURE(d);
            CAPTURE(q);
            const auto pos = dual_polar_params(d, q);
            const auto neg = dual_polar_params_negative(d, q);
            CHECK(pos == P(d, q * q, 0, q));
            CHECK(neg.b == -q);
            CHECK(neg.alpha == ratio(-q * (q + 1), q - 1));
            CHECK(neg.beta == Rational(-q * (oracle::power(-q, d) + 1)) / (q - 1));
            CHECK(intersection_array_from(pos) == intersection_array_from(neg));
        }
}

TEST_CASE("fit_params")
{
    const auto fits = fit_params(intersection_array_from(P(2, 4, 0, 2)));
    CHECK(fits == std::vector<ClassicalParams>{P(2, -2, -6, -10), P(2, 4, 0, 2)});
    CHECK(fit_params(arr_of({21, 20, 16}, {1, 2, 12})) == std::vector<ClassicalParams>{P(3, -2, -3, 7)});
    CHECK(fit_params(arr_of({2, 1}, {1, 1})).empty());
    CHECK_THROWS_AS(fit_params(arr_of({3}, {1})), Error);
}

TEST_CASE("fit_params round trip and agreement with the plain scan")
{
    for (const auto& p : battery()) {
        CAPTURE(to_string(p));
        const auto arr = intersection_array_from(p);
        const auto fits = fit_params(arr);
        CHECK(contains(fits, p));
        CHECK(std::is_sorted(fits.begin(), fits.end(), [](const auto& x, const auto& y) { return x.b < y.b; }));
        if (arr.k() <= 20000) {
            const auto scan = oracle::scan_fits(arr);
            REQUIRE(scan.size() == fits.size());
            for (std::size_t i = 0; i < scan.size(); ++i) {
                CHECK(scan[i].b == fits[i].b);
                CHECK(scan[i].alpha == fits[i].alpha);
                CHECK(scan[i].beta == fits[i].beta);
            }
        }
        const bool dual_polar = std::any_of(fits.begin(), fits.end(), [](const auto& f) { return f.alpha == 0; });
        if (p.d >= 3 && !dual_polar)
            CHECK(fits.size() == 1);
        if (p.d >= 3 && dual_polar)
            CHECK(fits.size() == 2);
    }
}

TEST_CASE("fit_params agrees with the scan on arbitrary small arrays")
{
    // Random feasible-looking arrays of diameter 2: every fit found by the
    // bounded scan must be found by fit_params and vice versa.
    std::size_t with_fits = 0;
    for (std::int64_t k = 2; k <= 30; ++k)
        for (std::int64_t b1 = 1; b1 < k; ++b1)
            for (std::int64_t c2 = 1; c2 <= k; ++c2) {
                const auto arr = arr_of({k, b1}, {1, c2});
                const auto fits = fit_params(arr);
                const auto scan = oracle::scan_fits(arr);
                REQUIRE(fits.size() == scan.size());
                for (std::size_t i = 0; i < fits.size(); ++i)
                    REQUIRE(fits[i].b == scan[i].b);
                with_fits += fits.empty() ? 0 : 1;
            }
    CHECK(with_fits > 0);
}

TEST_CASE("negative type family")
{
    const auto f23 = negative_type_family(2, 3);
    CHECK(f23.params == P(2, -3, -2, -5));
    CHECK(f23.a1 == 0);
    CHECK(f23.c2 == 2);
    const auto f35 = negative_type_family(3, 5);
    CHECK(f35.params == P(3, -5, -3, 62));
    CHECK(f35.a1 == 1);
    CHECK(f35.c2 == 8);
    CHECK(negative_type_family(4, 3).params == P(4, -3, -2, -41));
    CHECK(negative_type_family(4, 5).params == P(4, -5, -3, -313));
    CHECK_THROWS_AS(negative_type_family(3, 4), Error);
    CHECK_THROWS_AS(negative_type_family(3, 15), Error);
}

TEST_CASE("family constants a_1 and c_2 do not depend on d")
{
    for (int q = 3; q <= 31; q += 2) {
        if (!prime_power(q))
            continue;
        for (int d = 2; d <= 6; ++d) {
            const auto arr = intersection_array_from(negative_type_family(d, q).params);
            REQUIRE(arr.a[0] == (q - 3) / 2);
            REQUIRE(arr.c[1] == (q - 1) * (q - 1) / 2);
        }
    }
}

TEST_CASE("reduction shift")
{
    const auto p = negative_type_family(4, 3).params;
    CHECK(reduction_shift(p, 4) == p);
    CHECK(reduction_shift(p, 3) == P(3, -3, -2, 13));
    CHECK(reduction_shift(negative_type_family(5, 5).params, 2) == P(2, -5, -3, -13));
    CHECK_THROWS_AS(reduction_shift(p, 0), Error);
    CHECK_THROWS_AS(reduction_shift(p, 5), Error);
    for (int q : {3, 5, 7, 9, 11})
        for (int d = 1; d <= 8; ++d)
            for (int t = 1; t <= d; ++t) {
                const auto fam = ClassicalParams::make(d, Integer(-q), ratio(-(q + 1), 2), Rational(oracle::family_beta(q, d)));
                const auto s = reduction_shift(fam, t);
                REQUIRE(s.d == t);
                REQUIRE(s.beta == Rational(oracle::family_beta(q, t)));
            }
}
