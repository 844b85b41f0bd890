#include "polardrg/classical_params.hpp"

#include "polardrg/error.hpp"
#include "polardrg/field.hpp"

#include <algorithm>
#include <limits>
#include <regex>

namespace polardrg {

Rational parse_rational(const std::string& text)
{
    static const std::regex shape(R"([+-]?[0-9]+(/[+-]?[0-9]+)?)");
    if (!std::regex_match(text, shape))
        throw Error(ErrorCode::ParseError, "not a rational: '" + text + "'");
    try {
        const auto slash = text.find('/');
        if (slash == std::string::npos)
            return Rational(Integer(text));
        Integer num(text.substr(0, slash));
        Integer den(text.substr(slash + 1));
        if (den == 0)
            throw Error(ErrorCode::ParseError, "zero denominator in '" + text + "'");
        return frac(num, den);
    } catch (const std::runtime_error& ex) {
        if (dynamic_cast<const Error*>(&ex))
            throw;
        throw Error(ErrorCode::ParseError, "not a rational: '" + text + "'");
    }
}

std::string to_string(const Rational& r)
{
    if (denominator(r) == 1)
        return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

ClassicalParams ClassicalParams::make(int d, Integer b, Rational alpha, Rational beta)
{
    if (d < 1)
        throw Error(ErrorCode::InvalidParams, "diameter must be at least 1");
    if (b == 0 || b == -1)
        throw Error(ErrorCode::InvalidParams, "b must not be 0 or -1");
    return ClassicalParams{d, std::move(b), std::move(alpha), std::move(beta)};
}

std::string to_string(const ClassicalParams& p)
{
    return "(" + std::to_string(p.d) + "," + p.b.str() + "," + to_string(p.alpha) + "," + to_string(p.beta) + ")";
}

Rational frac(const Integer& num, const Integer& den)
{
    if (den == 0)
        throw Error(ErrorCode::InvalidParams, "zero denominator");
    // The Boost rational adaptor mishandles negative denominators.
    if (den < 0)
        return Rational(Integer(-num), Integer(-den));
    return Rational(num, den);
}

Integer ipow(const Integer& base, int exp)
{
    Integer r = 1;
    for (int i = 0; i < exp; ++i)
        r *= base;
    return r;
}

Integer bracket(int i, const Integer& b)
{
    Integer sum = 0;
    Integer term = 1;
    for (int k = 0; k < i; ++k) {
        sum += term;
        term *= b;
    }
    return sum;
}

Rational classical_a(const ClassicalParams& p, int i)
{
    const Integer bi = bracket(i, p.b);
    return Rational(bi) * (p.beta - 1 + p.alpha * Rational(bracket(p.d, p.b) - bi - bracket(i - 1, p.b)));
}

Rational classical_b(const ClassicalParams& p, int i)
{
    const Integer bi = bracket(i, p.b);
    return Rational(bracket(p.d, p.b) - bi) * (p.beta - p.alpha * Rational(bi));
}

Rational classical_c(const ClassicalParams& p, int i)
{
    return Rational(bracket(i, p.b)) * (1 + p.alpha * Rational(bracket(i - 1, p.b)));
}

namespace {

struct ArrayOutcome {
    std::optional<IntersectionArray> array;
    ErrorCode error = ErrorCode::InvalidParams;
    std::string message;
};

ArrayOutcome compute_array(const ClassicalParams& p)
{
    IntersectionArray arr;
    arr.d = p.d;
    auto fail = [](ErrorCode code, std::string msg) { return ArrayOutcome{std::nullopt, code, std::move(msg)}; };
    auto to_int = [](const Rational& r, std::int64_t& out) {
        const Integer& n = numerator(r);
        if (n > std::numeric_limits<std::int64_t>::max() || n < std::numeric_limits<std::int64_t>::min())
            return false;
        out = static_cast<std::int64_t>(n);
        return true;
    };

    const Rational b0 = classical_b(p, 0);
    for (int i = 0; i <= p.d; ++i) {
        const Rational bi = i < p.d ? classical_b(p, i) : Rational(0);
        const Rational ci = i > 0 ? classical_c(p, i) : Rational(0);
        const Rational ai = i > 0 ? classical_a(p, i) : Rational(0);
        for (const auto* x : {&ai, &bi, &ci})
            if (denominator(*x) != 1)
                return fail(ErrorCode::NonIntegralArray, "entry " + to_string(*x) + " at i = " + std::to_string(i));
        if (i < p.d && bi <= 0)
            return fail(ErrorCode::NonPositiveEntry, "b_" + std::to_string(i) + " = " + to_string(bi));
        if (i > 0 && ci <= 0)
            return fail(ErrorCode::NonPositiveEntry, "c_" + std::to_string(i) + " = " + to_string(ci));
        if (ai < 0)
            return fail(ErrorCode::NonPositiveEntry, "a_" + std::to_string(i) + " = " + to_string(ai));
        if (ai + bi + ci != b0)
            return fail(ErrorCode::NonIntegralArray, "a_i + b_i + c_i != b_0 at i = " + std::to_string(i));
        std::int64_t v = 0;
        if (i < p.d) {
            if (!to_int(bi, v))
                return fail(ErrorCode::TooLarge, "b_" + std::to_string(i) + " overflows");
            arr.b.push_back(v);
        }
        if (i > 0) {
            if (!to_int(ci, v))
                return fail(ErrorCode::TooLarge, "c_" + std::to_string(i) + " overflows");
            arr.c.push_back(v);
            if (!to_int(ai, v))
                return fail(ErrorCode::TooLarge, "a_" + std::to_string(i) + " overflows");
            arr.a.push_back(v);
        }
    }
    return ArrayOutcome{std::move(arr), ErrorCode::InvalidParams, {}};
}

std::vector<std::int64_t> positive_divisors(std::int64_t n)
{
    std::vector<std::int64_t> small, large;
    for (std::int64_t k = 1; k * k <= n; ++k) {
        if (n % k == 0) {
            small.push_back(k);
            if (k != n / k)
                large.push_back(n / k);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

} // namespace

IntersectionArray intersection_array_from(const ClassicalParams& p)
{
    auto out = compute_array(p);
    if (!out.array)
        throw Error(out.error, "parameters " + to_string(p) + ": " + out.message);
    return std::move(*out.array);
}

std::optional<IntersectionArray> try_intersection_array_from(const ClassicalParams& p)
{
    return compute_array(p).array;
}

std::vector<ClassicalParams> fit_params(const IntersectionArray& arr)
{
    if (arr.d < 2 || arr.b.size() != static_cast<std::size_t>(arr.d) || arr.c.size() != static_cast<std::size_t>(arr.d))
        throw Error(ErrorCode::PreconditionFailed, "fit_params needs a well-formed array with d >= 2");
    const std::int64_t b0 = arr.b[0];
    const std::int64_t b1 = arr.b[1];
    const std::int64_t c2 = arr.c[1];
    if (b1 <= 0)
        return {};

    // With alpha and beta eliminated through c_2 and b_0, b_1 becomes an
    // integer polynomial identity in b whose constant term is b_1. Every
    // integer solution therefore divides b_1.
    std::vector<ClassicalParams> out;
    for (std::int64_t k : positive_divisors(b1)) {
        for (std::int64_t cand : {-k, k}) {
            if (cand == -1)
                continue;
            const Integer b(cand);
            const Integer one_plus_b = b + 1;
            const Rational alpha = frac(Integer(c2), one_plus_b) - 1;
            const Rational beta = frac(Integer(b0), bracket(arr.d, b));
            const ClassicalParams p{arr.d, b, alpha, beta};
            if (auto fitted = compute_array(p).array; fitted && *fitted == arr)
                out.push_back(p);
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.b < y.b; });
    return out;
}

FamilyParams negative_type_family(int d, std::int64_t q)
{
    if (d < 2)
        throw Error(ErrorCode::InvalidParams, "family requires d >= 2");
    if (!prime_power(q))
        throw Error(ErrorCode::NotAPrimePower, std::to_string(q) + " is not a prime power");
    if (q % 2 == 0)
        throw Error(ErrorCode::EvenQ, "family requires odd q, got " + std::to_string(q));

    const Integer qq(q);
    FamilyParams fam{
        ClassicalParams::make(d, -qq, frac(-(qq + 1), 2), frac(-(ipow(-qq, d) + 1), 2)),
        (qq - 3) / 2,
        (qq - 1) * (qq - 1) / 2,
    };
    if (classical_a(fam.params, 1) != Rational(fam.a1) || classical_c(fam.params, 2) != Rational(fam.c2))
        throw Error(ErrorCode::VerificationFailed, "closed forms for a_1, c_2 disagree with the array");
    return fam;
}

ClassicalParams reduction_shift(const ClassicalParams& p, int t)
{
    if (t < 1 || t > p.d)
        throw Error(ErrorCode::TOutOfRange, "t = " + std::to_string(t) + " outside [1, " + std::to_string(p.d) + "]");
    return ClassicalParams{t, p.b, p.alpha, p.beta + p.alpha * Rational(bracket(p.d, p.b) - bracket(t, p.b))};
}

ClassicalParams dual_polar_params(int d, std::int64_t q)
{
    const Integer qq(q);
    return ClassicalParams::make(d, qq * qq, 0, Rational(qq));
}

ClassicalParams dual_polar_params_negative(int d, std::int64_t q)
{
    const Integer qq(q);
    return ClassicalParams::make(d, -qq, frac(-qq * (qq + 1), qq - 1), frac(-qq * (ipow(-qq, d) + 1), qq - 1));
}

ClassicalParams hermitian_forms_params(int d, std::int64_t q)
{
    const Integer qq(q);
    return ClassicalParams::make(d, -qq, Rational(-qq - 1), Rational(-ipow(-qq, d) - 1));
}

} // namespace polardrg
