#pragma once

#include "polardrg/graph.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <vector>

namespace polardrg {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "N", "-N" or "N/M".
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& r);

/// Classical parameters (d, b, alpha, beta); b is an integer outside {0, -1}.
struct ClassicalParams {
    int d = 0;
    Integer b;
    Rational alpha;
    Rational beta;

    /// Throws InvalidParams when d < 1 or b in {0, -1}.
    static ClassicalParams make(int d, Integer b, Rational alpha, Rational beta);

    bool negative_type() const { return b < -1; }

    friend bool operator==(const ClassicalParams&, const ClassicalParams&) = default;
};

std::string to_string(const ClassicalParams& p);

/// [i]_b = 1 + b + ... + b^(i-1).
Integer bracket(int i, const Integer& b);

/// The three formulas, evaluated exactly for any index (no feasibility checks).
Rational classical_a(const ClassicalParams& p, int i);
Rational classical_b(const ClassicalParams& p, int i);
Rational classical_c(const ClassicalParams& p, int i);

/// Throws NonIntegralArray or NonPositiveEntry when the parameters do not
/// describe a feasible array, TooLarge when an entry overflows 64 bits.
IntersectionArray intersection_array_from(const ClassicalParams& p);
/// Non-throwing variant.
std::optional<IntersectionArray> try_intersection_array_from(const ClassicalParams& p);

/// Every quadruple with integer b reproducing `arr`, sorted by b.
/// Requires arr.d >= 2.
std::vector<ClassicalParams> fit_params(const IntersectionArray& arr);

struct FamilyParams {
    ClassicalParams params;
    Integer a1;
    Integer c2;
};

/// (d, -q, -(q+1)/2, -((-q)^d+1)/2) for odd prime powers q, with the
/// d-independent a_1 = (q-3)/2 and c_2 = (q-1)^2/2 checked against the array.
FamilyParams negative_type_family(int d, std::int64_t q);

/// (t, b, alpha, beta + alpha([d]_b - [t]_b)), 1 <= t <= d.
ClassicalParams reduction_shift(const ClassicalParams& p, int t);

/// Dual polar graph of H(2d-1, q^2): (d, q^2, 0, q) and the negative-type form.
ClassicalParams dual_polar_params(int d, std::int64_t q);
ClassicalParams dual_polar_params_negative(int d, std::int64_t q);
/// Hermitian forms graph on d x d matrices: (d, -q, -q-1, -(-q)^d-1).
ClassicalParams hermitian_forms_params(int d, std::int64_t q);

Integer ipow(const Integer& base, int exp);
/// num/den, reduced. Both arguments are evaluated before construction.
Rational frac(const Integer& num, const Integer& den);

} // namespace polardrg
