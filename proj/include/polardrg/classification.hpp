#pragma once

#include "polardrg/classical_params.hpp"

#include <optional>
#include <string>
#include <vector>

namespace polardrg {

struct Hypotheses {
    bool b_lt_minus1 = false;
    bool a1_nonzero = false;
    bool c2_gt_1 = false;

    bool all() const { return b_lt_minus1 && a1_nonzero && c2_gt_1; }
    std::vector<std::string> failed() const;
};

/// Flags for b < -1, a_1 != 0 and c_2 > 1, with a_1 and c_2 taken from the
/// classical formulas for p.
Hypotheses check_hypotheses(const ClassicalParams& p);

enum class VerdictKind {
    DualPolarHermitian,
    HermitianForms,
    Case3,
    TianSporadic,
    TianNearHexagon,
    HypothesesNotMet,
    Unrecognized,
};

enum class Case3Status { Nonexistent, OpenQ3, RankTwo };

struct Verdict {
    VerdictKind kind = VerdictKind::Unrecognized;
    std::int64_t q = 0;                 // DualPolarHermitian, HermitianForms, Case3
    int d = 0;                          // Case3
    Case3Status status = Case3Status::RankTwo;
    std::string name;                   // TianSporadic
    std::vector<std::string> failed;    // HypothesesNotMet
    std::vector<std::string> trace;

    /// e.g. "Case3.Nonexistent", "TianSporadic".
    std::string tag() const;

    /// Same verdict, ignoring the trace.
    bool same_as(const Verdict& o) const
    {
        return kind == o.kind && q == o.q && d == o.d && status == o.status && name == o.name && failed == o.failed;
    }
};

/// Total: never throws for valid parameters.
Verdict classify(const ClassicalParams& p);

/// Rational roots of a polynomial with rational coefficients (low-to-high).
/// Returns nullopt for the zero polynomial.
std::optional<std::vector<Rational>> rational_roots(std::vector<Rational> coeffs);

struct Exclusion {
    int tian_case = 0;            // 1..4
    std::string equation;         // the matching condition, symbolic in q
    std::string instance;         // both sides evaluated at the actual q
    std::optional<Rational> forced_q;
    std::string reason;
};

/// Why (3, -q, -(q+1)/2, -((-q)^3+1)/2) matches none of the four d = 3
/// cases. Throws NotFamilyParams for any other input.
std::vector<Exclusion> exclusion_trace(const ClassicalParams& p);

} // namespace polardrg
