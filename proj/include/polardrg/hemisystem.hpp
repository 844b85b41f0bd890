#pragma once

#include "polardrg/bitset.hpp"
#include "polardrg/classical_params.hpp"
#include "polardrg/graph.hpp"
#include "polardrg/polar_space.hpp"

#include "json.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace polardrg {

/// Totally isotropic k-spaces (projective dimension k) against generators.
struct IncidenceSystem {
    int level_k = 0;
    std::size_t generator_count = 0;
    std::vector<Bitset> incidence;                      // per unit, generators through it
    std::vector<std::vector<std::size_t>> unit_generators;
    std::vector<std::vector<std::size_t>> generator_units;

    std::size_t unit_count() const { return unit_generators.size(); }
};

/// Throws RankOutOfRange unless 0 <= k <= d_rank - 1.
IncidenceSystem build_incidence(PolarGeometry& geometry, int k);

struct Hemisystem {
    int n = 0;
    int q = 0;
    int level_k = 0;
    Bitset members;
};

nlohmann::json to_json(const Hemisystem& h);
/// Throws ParseError.
Hemisystem hemisystem_from_json(const nlohmann::json& j, std::size_t generator_count);

struct VerifyResult {
    enum class Status { Pass, Fail, EvenQ };
    Status status = Status::Pass;
    // Fail: first unit (canonical order) with the wrong count.
    std::size_t unit = 0;
    std::size_t found = 0;
    std::size_t required = 0;

    bool pass() const { return status == Status::Pass; }
};

/// Checks that S holds exactly half of the generators through every t.i.
/// k-space, 0 <= k <= d_rank - 2. Even q is refused before enumeration.
VerifyResult verify_hemisystem(PolarGeometry& geometry, const Bitset& members, int k);

struct LevelReport {
    int k = 0;
    std::size_t units = 0;
    VerifyResult result;
};

/// Verifies S at every level k' <= k. Throws PreconditionFailed unless S
/// passes at level k.
std::vector<LevelReport> monotone_check(PolarGeometry& geometry, const Bitset& members, int k);

struct SearchConfig {
    bool symmetry_fix = true;
    std::uint64_t max_nodes = 10'000'000;
    int worker_count = 1;
    /// With several workers, report the first success in depth-first order.
    bool deterministic = true;
};

struct SearchFound {
    Hemisystem hemisystem;
    std::uint64_t nodes = 0;
};

struct SearchInfeasible {
    std::uint64_t nodes = 0;
    std::string reason;
    /// Parity witness: a unit with an odd number of generators through it.
    std::optional<std::size_t> witness_unit;
    std::size_t witness_count = 0;
};

struct SearchBudgetExhausted {
    std::uint64_t nodes = 0;
};

using SearchResult = std::variant<SearchFound, SearchInfeasible, SearchBudgetExhausted>;

/// Depth-first search with quota propagation. Constraints from every level
/// k' <= k are enforced; branching takes the lowest undecided generator,
/// "chosen" first.
SearchResult search_hemisystem(PolarGeometry& geometry, int k, const SearchConfig& cfg = {});

struct PipelineReport {
    Graph subgraph;
    DrgResult drg;
    std::vector<ClassicalParams> fits;
    ClassicalParams expected;
    bool match = false;
};

/// Induced subgraph of the dual polar graph on a hemisystem w.r.t.
/// (d-2)-spaces, its intersection array and classical parameter fits.
/// Throws VerificationFailed when S is not such a hemisystem.
PipelineReport vanhove_pipeline(PolarGeometry& geometry, const Hemisystem& s);

} // namespace polardrg
