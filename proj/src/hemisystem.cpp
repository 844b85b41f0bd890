#include "polardrg/hemisystem.hpp"

#include "polardrg/error.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace polardrg {

IncidenceSystem build_incidence(PolarGeometry& geometry, int k)
{
    if (k < 0 || k > geometry.d_rank() - 1)
        throw Error(ErrorCode::RankOutOfRange, "level k = " + std::to_string(k) + " has no t.i. subspaces below the generators");
    IncidenceSystem sys;
    sys.level_k = k;
    sys.generator_count = geometry.generators().size();
    sys.unit_generators = geometry.generators_through(k + 1);
    sys.generator_units.assign(sys.generator_count, {});
    sys.incidence.reserve(sys.unit_generators.size());
    for (std::size_t u = 0; u < sys.unit_generators.size(); ++u) {
        Bitset b(sys.generator_count);
        for (auto g : sys.unit_generators[u]) {
            b.set(g);
            sys.generator_units[g].push_back(u);
        }
        sys.incidence.push_back(std::move(b));
    }
    return sys;
}

nlohmann::json to_json(const Hemisystem& h)
{
    return {{"space", {{"n", h.n}, {"q", h.q}}}, {"k", h.level_k}, {"members", h.members.indices()}};
}

Hemisystem hemisystem_from_json(const nlohmann::json& j, std::size_t generator_count)
{
    try {
        Hemisystem h;
        h.n = j.at("space").at("n").get<int>();
        h.q = j.at("space").at("q").get<int>();
        h.level_k = j.at("k").get<int>();
        h.members = Bitset(generator_count);
        for (const auto& m : j.at("members")) {
            const auto g = m.get<std::size_t>();
            if (g >= generator_count)
                throw Error(ErrorCode::ParseError, "member index " + std::to_string(g) + " out of range");
            h.members.set(g);
        }
        return h;
    } catch (const nlohmann::json::exception& ex) {
        throw Error(ErrorCode::ParseError, ex.what());
    }
}

namespace {

void check_level(const PolarGeometry& geometry, int k)
{
    if (k < 0 || k > geometry.d_rank() - 2)
        throw Error(ErrorCode::RankOutOfRange,
                    "hemisystem level k = " + std::to_string(k) + " outside [0, " + std::to_string(geometry.d_rank() - 2) + "]");
}

VerifyResult verify_against(const IncidenceSystem& sys, const Bitset& members)
{
    for (std::size_t u = 0; u < sys.unit_count(); ++u) {
        const std::size_t total = sys.unit_generators[u].size();
        const std::size_t found = and_count(sys.incidence[u], members);
        if (total % 2 != 0 || 2 * found != total)
            return VerifyResult{VerifyResult::Status::Fail, u, found, total / 2};
    }
    return {};
}

} // namespace

VerifyResult verify_hemisystem(PolarGeometry& geometry, const Bitset& members, int k)
{
    if (geometry.space().q() % 2 == 0)
        return VerifyResult{VerifyResult::Status::EvenQ, 0, 0, 0};
    check_level(geometry, k);
    const auto sys = build_incidence(geometry, k);
    if (members.size() != sys.generator_count)
        throw Error(ErrorCode::DimensionMismatch, "member set does not match the generator count");
    return verify_against(sys, members);
}

std::vector<LevelReport> monotone_check(PolarGeometry& geometry, const Bitset& members, int k)
{
    const auto top = verify_hemisystem(geometry, members, k);
    if (!top.pass())
        throw Error(ErrorCode::PreconditionFailed, "set is not a hemisystem at level " + std::to_string(k));
    std::vector<LevelReport> out;
    for (int level = 0; level <= k; ++level) {
        const auto sys = build_incidence(geometry, level);
        out.push_back(LevelReport{level, sys.unit_count(), verify_against(sys, members)});
    }
    return out;
}

namespace {

constexpr std::int8_t undecided = -1;

/// Exact-half constraint propagation over a fixed incidence structure.
class HalfSolver {
public:
    HalfSolver(std::vector<std::vector<std::size_t>> unit_gens, std::size_t generators)
        : unit_gens_(std::move(unit_gens))
        , gen_units_(generators)
        , state_(generators, undecided)
        , chosen_(unit_gens_.size(), 0)
        , rejected_(unit_gens_.size(), 0)
        , half_(unit_gens_.size(), 0)
    {
        for (std::size_t u = 0; u < unit_gens_.size(); ++u) {
            half_[u] = unit_gens_[u].size() / 2;
            for (auto g : unit_gens_[u])
                gen_units_[g].push_back(u);
        }
    }

    std::size_t mark() const { return trail_.size(); }

    void undo(std::size_t to)
    {
        while (trail_.size() > to) {
            const auto g = trail_.back();
            trail_.pop_back();
            auto& counter = state_[g] == 1 ? chosen_ : rejected_;
            for (auto u : gen_units_[g])
                --counter[u];
            state_[g] = undecided;
        }
    }

    /// Assigns and propagates; on conflict the caller must undo to its mark.
    bool assign(std::size_t g, std::int8_t value)
    {
        queue_.clear();
        queue_.emplace_back(g, value);
        for (std::size_t head = 0; head < queue_.size(); ++head) {
            const auto [x, val] = queue_[head];
            if (state_[x] == val)
                continue;
            if (state_[x] != undecided)
                return false;
            state_[x] = val;
            trail_.push_back(x);
            auto& counter = val == 1 ? chosen_ : rejected_;
            for (auto u : gen_units_[x]) {
                if (++counter[u] > half_[u])
                    return false;
                if (counter[u] == half_[u])
                    for (auto y : unit_gens_[u])
                        if (state_[y] == undecided)
                            queue_.emplace_back(y, static_cast<std::int8_t>(1 - val));
            }
        }
        return true;
    }

    std::optional<std::size_t> first_undecided(std::size_t from) const
    {
        for (std::size_t g = from; g < state_.size(); ++g)
            if (state_[g] == undecided)
                return g;
        return std::nullopt;
    }

    Bitset chosen_set() const
    {
        Bitset b(state_.size());
        for (std::size_t g = 0; g < state_.size(); ++g)
            if (state_[g] == 1)
                b.set(g);
        return b;
    }

    enum class Outcome { Found, Exhausted, Budget, Cancelled };

    /// Depth-first search below the current state.
    Outcome run(std::atomic<std::uint64_t>& nodes, std::uint64_t budget, const std::atomic<bool>& stop)
    {
        struct Frame {
            std::size_t g;
            std::size_t mark;
            int next; // 0: try chosen, 1: try rejected, 2: exhausted
        };
        std::vector<Frame> stack;
        auto open = [&](std::size_t from) -> bool {
            const auto g = first_undecided(from);
            if (!g)
                return false;
            stack.push_back(Frame{*g, mark(), 0});
            return true;
        };
        if (!open(0))
            return Outcome::Found;

        while (!stack.empty()) {
            if (stop.load(std::memory_order_relaxed))
                return Outcome::Cancelled;
            Frame& f = stack.back();
            if (f.next == 2) {
                undo(f.mark);
                stack.pop_back();
                continue;
            }
            const std::int8_t value = f.next == 0 ? 1 : 0;
            ++f.next;
            undo(f.mark);
            if (nodes.fetch_add(1, std::memory_order_relaxed) >= budget)
                return Outcome::Budget;
            if (!assign(f.g, value))
                continue;
            if (!open(f.g + 1))
                return Outcome::Found;
        }
        return Outcome::Exhausted;
    }

private:
    std::vector<std::vector<std::size_t>> unit_gens_;
    std::vector<std::vector<std::size_t>> gen_units_;
    std::vector<std::int8_t> state_;
    std::vector<std::size_t> chosen_;
    std::vector<std::size_t> rejected_;
    std::vector<std::size_t> half_;
    std::vector<std::size_t> trail_;
    std::vector<std::pair<std::size_t, std::int8_t>> queue_;
};

using Prefix = std::vector<std::pair<std::size_t, std::int8_t>>;

/// Decision prefixes of the first two branching levels, in depth-first order.
std::vector<Prefix> fan_out(HalfSolver& solver, std::atomic<std::uint64_t>& nodes)
{
    std::vector<Prefix> out;
    const auto base = solver.mark();
    const auto g1 = solver.first_undecided(0);
    if (!g1)
        return {Prefix{}};
    for (std::int8_t v1 : {std::int8_t{1}, std::int8_t{0}}) {
        solver.undo(base);
        ++nodes;
        if (!solver.assign(*g1, v1))
            continue;
        const auto m1 = solver.mark();
        const auto g2 = solver.first_undecided(*g1 + 1);
        if (!g2) {
            out.push_back(Prefix{{*g1, v1}});
            continue;
        }
        for (std::int8_t v2 : {std::int8_t{1}, std::int8_t{0}}) {
            solver.undo(m1);
            ++nodes;
            if (solver.assign(*g2, v2))
                out.push_back(Prefix{{*g1, v1}, {*g2, v2}});
        }
    }
    solver.undo(base);
    return out;
}

} // namespace

SearchResult search_hemisystem(PolarGeometry& geometry, int k, const SearchConfig& cfg)
{
    if (cfg.max_nodes == 0)
        throw Error(ErrorCode::InvalidParams, "max_nodes must be positive");
    check_level(geometry, k);

    // Pruning uses every level up to k; a hemisystem at k is one at all k' <= k.
    std::vector<std::vector<std::size_t>> units;
    std::size_t generators = 0;
    for (int level = 0; level <= k; ++level) {
        auto sys = build_incidence(geometry, level);
        generators = sys.generator_count;
        for (std::size_t u = 0; u < sys.unit_count(); ++u) {
            if (sys.unit_generators[u].size() % 2 != 0) {
                SearchInfeasible inf;
                inf.reason = "unit " + std::to_string(u) + " at level " + std::to_string(level) + " lies on " +
                             std::to_string(sys.unit_generators[u].size()) + " generators, an odd number";
                inf.witness_unit = u;
                inf.witness_count = sys.unit_generators[u].size();
                return inf;
            }
        }
        for (auto& list : sys.unit_generators)
            units.push_back(std::move(list));
    }

    std::atomic<std::uint64_t> nodes{0};
    auto make_solver = [&]() -> std::optional<HalfSolver> {
        HalfSolver s(units, generators);
        if (cfg.symmetry_fix && generators > 0 && !s.assign(0, 1))
            return std::nullopt;
        return s;
    };
    auto found = [&](const HalfSolver& s) {
        return SearchFound{Hemisystem{geometry.space().n(), geometry.space().q(), k, s.chosen_set()},
                           nodes.load()};
    };
    auto infeasible = [&]() { return SearchInfeasible{nodes.load(), "search space exhausted", std::nullopt, 0}; };

    auto root = make_solver();
    if (!root)
        return infeasible();

    const std::atomic<bool> never{false};
    if (cfg.worker_count <= 1) {
        switch (root->run(nodes, cfg.max_nodes, never)) {
        case HalfSolver::Outcome::Found: return found(*root);
        case HalfSolver::Outcome::Exhausted: return infeasible();
        default: return SearchBudgetExhausted{nodes.load()};
        }
    }

    const auto prefixes = fan_out(*root, nodes);
    struct Slot {
        HalfSolver::Outcome outcome = HalfSolver::Outcome::Cancelled;
        std::optional<Bitset> members;
        bool done = false;
    };
    std::vector<Slot> slots(prefixes.size());
    std::atomic<std::size_t> next{0};
    std::atomic<bool> stop{false};
    std::atomic<std::size_t> best{prefixes.size()};

    auto worker = [&] {
        for (;;) {
            const auto i = next.fetch_add(1);
            if (i >= prefixes.size() || stop.load())
                return;
            // Deterministic mode never needs subtrees after a known success.
            if (cfg.deterministic && i > best.load())
                return;
            auto s = make_solver();
            bool ok = s.has_value();
            for (const auto& [g, v] : prefixes[i])
                ok = ok && s->assign(g, v);
            Slot slot;
            slot.done = true;
            if (!ok) {
                slot.outcome = HalfSolver::Outcome::Exhausted;
            } else {
                slot.outcome = s->run(nodes, cfg.max_nodes, stop);
                if (slot.outcome == HalfSolver::Outcome::Found) {
                    slot.members = s->chosen_set();
                    auto cur = best.load();
                    while (i < cur && !best.compare_exchange_weak(cur, i)) {
                    }
                    if (!cfg.deterministic)
                        stop = true;
                }
            }
            slots[i] = std::move(slot);
        }
    };
    {
        std::vector<std::jthread> pool;
        for (int w = 0; w < cfg.worker_count; ++w)
            pool.emplace_back(worker);
    }

    bool budget_hit = false;
    for (std::size_t i = 0; i < slots.size(); ++i) {
        const auto& slot = slots[i];
        if (slot.outcome == HalfSolver::Outcome::Found)
            return SearchFound{Hemisystem{geometry.space().n(), geometry.space().q(), k, *slot.members}, nodes.load()};
        // In deterministic mode an earlier unfinished subtree blocks the answer.
        if (slot.outcome == HalfSolver::Outcome::Budget || (!slot.done && cfg.deterministic)) {
            budget_hit = true;
            if (cfg.deterministic)
                break;
        }
    }
    if (budget_hit || nodes.load() >= cfg.max_nodes)
        return SearchBudgetExhausted{nodes.load()};
    return infeasible();
}

PipelineReport vanhove_pipeline(PolarGeometry& geometry, const Hemisystem& s)
{
    const auto& space = geometry.space();
    if (space.n() % 2 != 0)
        throw Error(ErrorCode::OddAmbientDimension, "pipeline needs H(2d-1, q^2)");
    const int d = space.d_rank();
    if (d < 2)
        throw Error(ErrorCode::RankOutOfRange, "pipeline needs d >= 2");
    const auto check = verify_hemisystem(geometry, s.members, d - 2);
    if (!check.pass())
        throw Error(ErrorCode::VerificationFailed,
                    check.status == VerifyResult::Status::EvenQ
                        ? std::string("even q admits no hemisystems")
                        : "unit " + std::to_string(check.unit) + " holds " + std::to_string(check.found) +
                              " members, needs " + std::to_string(check.required));

    PipelineReport r;
    r.subgraph = induced_subgraph(build_dual_polar_graph(geometry), s.members);
    r.drg = check_distance_regular(r.subgraph);
    r.expected = negative_type_family(d, space.q()).params;
    if (const auto* arr = std::get_if<IntersectionArray>(&r.drg); arr && arr->d >= 2) {
        r.fits = fit_params(*arr);
        r.match = std::find(r.fits.begin(), r.fits.end(), r.expected) != r.fits.end();
    }
    return r;
}

} // namespace polardrg
