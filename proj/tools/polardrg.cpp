// polardrg: command-line front end. Every command prints one JSON report on
// stdout and exits with the code from the table in README.md.

#include "polardrg/classical_params.hpp"
#include "polardrg/classification.hpp"
#include "polardrg/error.hpp"
#include "polardrg/geometry_cache.hpp"
#include "polardrg/graph.hpp"
#include "polardrg/graph_io.hpp"
#include "polardrg/hemisystem.hpp"
#include "polardrg/polar_space.hpp"
#include "polardrg/report.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>

namespace fs = std::filesystem;
using nlohmann::json;
using namespace polardrg;

namespace {

struct Context {
    std::string cache_dir;
    int workers = 1;
    json inputs = json::object();
    json outputs = json::object();
    json cache = {{"hits", 0}, {"misses", 0}, {"rebuilt", 0}};
    std::string command;
};

fs::path resolve_cache_dir(const Context& ctx)
{
    if (!ctx.cache_dir.empty())
        return ctx.cache_dir;
    if (const char* env = std::getenv("POLAR_DRG_CACHE"); env && *env)
        return env;
    if (const char* home = std::getenv("HOME"); home && *home)
        return fs::path(home) / ".cache" / "polardrg";
    return fs::temp_directory_path() / "polardrg-cache";
}

std::unique_ptr<PolarGeometry> open_geometry(Context& ctx, int n, int q)
{
    auto geometry = std::make_unique<PolarGeometry>(HermitianSpace(n, make_field(q)), ctx.workers);
    const auto outcome = load_or_build(*geometry, resolve_cache_dir(ctx));
    ctx.cache[outcome.hit ? "hits" : "misses"] = ctx.cache[outcome.hit ? "hits" : "misses"].get<int>() + 1;
    if (outcome.rebuilt)
        ctx.cache["rebuilt"] = ctx.cache["rebuilt"].get<int>() + 1;
    ctx.cache["file"] = outcome.path.string();
    return geometry;
}

json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorCode::IoError, "cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& ex) {
        throw Error(ErrorCode::ParseError, path + ": " + ex.what());
    }
}

void write_text_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw Error(ErrorCode::IoError, "cannot write " + path);
    out << text;
}

json params_list(const std::vector<ClassicalParams>& ps)
{
    json list = json::array();
    for (const auto& p : ps)
        list.push_back(to_json(p));
    return list;
}

json drg_json(const DrgResult& r)
{
    if (const auto* arr = std::get_if<IntersectionArray>(&r)) {
        json j = {{"distance_regular", true}, {"array", to_json(*arr)}};
        j["fits"] = arr->d >= 2 ? params_list(fit_params(*arr)) : json::array();
        return j;
    }
    return {{"distance_regular", false}, {"counterexample", to_json(std::get<Counterexample>(r))}};
}

// build-graph

struct BuildGraphArgs {
    std::string kind;
    int n = 0;
    int d = 0;
    int q = 0;
    std::string out;
    std::string format = "json";
};

ExitCode run_build_graph(Context& ctx, const BuildGraphArgs& a)
{
    ctx.inputs = {{"kind", a.kind}, {"q", a.q}, {"format", a.format}};
    Graph g;
    if (a.kind == "dual-polar") {
        ctx.inputs["n"] = a.n;
        if (a.n % 2 != 0)
            throw Error(ErrorCode::OddAmbientDimension, "dual polar graph needs even n, got " + std::to_string(a.n));
        auto geometry = open_geometry(ctx, a.n, a.q);
        g = build_dual_polar_graph(*geometry);
    } else {
        ctx.inputs["d"] = a.d;
        g = build_hermitian_forms_graph(a.d, a.q);
    }
    ctx.outputs = {{"vertices", g.size()}, {"edges", g.edge_count()}};
    if (!a.out.empty()) {
        write_text_file(a.out, a.format == "graph6" ? to_graph6(g) + "\n" : to_json(g).dump() + "\n");
        ctx.outputs["file"] = a.out;
    }
    return ExitCode::Ok;
}

ExitCode run_check_drg(Context& ctx, const std::string& file)
{
    ctx.inputs = {{"file", file}};
    const Graph g = graph_from_json(read_json_file(file));
    const auto r = check_distance_regular(g, ctx.workers);
    ctx.outputs = drg_json(r);
    ctx.outputs["vertices"] = g.size();
    return std::holds_alternative<IntersectionArray>(r) ? ExitCode::Ok : ExitCode::Negative;
}

ExitCode run_fit_params(Context& ctx, const std::vector<std::int64_t>& b, const std::vector<std::int64_t>& c)
{
    ctx.inputs = {{"b", b}, {"c", c}};
    if (b.size() != c.size() || b.size() < 2)
        throw Error(ErrorCode::InvalidParams, "--b and --c need the same length d >= 2");
    IntersectionArray arr;
    arr.d = static_cast<int>(b.size());
    arr.b = b;
    arr.c = c;
    for (int i = 0; i < arr.d; ++i) {
        const std::int64_t bi = i + 1 < arr.d ? b[i + 1] : 0;
        arr.a.push_back(b[0] - bi - c[i]);
    }
    ctx.outputs = {{"fits", params_list(fit_params(arr))}};
    return ExitCode::Ok;
}

ExitCode run_classify(Context& ctx, int d, const std::string& b, const std::string& alpha, const std::string& beta)
{
    ctx.inputs = {{"d", d}, {"b", b}, {"alpha", alpha}, {"beta", beta}};
    Integer bv;
    try {
        bv = Integer(b);
    } catch (const std::runtime_error&) {
        throw Error(ErrorCode::ParseError, "b must be an integer, got '" + b + "'");
    }
    const auto p = ClassicalParams::make(d, bv, parse_rational(alpha), parse_rational(beta));
    ctx.inputs["params"] = to_json(p);
    ctx.outputs = to_json(classify(p));
    return ExitCode::Ok;
}

// hemisystem

struct HemiArgs {
    std::vector<int> space;
    int k = -1;
    std::uint64_t budget = 10'000'000;
    bool deterministic = false;
    bool no_symmetry_fix = false;
    std::string in;
    std::string out;
};

std::pair<int, int> space_of(const HemiArgs& a, const json* file)
{
    if (a.space.size() == 2)
        return {a.space[0], a.space[1]};
    if (!a.space.empty())
        throw Error(ErrorCode::InvalidParams, "--space expects n,q");
    if (file)
        return {file->at("space").at("n").get<int>(), file->at("space").at("q").get<int>()};
    throw Error(ErrorCode::InvalidParams, "--space n,q is required");
}

json verify_json(const VerifyResult& r)
{
    switch (r.status) {
    case VerifyResult::Status::Pass: return {{"status", "Pass"}};
    case VerifyResult::Status::EvenQ: return {{"status", "EvenQ"}, {"reason", "hemisystems need odd q"}};
    case VerifyResult::Status::Fail: break;
    }
    return {{"status", "Fail"}, {"unit", r.unit}, {"found", r.found}, {"required", r.required}};
}

ExitCode run_hemi_search(Context& ctx, const HemiArgs& a)
{
    const auto [n, q] = space_of(a, nullptr);
    const int k = a.k < 0 ? 0 : a.k;
    ctx.inputs = {{"space", {{"n", n}, {"q", q}}}, {"k", k}, {"budget", a.budget}, {"deterministic", a.deterministic},
                  {"workers", ctx.workers}};
    auto geometry = open_geometry(ctx, n, q);
    SearchConfig cfg;
    cfg.max_nodes = a.budget;
    cfg.worker_count = ctx.workers;
    cfg.deterministic = a.deterministic || ctx.workers <= 1;
    cfg.symmetry_fix = !a.no_symmetry_fix;
    const auto r = search_hemisystem(*geometry, k, cfg);

    if (const auto* f = std::get_if<SearchFound>(&r)) {
        const json h = to_json(f->hemisystem);
        ctx.outputs = {{"result", "Found"}, {"nodes", f->nodes}, {"size", f->hemisystem.members.count()},
                       {"hemisystem", h}};
        if (!a.out.empty()) {
            write_text_file(a.out, h.dump() + "\n");
            ctx.outputs["file"] = a.out;
        }
        return ExitCode::Ok;
    }
    if (const auto* inf = std::get_if<SearchInfeasible>(&r)) {
        ctx.outputs = {{"result", "Infeasible"}, {"nodes", inf->nodes}, {"reason", inf->reason}};
        if (inf->witness_unit) {
            ctx.outputs["witness"] = {{"unit", *inf->witness_unit}, {"generators", inf->witness_count}};
            if (q % 2 == 0)
                return ExitCode::EvenQ;
        }
        return ExitCode::Negative;
    }
    ctx.outputs = {{"result", "BudgetExhausted"}, {"nodes", std::get<SearchBudgetExhausted>(r).nodes}};
    return ExitCode::Budget;
}

ExitCode run_hemi_verify(Context& ctx, const HemiArgs& a)
{
    if (a.in.empty())
        throw Error(ErrorCode::InvalidParams, "--in FILE is required");
    const json file = read_json_file(a.in);
    const auto [n, q] = space_of(a, &file);
    auto geometry = open_geometry(ctx, n, q);
    const auto h = hemisystem_from_json(file, geometry->generators().size());
    const int k = a.k < 0 ? h.level_k : a.k;
    ctx.inputs = {{"file", a.in}, {"space", {{"n", n}, {"q", q}}}, {"k", k}};
    const auto r = verify_hemisystem(*geometry, h.members, k);
    ctx.outputs = verify_json(r);
    ctx.outputs["members"] = h.members.count();
    if (r.status == VerifyResult::Status::EvenQ)
        return ExitCode::EvenQ;
    if (!r.pass())
        return ExitCode::Negative;
    json levels = json::array();
    for (const auto& level : monotone_check(*geometry, h.members, k))
        levels.push_back({{"k", level.k}, {"units", level.units}, {"result", verify_json(level.result)}});
    ctx.outputs["levels"] = levels;
    return ExitCode::Ok;
}

ExitCode run_hemi_pipeline(Context& ctx, const HemiArgs& a)
{
    if (a.in.empty())
        throw Error(ErrorCode::InvalidParams, "--in FILE is required");
    const json file = read_json_file(a.in);
    const auto [n, q] = space_of(a, &file);
    ctx.inputs = {{"file", a.in}, {"space", {{"n", n}, {"q", q}}}};
    auto geometry = open_geometry(ctx, n, q);
    const auto h = hemisystem_from_json(file, geometry->generators().size());
    const auto rep = vanhove_pipeline(*geometry, h);
    ctx.outputs = drg_json(rep.drg);
    ctx.outputs["vertices"] = rep.subgraph.size();
    ctx.outputs["expected"] = to_json(rep.expected);
    ctx.outputs["match"] = rep.match;
    return rep.match ? ExitCode::Ok : ExitCode::Negative;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Hermitian polar spaces, dual polar graphs, classical parameters and hemisystems"};
    app.require_subcommand(1);
    app.set_version_flag("--version", version_string);

    Context ctx;
    app.add_option("--cache-dir", ctx.cache_dir, "Geometry cache directory (default: $POLAR_DRG_CACHE, then ~/.cache/polardrg)");
    app.add_option("--workers", ctx.workers, "Worker threads inside module calls")->check(CLI::PositiveNumber);

    BuildGraphArgs bg;
    auto* build = app.add_subcommand("build-graph", "Construct a dual polar or Hermitian forms graph");
    build->fallthrough();
    build->add_option("--kind", bg.kind)->required()->check(CLI::IsMember({"dual-polar", "hermitian-forms"}));
    build->add_option("--n", bg.n, "Ambient dimension (dual-polar)");
    build->add_option("--d", bg.d, "Matrix size (hermitian-forms)");
    build->add_option("--q", bg.q)->required();
    build->add_option("--out", bg.out, "Graph output file");
    build->add_option("--format", bg.format)->check(CLI::IsMember({"graph6", "json"}));

    std::string drg_file;
    auto* check = app.add_subcommand("check-drg", "Test distance-regularity of a native JSON graph");
    check->fallthrough();
    check->add_option("file", drg_file)->required();

    std::vector<std::int64_t> fb, fc;
    auto* fit = app.add_subcommand("fit-params", "Recover classical parameters from an intersection array");
    fit->fallthrough();
    fit->add_option("--b", fb, "b_0,...,b_{d-1}")->required()->delimiter(',');
    fit->add_option("--c", fc, "c_1,...,c_d")->required()->delimiter(',');

    int cd = 0;
    std::string cb, calpha, cbeta;
    auto* cls = app.add_subcommand("classify", "Classify classical parameters (d, b, alpha, beta)");
    cls->fallthrough();
    cls->add_option("--d", cd)->required();
    cls->add_option("--b", cb)->required();
    cls->add_option("--alpha", calpha, "N or N/M")->required();
    cls->add_option("--beta", cbeta, "N or N/M")->required();

    HemiArgs ha;
    auto* hemi = app.add_subcommand("hemisystem", "Search, verify or analyse hemisystems");
    hemi->fallthrough();
    hemi->require_subcommand(1);
    auto add_common = [&](CLI::App* sub) {
        sub->fallthrough();
        sub->add_option("--space", ha.space, "n,q")->delimiter(',');
        sub->add_option("--k", ha.k, "Level (projective dimension of the halved spaces)");
    };
    auto* hsearch = hemi->add_subcommand("search", "Depth-first search for a hemisystem");
    add_common(hsearch);
    hsearch->add_option("--budget", ha.budget, "Node budget")->check(CLI::PositiveNumber);
    hsearch->add_flag("--deterministic", ha.deterministic, "Report the first success in depth-first order");
    hsearch->add_flag("--no-symmetry-fix", ha.no_symmetry_fix, "Do not pre-choose generator 0");
    hsearch->add_option("--out", ha.out, "Write the hemisystem JSON here");
    auto* hverify = hemi->add_subcommand("verify", "Verify a hemisystem file");
    add_common(hverify);
    hverify->add_option("--in", ha.in)->required();
    auto* hpipe = hemi->add_subcommand("pipeline", "Induced subgraph, distance-regularity and parameter fit");
    add_common(hpipe);
    hpipe->add_option("--in", ha.in)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : static_cast<int>(ExitCode::Usage);
    }

    const auto start = std::chrono::steady_clock::now();
    ExitCode rc = ExitCode::Ok;
    json error;
    try {
        if (*build) {
            ctx.command = "build-graph";
            rc = run_build_graph(ctx, bg);
        } else if (*check) {
            ctx.command = "check-drg";
            rc = run_check_drg(ctx, drg_file);
        } else if (*fit) {
            ctx.command = "fit-params";
            rc = run_fit_params(ctx, fb, fc);
        } else if (*cls) {
            ctx.command = "classify";
            rc = run_classify(ctx, cd, cb, calpha, cbeta);
        } else if (*hsearch) {
            ctx.command = "hemisystem search";
            rc = run_hemi_search(ctx, ha);
        } else if (*hverify) {
            ctx.command = "hemisystem verify";
            rc = run_hemi_verify(ctx, ha);
        } else if (*hpipe) {
            ctx.command = "hemisystem pipeline";
            rc = run_hemi_pipeline(ctx, ha);
        }
    } catch (const Error& e) {
        rc = exit_code_for(e.code());
        error = {{"code", std::string(to_string(e.code()))}, {"message", e.what()}};
    } catch (const std::exception& e) {
        rc = ExitCode::Internal;
        error = {{"code", "Internal"}, {"message", e.what()}};
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

    json report = {
        {"command", ctx.command},
        {"version", version_string},
        {"inputs", ctx.inputs},
        {"outputs", ctx.outputs},
        {"timings", {{"total_ms", ms}}},
        {"cache", ctx.cache},
        {"exit_code", static_cast<int>(rc)},
    };
    if (!error.is_null())
        report["error"] = error;
    std::cout << report.dump(2) << "\n";
    return static_cast<int>(rc);
}
