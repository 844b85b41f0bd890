#include "polardrg/graph_io.hpp"

#include "polardrg/error.hpp"

namespace polardrg {

std::string to_graph6(const Graph& g)
{
    const std::size_t n = g.size();
    std::string out;
    if (n <= 62) {
        out += static_cast<char>(n + 63);
    } else if (n <= 258047) {
        out += static_cast<char>(126);
        for (int shift = 12; shift >= 0; shift -= 6)
            out += static_cast<char>(((n >> shift) & 63) + 63);
    } else {
        out += static_cast<char>(126);
        out += static_cast<char>(126);
        for (int shift = 30; shift >= 0; shift -= 6)
            out += static_cast<char>(((n >> shift) & 63) + 63);
    }

    // Upper triangle, column by column: x(0,1) x(0,2) x(1,2) x(0,3) ...
    int bits = 0;
    int acc = 0;
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++bits == 6) {
                out += static_cast<char>(acc + 63);
                bits = 0;
                acc = 0;
            }
        }
    }
    if (bits > 0)
        out += static_cast<char>((acc << (6 - bits)) + 63);
    return out;
}

nlohmann::json to_json(const Graph& g)
{
    nlohmann::json edges = nlohmann::json::array();
    for (std::size_t u = 0; u < g.size(); ++u)
        g.neighbours(u).for_each([&](std::size_t v) {
            if (u < v)
                edges.push_back({u, v});
        });
    return {{"labels", g.labels()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const nlohmann::json& j)
{
    try {
        if (!j.is_object() || !j.contains("labels") || !j.contains("edges"))
            throw Error(ErrorCode::ParseError, "graph JSON needs \"labels\" and \"edges\"");
        Graph g(j.at("labels").get<std::vector<std::string>>());
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2)
                throw Error(ErrorCode::ParseError, "edge must be a pair");
            const auto u = e[0].get<std::size_t>();
            const auto v = e[1].get<std::size_t>();
            if (u >= g.size() || v >= g.size() || u == v)
                throw Error(ErrorCode::ParseError, "edge endpoint out of range or self-loop");
            g.add_edge(u, v);
        }
        return g;
    } catch (const nlohmann::json::exception& ex) {
        throw Error(ErrorCode::ParseError, ex.what());
    }
}

nlohmann::json to_json(const IntersectionArray& arr)
{
    return {{"d", arr.d}, {"b", arr.b}, {"c", arr.c}, {"a", arr.a}};
}

} // namespace polardrg
