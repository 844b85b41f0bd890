#include "polardrg/geometry_cache.hpp"

#include "polardrg/error.hpp"

#include "json.hpp"

#include <cstdio>
#include <fstream>
#include <iterator>
#include <sstream>

namespace polardrg {

std::filesystem::path cache_path(const std::filesystem::path& dir, int n, int q)
{
    return dir / ("hps1_n" + std::to_string(n) + "_q" + std::to_string(q) + ".bin");
}

std::uint64_t fnv1a64(const std::string& bytes, std::size_t offset)
{
    std::uint64_t h = 14695981039346656037ULL;
    for (std::size_t i = offset; i < bytes.size(); ++i) {
        h ^= static_cast<unsigned char>(bytes[i]);
        h *= 1099511628211ULL;
    }
    return h;
}

namespace {

std::string hex64(std::uint64_t v)
{
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

} // namespace

std::string serialize_geometry(PolarGeometry& geometry)
{
    const auto& space = geometry.space();
    std::string payload;
    nlohmann::json strata = nlohmann::json::array();
    for (int r = 0; r <= geometry.d_rank(); ++r) {
        const auto& list = geometry.stratum(r);
        strata.push_back({{"rank", r}, {"count", list.size()}});
        for (const auto& s : list)
            for (Elem e : s.basis().entries) {
                payload += static_cast<char>(e & 0xff);
                payload += static_cast<char>(e >> 8);
            }
    }
    const nlohmann::json header = {
        {"format", cache_format},
        {"version", cache_version},
        {"n", space.n()},
        {"q", space.q()},
        {"modulus", space.field().spec().modulus},
        {"strata", strata},
        {"checksum", hex64(fnv1a64(payload))},
    };
    return header.dump() + "\n" + payload;
}

bool deserialize_geometry(PolarGeometry& geometry, const std::string& bytes)
{
    const auto nl = bytes.find('\n');
    if (nl == std::string::npos)
        return false;
    nlohmann::json header;
    try {
        header = nlohmann::json::parse(bytes.substr(0, nl));
        const auto& space = geometry.space();
        if (header.at("format") != cache_format || header.at("version") != cache_version ||
            header.at("n") != space.n() || header.at("q") != space.q() ||
            header.at("modulus").get<std::vector<int>>() != space.field().spec().modulus)
            return false;
        if (header.at("checksum").get<std::string>() != hex64(fnv1a64(bytes, nl + 1)))
            return false;

        const auto& strata = header.at("strata");
        if (strata.size() != static_cast<std::size_t>(geometry.d_rank() + 1))
            return false;
        std::size_t pos = nl + 1;
        std::vector<std::vector<Subspace>> loaded;
        for (int r = 0; r <= geometry.d_rank(); ++r) {
            if (strata[r].at("rank") != r)
                return false;
            const auto count = strata[r].at("count").get<std::size_t>();
            const std::size_t cells = static_cast<std::size_t>(r) * space.n();
            if (bytes.size() - pos < count * cells * 2)
                return false;
            std::vector<Subspace> list;
            list.reserve(count);
            for (std::size_t i = 0; i < count; ++i) {
                MatrixGF m(r, space.n());
                for (auto& e : m.entries) {
                    e = static_cast<Elem>(static_cast<unsigned char>(bytes[pos]) |
                                          (static_cast<unsigned char>(bytes[pos + 1]) << 8));
                    if (e >= space.field().size())
                        return false;
                    pos += 2;
                }
                list.push_back(Subspace::span(std::move(m), space.field()));
                if (list.back().rank() != r)
                    return false;
            }
            loaded.push_back(std::move(list));
        }
        if (pos != bytes.size())
            return false;
        for (int r = 0; r <= geometry.d_rank(); ++r)
            geometry.set_stratum(r, std::move(loaded[r]));
        return true;
    } catch (const nlohmann::json::exception&) {
        return false;
    }
}

CacheOutcome load_or_build(PolarGeometry& geometry, const std::filesystem::path& dir)
{
    CacheOutcome out;
    out.path = cache_path(dir, geometry.space().n(), geometry.space().q());
    if (std::filesystem::exists(out.path)) {
        std::ifstream in(out.path, std::ios::binary);
        const std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        if (deserialize_geometry(geometry, bytes)) {
            out.hit = true;
            return out;
        }
        out.rebuilt = true;
    }

    const std::string bytes = serialize_geometry(geometry);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    const auto tmp = out.path.string() + ".tmp";
    {
        std::ofstream o(tmp, std::ios::binary | std::ios::trunc);
        if (!o)
            throw Error(ErrorCode::IoError, "cannot write cache file " + tmp);
        o.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    }
    std::filesystem::rename(tmp, out.path, ec);
    if (ec)
        throw Error(ErrorCode::IoError, "cannot move cache file into place: " + ec.message());
    return out;
}

} // namespace polardrg
