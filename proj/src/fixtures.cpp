#include "raycheck/fixtures.hpp"

#include <cstdlib>
#include <fstream>

#include <json.hpp>

namespace raycheck {

namespace {

nlohmann::json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FixtureError("cannot open fixture " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw FixtureError("malformed fixture " + path + ": " + e.what());
    }
    return j;
}

QImag coord_from_json(const nlohmann::json& c, int d, const std::string& path) {
    if (!c.is_array() || c.size() != 4)
        throw FixtureError("bad coordinate tuple in " + path);
    return {Rational(c[0].get<std::int64_t>(), c[1].get<std::int64_t>()),
            Rational(c[2].get<std::int64_t>(), c[3].get<std::int64_t>()), d};
}

}  // namespace

StatesFixture load_states_fixture(const std::string& path) {
    nlohmann::json j = load_json(path);
    StatesFixture f;
    try {
        f.d = j.at("d").get<int>();
        int expect = 1;
        for (const auto& row : j.at("states")) {
            StateRow r;
            r.index = row.at("index").get<int>();
            if (r.index != expect++)
                throw FixtureError("state indices out of order in " + path);
            r.type = row.at("type").get<int>();
            const auto& coords = row.at("coords");
            if (coords.size() != 4) throw FixtureError("state row needs 4 coordinates in " + path);
            for (int k = 0; k < 4; ++k)
                r.v.c[static_cast<std::size_t>(k)] = coord_from_json(coords[static_cast<std::size_t>(k)], f.d, path);
            f.rows.push_back(r);
        }
    } catch (const nlohmann::json::exception& e) {
        throw FixtureError("malformed fixture " + path + ": " + e.what());
    }
    return f;
}

BasesFixture load_bases_fixture(const std::string& path) {
    nlohmann::json j = load_json(path);
    BasesFixture f;
    try {
        for (const auto& row : j.at("bases")) {
            if (row.size() != 4) throw FixtureError("basis row needs 4 state ids in " + path);
            Basis b;
            for (int k = 0; k < 4; ++k) b.states[static_cast<std::size_t>(k)] = row[static_cast<std::size_t>(k)].get<int>();
            f.bases.push_back(b);
        }
        for (const auto& id : j.at("marked")) f.marked.push_back(id.get<int>());
    } catch (const nlohmann::json::exception& e) {
        throw FixtureError("malformed fixture " + path + ": " + e.what());
    }
    return f;
}

InvolutionFixture load_involution_fixture(const std::string& path) {
    nlohmann::json j = load_json(path);
    InvolutionFixture f;
    try {
        for (const auto& v : j.at("map")) f.partner.push_back(v.get<int>());
    } catch (const nlohmann::json::exception& e) {
        throw FixtureError("malformed fixture " + path + ": " + e.what());
    }
    for (std::size_t i = 0; i < f.partner.size(); ++i) {
        int p = f.partner[i];
        if (p < 1 || p > static_cast<int>(f.partner.size()) ||
            f.partner[static_cast<std::size_t>(p - 1)] != static_cast<int>(i) + 1)
            throw FixtureError("fixture is not an involution: " + path);
    }
    return f;
}

FixtureSet load_fixture_set(const std::string& dir) {
    FixtureSet s;
    s.states = load_states_fixture(dir + "/states_120.json");
    s.bases = load_bases_fixture(dir + "/bases_210.json");
    s.opposite_j = load_involution_fixture(dir + "/opposite_pairs_j.json");
    s.opposite_j1 = load_involution_fixture(dir + "/opposite_pairs_j1.json");
    s.opposite_j2 = load_involution_fixture(dir + "/opposite_pairs_j2.json");
    s.basis_pairs_j = load_involution_fixture(dir + "/basis_pairs_j.json");
    return s;
}

std::string resolve_fixtures_dir(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("RAYCHECK_FIXTURES"); env && *env) return env;
    return "data";
}

}  // namespace raycheck
