#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "raycheck/orthograph.hpp"
#include "raycheck/qimag.hpp"

namespace raycheck {

/// Missing or malformed fixture data (CLI exit code 3).
struct FixtureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct StateRow {
    int index = 0;
    int type = 0;
    CVec4 v;
};

struct StatesFixture {
    int d = 7;
    std::vector<StateRow> rows;   // ascending index 1..n
};

struct BasesFixture {
    std::vector<Basis> bases;     // basis id = position + 1
    std::vector<int> marked;      // the 30 distinguished basis ids
};

struct InvolutionFixture {
    std::vector<int> partner;     // partner[i] = partner of id i+1
};

StatesFixture load_states_fixture(const std::string& path);
BasesFixture load_bases_fixture(const std::string& path);
InvolutionFixture load_involution_fixture(const std::string& path);

/// Standard fixture file names resolved against a directory.
struct FixtureSet {
    StatesFixture states;
    BasesFixture bases;
    InvolutionFixture opposite_j;
    InvolutionFixture opposite_j1;
    InvolutionFixture opposite_j2;
    InvolutionFixture basis_pairs_j;
};

FixtureSet load_fixture_set(const std::string& dir);

/// Fixture directory resolution: explicit flag value if nonempty, else the
/// RAYCHECK_FIXTURES environment variable, else "data".
std::string resolve_fixtures_dir(const std::string& flag_value);

}  // namespace raycheck
