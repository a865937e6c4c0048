#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <optional>

#include "raycheck/constants.hpp"
#include "raycheck/entangle.hpp"
#include "raycheck/fixtures.hpp"
#include "raycheck/matgroup.hpp"
#include "raycheck/orthograph.hpp"
#include "raycheck/rayconfig.hpp"
#include "raycheck/realify.hpp"
#include "raycheck/verify.hpp"

namespace py = pybind11;
using namespace raycheck;

namespace {

/// Caches the expensive objects (group closure, configurations, graphs) so a
/// python session can poke at the pipeline interactively.
class Session {
public:
    explicit Session(const std::string& fixtures_dir)
        : fixtures_dir_(resolve_fixtures_dir(fixtures_dir)) {}

    std::map<std::string, std::size_t> group_orders() {
        return {{"2a4", Group::close({constants::P1(), constants::P2()}, 100).size()},
                {"sigma", sigma().size()},
                {"projective", sigma().projective_order()},
                {"2a5", Group::close({constants::J(), constants::H()}, 1000).size()},
                {"2s5", sub_2s5().size()}};
    }

    std::map<std::string, std::string> homomorphism_images() {
        const Group& g = sigma_with_perms();
        auto cyc = [&](const CMat4& m) { return g.element(g.find(m)).perm->cycle_string(); };
        return {{"P1", cyc(constants::P1())},
                {"P2", cyc(constants::P2())},
                {"S", cyc(constants::S())},
                {"J", cyc(constants::J())},
                {"H", cyc(constants::H())}};
    }

    int ray_count(const std::string& c) { return config(c).ray_count(); }
    std::size_t vector_count(const std::string& c) { return config(c).vector_count(); }

    std::vector<std::string> gram_spectrum_strs(const std::string& c) {
        std::vector<std::string> out;
        for (const auto& r : gram_spectrum(config(c))) out.push_back(r.str());
        return out;
    }

    std::map<int, int> type_counts() {
        StateTypeTable t;
        std::map<int, int> out;
        for (int x : t.classify_all(config("sv"))) out[x] += 1;
        return out;
    }

    std::vector<std::array<int, 4>> bases(const std::string& c) {
        std::vector<std::array<int, 4>> out;
        for (const auto& b : enumerate_bases(graph(c))) out.push_back(b.states);
        return out;
    }

    std::map<int, std::uint64_t> census(const std::string& c, int threads) {
        return nonorth_clique_census(graph(c), threads).histogram;
    }

    py::dict ks_check(const std::string& c) {
        KSResult r = ks_colorability(graph(c), enumerate_bases(graph(c)));
        py::dict d;
        d["satisfiable"] = r.satisfiable;
        d["nodes_explored"] = r.nodes_explored;
        return d;
    }

    std::vector<int> opposite_pairs(const std::string& j) {
        return opposite_map(j_matrix(j), config("sv")).partner;
    }

    py::dict basis_pairs() {
        BasisPairing bp = partner_basis_map(constants::J(), config("sv"),
                                            enumerate_bases(graph("sv")));
        py::dict d;
        d["partner"] = bp.partner;
        d["fixed"] = bp.fixed;
        return d;
    }

    std::vector<int> equal_bases_of(const std::string& sub) {
        const Group& g = sub == "2a5"
                             ? Group::close({constants::J(), constants::H()}, 1000)
                             : sub_2s5();
        auto ids = equal_bases(g, config("sv"), enumerate_bases(graph("sv")));
        return {ids.begin(), ids.end()};
    }

    py::dict e8_report(const std::string& c) {
        RootSystemReport r = e8_verify(realify(config(c)));
        py::dict d;
        d["vector_count"] = r.vector_count;
        d["negation_closed"] = r.negation_closed;
        d["unit_norms"] = r.unit_norms;
        d["spectrum_ok"] = r.spectrum_ok;
        d["counts_ok"] = r.counts_ok;
        d["reflection_closed"] = r.reflection_closed;
        d["rank"] = r.rank;
        d["passed"] = r.passed();
        return d;
    }

    bool transform_bijective() {
        auto r7 = realify(config("sv"));
        std::set<RealVec8> target(r7.begin(), r7.end());
        std::set<RealVec8> image;
        for (const auto& v : realify(config("witting"))) image.insert(witting_to_sv(v));
        return image == target && image.size() == 240;
    }

private:
    const Group& sigma() {
        if (!sigma_)
            sigma_ = Group::close({constants::P1(), constants::P2(), constants::S()}, 6000);
        return *sigma_;
    }
    const Group& sigma_with_perms() {
        const Group& g = sigma();
        if (!g.has_homomorphism())
            sigma_->attach_homomorphism({Perm7::from_cycles({{1, 2, 4}, {3, 6, 5}}),
                                         Perm7::from_cycles({{1, 6}, {3, 4}}),
                                         Perm7::from_cycles({{1, 2, 3, 4, 5, 6, 7}})});
        return *sigma_;
    }
    const Group& sub_2s5() {
        if (!sub_)
            sub_ = Group::close({constants::J(), constants::H(), constants::P2()}, 1000);
        return *sub_;
    }
    const Configuration& config(const std::string& c) {
        if (c == "witting") {
            if (!witting_) witting_ = witting_configuration();
            return *witting_;
        }
        if (!sv_) {
            CVec4 seed{{QImag::one(7), QImag::zero(7), QImag::zero(7), QImag::zero(7)}};
            Configuration cfg = orbit_configuration(sigma(), seed);
            FixtureSet fx = load_fixture_set(fixtures_dir_);
            std::vector<CVec4> cat;
            for (const auto& row : fx.states.rows) cat.push_back(row.v);
            cfg.align_with_catalog(cat);
            sv_ = std::move(cfg);
        }
        return *sv_;
    }
    const OrthGraph& graph(const std::string& c) {
        auto& slot = c == "witting" ? wgraph_ : graph_;
        if (!slot) slot.emplace(config(c));
        return *slot;
    }
    static CMat4 j_matrix(const std::string& j) {
        if (j == "J1") return constants::J1();
        if (j == "J2") return constants::J2();
        return constants::J();
    }

    std::string fixtures_dir_;
    std::optional<Group> sigma_;
    std::optional<Group> sub_;
    std::optional<Configuration> sv_;
    std::optional<Configuration> witting_;
    std::optional<OrthGraph> graph_;
    std::optional<OrthGraph> wgraph_;
};

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact verification of the 120-state and Witting ray configurations";

    py::class_<Session>(m, "Session")
        .def(py::init<const std::string&>(), py::arg("fixtures_dir") = "")
        .def("group_orders", &Session::group_orders)
        .def("homomorphism_images", &Session::homomorphism_images)
        .def("ray_count", &Session::ray_count, py::arg("config") = "sv")
        .def("vector_count", &Session::vector_count, py::arg("config") = "sv")
        .def("gram_spectrum", &Session::gram_spectrum_strs, py::arg("config") = "sv")
        .def("type_counts", &Session::type_counts)
        .def("bases", &Session::bases, py::arg("config") = "sv")
        .def("census", &Session::census, py::arg("config") = "sv", py::arg("threads") = 1)
        .def("ks_check", &Session::ks_check, py::arg("config") = "sv")
        .def("opposite_pairs", &Session::opposite_pairs, py::arg("j") = "J")
        .def("basis_pairs", &Session::basis_pairs)
        .def("equal_bases", &Session::equal_bases_of, py::arg("subgroup") = "2s5")
        .def("e8_report", &Session::e8_report, py::arg("config") = "sv")
        .def("transform_bijective", &Session::transform_bijective);

    m.def(
        "verify_all",
        [](const std::string& fixtures_dir, int threads, bool strict_labels) {
            VerifyOptions o;
            o.fixtures_dir = resolve_fixtures_dir(fixtures_dir);
            o.threads = threads;
            o.strict_labels = strict_labels;
            auto results = run_verification(o, nullptr);
            py::list out;
            for (const auto& r : results) {
                py::dict d;
                d["name"] = r.name;
                d["status"] = status_name(r.status);
                d["expected"] = r.expected;
                d["computed"] = r.computed;
                out.append(d);
            }
            return py::make_tuple(all_passed(results, strict_labels), out);
        },
        py::arg("fixtures_dir") = "", py::arg("threads") = 8, py::arg("strict_labels") = false,
        "Run the full verification pipeline; returns (passed, checks).");
}
