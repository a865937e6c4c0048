// raycheck -- exact verification of the 120-state and Witting ray
// configurations: group closures, basis enumeration, nonorthogonal clique
// census, Kochen-Specker colorability, opposite-state involutions, coset
// entangling matrices, and the E8 realifications.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "raycheck/constants.hpp"
#include "raycheck/entangle.hpp"
#include "raycheck/fixtures.hpp"
#include "raycheck/matgroup.hpp"
#include "raycheck/orthograph.hpp"
#include "raycheck/rayconfig.hpp"
#include "raycheck/realify.hpp"
#include "raycheck/verify.hpp"

using namespace raycheck;
using nlohmann::json;

namespace {

struct Options {
    std::string fixtures;
    std::string format = "csv";
    std::string out;
    std::string config = "sv";
    std::string j_name = "J";
    int threads = 8;
    bool strict_labels = false;
};

void emit(const Options& opt, const std::string& text) {
    if (opt.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(opt.out);
    if (!f) throw std::runtime_error("cannot open output file " + opt.out);
    f << text;
}

json qimag_json(const QImag& x) {
    return json::array({x.a.num(), x.a.den(), x.b.num(), x.b.den()});
}

json mat_json(const CMat4& m) {
    json rows = json::array();
    for (const auto& row : m.m) {
        json r = json::array();
        for (const auto& x : row) r.push_back(qimag_json(x));
        rows.push_back(r);
    }
    return rows;
}

/// Everything the subcommands share, built on demand.
struct Pipeline {
    Options opt;
    std::optional<FixtureSet> fx_;
    std::optional<Group> sigma_;
    std::optional<Configuration> sv_;
    std::optional<Configuration> witting_;

    const FixtureSet& fixtures() {
        if (!fx_) fx_ = load_fixture_set(resolve_fixtures_dir(opt.fixtures));
        return *fx_;
    }
    const Group& sigma() {
        if (!sigma_) {
            sigma_ = Group::close({constants::P1(), constants::P2(), constants::S()}, 6000);
            sigma_->attach_homomorphism({Perm7::from_cycles({{1, 2, 4}, {3, 6, 5}}),
                                         Perm7::from_cycles({{1, 6}, {3, 4}}),
                                         Perm7::from_cycles({{1, 2, 3, 4, 5, 6, 7}})});
        }
        return *sigma_;
    }
    const Configuration& sv() {
        if (!sv_) {
            CVec4 seed{{QImag::one(7), QImag::zero(7), QImag::zero(7), QImag::zero(7)}};
            Configuration cfg = orbit_configuration(sigma(), seed);
            std::vector<CVec4> cat;
            for (const auto& row : fixtures().states.rows) cat.push_back(row.v);
            cfg.align_with_catalog(cat);
            sv_ = std::move(cfg);
        }
        return *sv_;
    }
    const Configuration& witting() {
        if (!witting_) witting_ = witting_configuration();
        return *witting_;
    }
    const Configuration& config() { return opt.config == "witting" ? witting() : sv(); }
};

int cmd_states(Pipeline& p) {
    const Configuration& sv = p.sv();
    StateTypeTable types;
    std::vector<int> t = types.classify_all(sv);

    if (p.opt.format == "json") {
        json rows = json::array();
        for (int n = 1; n <= sv.ray_count(); ++n) {
            int id = sv.internal_id(n);
            json coords = json::array();
            for (const auto& c : sv.ray(id).c) coords.push_back(qimag_json(c));
            rows.push_back({{"index", n}, {"type", t[static_cast<std::size_t>(id)]}, {"coords", coords}});
        }
        emit(p.opt, json{{"d", 7}, {"states", rows}}.dump(1) + "\n");
    } else {
        std::string out = "index,type,a1,b1,a2,b2,a3,b3,a4,b4\n";
        for (int n = 1; n <= sv.ray_count(); ++n) {
            int id = sv.internal_id(n);
            out += std::to_string(n) + "," + std::to_string(t[static_cast<std::size_t>(id)]);
            for (const auto& c : sv.ray(id).c)
                out += "," + c.a.str() + "," + c.b.str();
            out += "\n";
        }
        emit(p.opt, out);
    }
    return 0;
}

int cmd_bases(Pipeline& p) {
    const Configuration& cfg = p.config();
    OrthGraph g(cfg);
    std::vector<Basis> bases = enumerate_bases(g);
    std::set<int> marked;
    if (p.opt.config == "sv")
        marked.insert(p.fixtures().bases.marked.begin(), p.fixtures().bases.marked.end());

    if (p.opt.format == "json") {
        json rows = json::array();
        for (std::size_t i = 0; i < bases.size(); ++i)
            rows.push_back({{"index", i + 1},
                            {"states", bases[i].states},
                            {"marked", marked.count(static_cast<int>(i) + 1) != 0}});
        emit(p.opt, json{{"config", p.opt.config}, {"bases", rows}}.dump(1) + "\n");
    } else {
        std::string out = "index,s1,s2,s3,s4,marked\n";
        for (std::size_t i = 0; i < bases.size(); ++i) {
            out += std::to_string(i + 1);
            for (int s : bases[i].states) out += "," + std::to_string(s);
            out += marked.count(static_cast<int>(i) + 1) ? ",1\n" : ",0\n";
        }
        emit(p.opt, out);
    }
    return 0;
}

int cmd_census(Pipeline& p) {
    OrthGraph g(p.config());
    CliqueCensus c = nonorth_clique_census(g, p.opt.threads);
    if (p.opt.format == "json") {
        json hist = json::array();
        for (const auto& [size, cnt] : c.histogram)
            hist.push_back({{"size", size}, {"count", cnt}});
        emit(p.opt, json{{"config", p.opt.config},
                         {"total", c.total},
                         {"min_size", c.min_size},
                         {"max_size", c.max_size},
                         {"histogram", hist}}
                            .dump(1) +
                        "\n");
    } else {
        std::string out = "size,count\n";
        for (const auto& [size, cnt] : c.histogram)
            out += std::to_string(size) + "," + std::to_string(cnt) + "\n";
        emit(p.opt, out);
    }
    return 0;
}

int cmd_ks(Pipeline& p) {
    OrthGraph g(p.config());
    std::vector<Basis> bases = enumerate_bases(g);
    KSResult r = ks_colorability(g, bases);
    if (p.opt.format == "json") {
        emit(p.opt, json{{"config", p.opt.config},
                         {"satisfiable", r.satisfiable},
                         {"nodes_explored", r.nodes_explored}}
                            .dump(1) +
                        "\n");
    } else {
        emit(p.opt, "config,satisfiable,nodes_explored\n" + p.opt.config + "," +
                        (r.satisfiable ? "SAT" : "UNSAT") + "," +
                        std::to_string(r.nodes_explored) + "\n");
    }
    return r.satisfiable ? 1 : 0;   // both configurations are noncolorable
}

int cmd_opposites(Pipeline& p) {
    CMat4 jm = constants::J();
    const InvolutionFixture* fx = &p.fixtures().opposite_j;
    if (p.opt.j_name == "J1") {
        jm = constants::J1();
        fx = &p.fixtures().opposite_j1;
    } else if (p.opt.j_name == "J2") {
        jm = constants::J2();
        fx = &p.fixtures().opposite_j2;
    }
    OppositeMap om = opposite_map(jm, p.sv());

    if (p.opt.format == "json") {
        json rows = json::array();
        for (std::size_t i = 0; i < om.partner.size(); ++i)
            rows.push_back({{"index", i + 1},
                            {"partner", om.partner[i]},
                            {"fixture_partner", fx->partner[i]},
                            {"match", om.partner[i] == fx->partner[i]}});
        emit(p.opt, json{{"j", p.opt.j_name}, {"pairs", rows}}.dump(1) + "\n");
    } else {
        std::string out = "index,partner,fixture_partner,match\n";
        for (std::size_t i = 0; i < om.partner.size(); ++i)
            out += std::to_string(i + 1) + "," + std::to_string(om.partner[i]) + "," +
                   std::to_string(fx->partner[i]) + "," +
                   (om.partner[i] == fx->partner[i] ? "1" : "0") + "\n";
        emit(p.opt, out);
    }
    return 0;
}

int cmd_basis_pairs(Pipeline& p) {
    OrthGraph g(p.sv());
    std::vector<Basis> bases = enumerate_bases(g);
    BasisPairing bp = partner_basis_map(constants::J(), p.sv(), bases);
    const InvolutionFixture& fx = p.fixtures().basis_pairs_j;

    if (p.opt.format == "json") {
        json rows = json::array();
        for (std::size_t i = 0; i < bp.partner.size(); ++i)
            rows.push_back({{"index", i + 1},
                            {"partner", bp.partner[i]},
                            {"fixture_partner", fx.partner[i]},
                            {"match", bp.partner[i] == fx.partner[i]}});
        emit(p.opt, json{{"pairs", rows}, {"fixed", bp.fixed}}.dump(1) + "\n");
    } else {
        std::string out = "index,partner,fixture_partner,match\n";
        for (std::size_t i = 0; i < bp.partner.size(); ++i)
            out += std::to_string(i + 1) + "," + std::to_string(bp.partner[i]) + "," +
                   std::to_string(fx.partner[i]) + "," +
                   (bp.partner[i] == fx.partner[i] ? "1" : "0") + "\n";
        emit(p.opt, out);
    }
    return 0;
}

int cmd_cosets(Pipeline& p) {
    const Group& sigma = p.sigma();
    Group sub = Group::close({constants::J(), constants::H(), constants::P2()}, 1000);
    std::vector<Coset> cosets = sigma.left_cosets(sub);
    std::vector<CMat4> jcs = coset_j_matrices(sigma, sub, constants::J());

    const char* gen_names[3] = {"P1", "P2", "S"};
    auto word_str = [&](const std::vector<std::uint8_t>& w) {
        if (w.empty()) return std::string("e");
        std::string s;
        for (std::uint8_t g : w) {
            if (!s.empty()) s += ".";
            s += gen_names[g];
        }
        return s;
    };
    auto simple = [](const CMat4& m) {
        for (const auto& row : m.m)
            for (const auto& x : row)
                if (!x.b.is_zero() ||
                    !(x.a == Rational(0) || x.a == Rational(1) || x.a == Rational(-1)))
                    return false;
        return true;
    };

    if (p.opt.format == "json") {
        json rows = json::array();
        for (std::size_t i = 0; i < cosets.size(); ++i) {
            const GroupElement& rep = sigma.element(cosets[i].representative);
            rows.push_back({{"index", i + 1},
                            {"representative_word", word_str(rep.word)},
                            {"representative_perm", rep.perm->cycle_string()},
                            {"representative", mat_json(rep.matrix)},
                            {"j_matrix", mat_json(jcs[i])},
                            {"simple_form", simple(jcs[i])}});
        }
        emit(p.opt, json{{"cosets", rows}}.dump(1) + "\n");
    } else {
        std::string out = "index,word,simple";
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c)
                out += ",j" + std::to_string(r) + std::to_string(c);
        out += "\n";
        for (std::size_t i = 0; i < cosets.size(); ++i) {
            const GroupElement& rep = sigma.element(cosets[i].representative);
            out += std::to_string(i + 1) + "," + word_str(rep.word) + "," +
                   (simple(jcs[i]) ? "1" : "0");
            for (const auto& row : jcs[i].m)
                for (const auto& x : row) out += "," + x.str();
            out += "\n";
        }
        emit(p.opt, out);
    }
    return 0;
}

int cmd_e8(Pipeline& p) {
    RootSystemReport r = e8_verify(realify(p.config()));
    if (p.opt.format == "json") {
        emit(p.opt, json{{"config", p.opt.config},
                         {"vector_count", r.vector_count},
                         {"negation_closed", r.negation_closed},
                         {"unit_norms", r.unit_norms},
                         {"spectrum_ok", r.spectrum_ok},
                         {"counts_ok", r.counts_ok},
                         {"reflection_closed", r.reflection_closed},
                         {"rank", r.rank},
                         {"passed", r.passed()}}
                            .dump(1) +
                        "\n");
    } else {
        std::ostringstream out;
        out << "config,vector_count,negation_closed,unit_norms,spectrum_ok,counts_ok,"
               "reflection_closed,rank,passed\n"
            << p.opt.config << "," << r.vector_count << "," << r.negation_closed << ","
            << r.unit_norms << "," << r.spectrum_ok << "," << r.counts_ok << ","
            << r.reflection_closed << "," << r.rank << "," << r.passed() << "\n";
        emit(p.opt, out.str());
    }
    return r.passed() ? 0 : 1;
}

int cmd_transform(Pipeline& p) {
    const Configuration& sv = p.sv();
    const Configuration& w = p.witting();
    std::vector<QImag> units = field_units(3);

    std::ostringstream csv;
    csv << "witting_ray,unit,image_state,image_sign\n";
    json rows = json::array();
    for (int ray = 0; ray < w.ray_count(); ++ray) {
        for (std::size_t u = 0; u < units.size(); ++u) {
            CVec4 v = scale(units[u], w.ray(ray));
            RealVec8 r;
            r.d = 3;
            for (int k = 0; k < 4; ++k) {
                r.re[static_cast<std::size_t>(k)] = v.c[static_cast<std::size_t>(k)].a;
                r.im[static_cast<std::size_t>(k)] = v.c[static_cast<std::size_t>(k)].b;
            }
            RealVec8 t = witting_to_sv(r);
            CVec4 tv;
            for (int k = 0; k < 4; ++k)
                tv.c[static_cast<std::size_t>(k)] = QImag(t.re[static_cast<std::size_t>(k)], t.im[static_cast<std::size_t>(k)], 7);
            int id = sv.find_ray(tv);
            if (id < 0) throw std::runtime_error("transfer image is not a configuration vector");
            int sign = tv == sv.ray(id) ? 1 : -1;
            csv << ray + 1 << "," << u << "," << sv.display_id(id) << "," << sign << "\n";
            rows.push_back({{"witting_ray", ray + 1},
                            {"unit", u},
                            {"image_state", sv.display_id(id)},
                            {"image_sign", sign}});
        }
    }
    if (p.opt.format == "json")
        emit(p.opt, json{{"pairs", rows}}.dump(1) + "\n");
    else
        emit(p.opt, csv.str());
    return 0;
}

int cmd_verify_all(Pipeline& p) {
    VerifyOptions vo;
    vo.fixtures_dir = resolve_fixtures_dir(p.opt.fixtures);
    vo.threads = p.opt.threads;
    vo.strict_labels = p.opt.strict_labels;
    std::vector<CheckResult> results = run_verification(vo, &std::cerr);
    emit(p.opt, p.opt.format == "json" ? report_json(results) : report_csv(results));
    return all_passed(results, vo.strict_labels) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of the 120-state and Witting ray configurations"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--fixtures", opt.fixtures,
                   "fixture directory (default: $RAYCHECK_FIXTURES or ./data)");
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--out", opt.out, "write output to a file instead of stdout");
    app.add_option("--threads", opt.threads, "worker threads for the clique census")
        ->check(CLI::PositiveNumber);

    auto* c_states = app.add_subcommand("states", "the 120 states with catalog indices and types");
    auto* c_bases = app.add_subcommand("bases", "all orthonormal tetrads");
    auto* c_census = app.add_subcommand("census", "maximal nonorthogonal clique census");
    auto* c_ks = app.add_subcommand("ks-check", "Kochen-Specker colorability search");
    auto* c_opp = app.add_subcommand("opposites", "opposite-state involution for a J matrix");
    auto* c_bp = app.add_subcommand("basis-pairs", "partner-basis involution");
    auto* c_cosets = app.add_subcommand("cosets", "coset representatives and derived J matrices");
    auto* c_e8 = app.add_subcommand("e8", "root-system verification of a realified configuration");
    auto* c_tw = app.add_subcommand("transform-witting",
                                    "base-change map from the Witting vectors onto the 120-state vectors");
    auto* c_all = app.add_subcommand("verify-all", "run the complete verification pipeline");

    for (auto* c : {c_states, c_bases, c_census, c_ks, c_opp, c_bp, c_cosets, c_e8, c_tw, c_all})
        c->fallthrough();
    for (auto* c : {c_bases, c_census, c_ks, c_e8})
        c->add_option("--config", opt.config, "configuration")
            ->check(CLI::IsMember({"sv", "witting"}));
    c_opp->add_option("--j", opt.j_name, "J matrix")->check(CLI::IsMember({"J", "J1", "J2"}));
    c_all->add_flag("--strict-labels", opt.strict_labels,
                    "fail on the flagged label swap of the printed J1/J2 tables");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    Pipeline p;
    p.opt = opt;
    try {
        if (c_states->parsed()) return cmd_states(p);
        if (c_bases->parsed()) return cmd_bases(p);
        if (c_census->parsed()) return cmd_census(p);
        if (c_ks->parsed()) return cmd_ks(p);
        if (c_opp->parsed()) return cmd_opposites(p);
        if (c_bp->parsed()) return cmd_basis_pairs(p);
        if (c_cosets->parsed()) return cmd_cosets(p);
        if (c_e8->parsed()) return cmd_e8(p);
        if (c_tw->parsed()) return cmd_transform(p);
        if (c_all->parsed()) return cmd_verify_all(p);
    } catch (const FixtureError& e) {
        std::cerr << "fixture error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
