// Command-line front end: greens / iota / verify / census / factors over a
// JSON graph file. Exit codes: 0 ok, 1 identity failure, 2 parse or usage
// error, 3 pole at --eval-at, 4 enumeration cap exceeded.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "greenfn/enumeration.hpp"
#include "greenfn/identities.hpp"
#include "greenfn/json_io.hpp"
#include "greenfn/poly_matrix.hpp"

namespace {

using namespace greenfn;

constexpr int kExitOk = 0;
constexpr int kExitIdentityFailure = 1;
constexpr int kExitParseError = 2;
constexpr int kExitPole = 3;
constexpr int kExitCapExceeded = 4;

struct Options {
    std::string input;
    std::string mode = "all";
    std::vector<VertexId> pair;
    std::string eval_at;
    std::string output = "text";
    std::uint64_t cap = kDefaultEnumerationCap;
    bool factored = false;
    std::vector<std::string> check_ids;
};

bool json_output(const Options& opt) { return opt.output == "json"; }

std::string entry_str(const RationalFunction& f, bool factored) {
    return factored ? f.str_factored() : f.str();
}

std::string poly_str(const Poly& p, bool factored) {
    if (!factored || p.is_zero()) return p.str();
    return squarefree_factorization(p).str();
}

std::vector<Mode> modes_for(const std::string& mode) {
    if (mode == "L") return {Mode::L};
    if (mode == "Q") return {Mode::Q};
    return {Mode::L, Mode::Q};
}

void print_greens_text(const BoundaryGraph& g, const GreensMatrix& gm, const Options& opt,
                       const std::optional<Rational>& at) {
    int n = g.interior_count();
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            std::cout << "G[" << g.vertex_at(i) << "][" << g.vertex_at(j) << "] = ";
            if (at)
                std::cout << gm[i][j].eval(*at).str();
            else
                std::cout << entry_str(gm[i][j], opt.factored);
            std::cout << "\n";
        }
    }
}

int run_greens(const BoundaryGraph& g, const Options& opt) {
    std::optional<Rational> at;
    if (!opt.eval_at.empty()) at = Rational::parse(opt.eval_at);

    GreensMatrix result;
    std::optional<Poly> iota1_value;
    if (opt.mode == "matrix") {
        result = greens_linear_algebra(g);
    } else if (opt.mode == "L" || opt.mode == "Q") {
        Mode m = opt.mode == "L" ? Mode::L : Mode::Q;
        result = greens_from_factors(g, m, opt.cap);
        iota1_value = iota1(g, m, opt.cap).value;
    } else {
        // Every route, cross-checked before anything is printed.
        GreensMatrix la = greens_linear_algebra(g);
        GreensMatrix fl = greens_from_factors(g, Mode::L, opt.cap);
        GreensMatrix fq = greens_from_factors(g, Mode::Q, opt.cap);
        for (int i = 0; i < g.interior_count(); ++i) {
            for (int j = 0; j < g.interior_count(); ++j) {
                if (la[i][j] == fl[i][j] && la[i][j] == fq[i][j]) continue;
                std::cerr << "route disagreement at G[" << g.vertex_at(i) << "]["
                          << g.vertex_at(j) << "]:\n  matrix:    " << la[i][j].str()
                          << "\n  L-factors: " << fl[i][j].str()
                          << "\n  Q-factors: " << fq[i][j].str() << "\n";
                return kExitIdentityFailure;
            }
        }
        result = std::move(la);
        iota1_value = iota1(g, Mode::L, opt.cap).value;
    }

    if (at) {
        // Surface the pole before emitting anything.
        for (const auto& row : result)
            for (const auto& entry : row) entry.eval(*at);
    }

    if (json_output(opt)) {
        Json out{{"greens", to_json(result)}};
        Json interior = Json::array();
        for (int i = 0; i < g.interior_count(); ++i) interior.push_back(g.vertex_at(i));
        out["interior"] = std::move(interior);
        if (iota1_value) out["iota1"] = to_json(*iota1_value);
        if (at) {
            Json values = Json::array();
            for (const auto& row : result) {
                Json r = Json::array();
                for (const auto& entry : row) r.push_back(entry.eval(*at).str());
                values.push_back(std::move(r));
            }
            out["evaluated_at"] = at->str();
            out["values"] = std::move(values);
        }
        std::cout << out.dump(2) << "\n";
    } else {
        if (iota1_value)
            std::cout << "iota1 = " << poly_str(*iota1_value, opt.factored) << "\n";
        print_greens_text(g, result, opt, at);
    }
    return kExitOk;
}

void print_iota_text(const std::string& name, const IotaResult& r, const Options& opt,
                     const std::optional<Rational>& at) {
    std::cout << name << " = " << poly_str(r.value, opt.factored);
    if (at) std::cout << "   [at z = " << at->str() << ": " << r.value.eval(*at).str() << "]";
    std::cout << "\n  factors: " << r.factor_count
              << ", weight classes: " << r.term_class_count() << "\n";
    std::cout << "  histogram (omega, loops, b1) -> count:";
    for (const auto& [key, count] : r.class_histogram) {
        auto [omega, loops, b1] = key;
        std::cout << "  (" << omega << "," << loops << "," << b1 << ")->" << count;
    }
    std::cout << "\n";
}

int run_iota(const BoundaryGraph& g, const Options& opt) {
    if (opt.mode == "matrix")
        throw CLI::ValidationError("--mode matrix does not apply to iota");
    std::optional<Rational> at;
    if (!opt.eval_at.empty()) at = Rational::parse(opt.eval_at);

    Json out;
    for (Mode m : modes_for(opt.mode)) {
        IotaResult i1 = iota1(g, m, opt.cap);
        std::optional<IotaResult> i2;
        if (!opt.pair.empty()) i2 = iota2(g, m, opt.pair[0], opt.pair[1], opt.cap);
        if (json_output(opt)) {
            Json block{{"iota1", to_json(i1.value)}, {"iota1_detail", to_json(i1)}};
            if (i2) {
                block["iota2"] = to_json(i2->value);
                block["iota2_detail"] = to_json(*i2);
            }
            if (at) {
                block["evaluated_at"] = at->str();
                block["iota1_value"] = i1.value.eval(*at).str();
                if (i2) block["iota2_value"] = i2->value.eval(*at).str();
            }
            out[mode_name(m)] = std::move(block);
        } else {
            std::cout << "mode " << mode_name(m) << ":\n";
            print_iota_text("iota1", i1, opt, at);
            if (i2)
                print_iota_text("iota2(" + std::to_string(opt.pair[0]) + "," +
                                    std::to_string(opt.pair[1]) + ")",
                                *i2, opt, at);
        }
    }
    if (json_output(opt)) std::cout << out.dump(2) << "\n";
    return kExitOk;
}

struct CheckEntry {
    std::string id;
    bool applicable;
    std::string requirement;
    std::function<IdentityReport()> run;
};

int run_verify(const BoundaryGraph& g, const Options& opt) {
    bool regular_unit = g.regularity().has_value() && g.has_unit_weights();
    std::vector<CheckEntry> entries = {
        {"iota-determinant", true, "",
         [&] { return check_iota_determinant_equality(g, opt.cap); }},
        {"forest-determinant", regular_unit && g.boundary_count() > 0,
         "regular graph, unit weights, nonempty boundary",
         [&] { return check_forest_determinant(g, opt.cap); }},
        {"odd-cycle-difference", true, "",
         [&] { return check_odd_cycle_difference(g, opt.cap); }},
        {"unicyclic-forest", regular_unit && g.boundary_count() == 0,
         "regular graph, unit weights, empty boundary",
         [&] { return check_unicyclic_forest_identity(g, opt.cap); }},
    };

    std::vector<std::string> wanted = opt.check_ids;
    if (!wanted.empty()) {
        for (const std::string& id : wanted) {
            auto it = std::find_if(entries.begin(), entries.end(),
                                   [&](const CheckEntry& e) { return e.id == id; });
            if (it == entries.end())
                throw CLI::ValidationError("unknown check id: " + id);
            if (!it->applicable)
                throw CLI::ValidationError("check " + id + " requires: " + it->requirement);
        }
    }

    bool all_hold = true;
    Json reports = Json::array();
    for (const CheckEntry& entry : entries) {
        bool requested = wanted.empty() ||
                         std::find(wanted.begin(), wanted.end(), entry.id) != wanted.end();
        if (!requested) continue;
        if (!entry.applicable) {
            if (!json_output(opt))
                std::cout << "[skip] " << entry.id << " (needs " << entry.requirement << ")\n";
            else
                reports.push_back(Json{{"id", entry.id}, {"skipped", entry.requirement}});
            continue;
        }
        IdentityReport report = entry.run();
        all_hold = all_hold && report.holds();
        if (json_output(opt)) {
            reports.push_back(to_json(report));
        } else {
            std::cout << (report.holds() ? "[ok]   " : "[FAIL] ") << report.id << "\n";
            for (const ReportPart& part : report.parts) {
                if (part.holds && report.holds()) continue;  // quiet when everything matches
                std::cout << "    " << (part.holds ? "[ok]   " : "[FAIL] ") << part.label
                          << ": " << part.left << (part.holds ? " = " : " != ") << part.right
                          << "\n";
            }
        }
    }
    if (json_output(opt)) std::cout << Json{{"reports", reports}}.dump(2) << "\n";
    return all_hold ? kExitOk : kExitIdentityFailure;
}

int run_census(const BoundaryGraph& g, const Options& opt) {
    ForestCensus census = forest_census(g, opt.cap);
    if (json_output(opt)) {
        Json pairs = Json::array();
        for (const auto& [key, count] : census.n_pair)
            pairs.push_back(Json{{"l", key.first}, {"m", key.second}, {"count", count}});
        std::cout << Json{{"n_boundary", census.n_boundary}, {"pairs", std::move(pairs)}}.dump(2)
                  << "\n";
    } else {
        std::cout << "boundary-rooted spanning forests: " << census.n_boundary << "\n";
        for (const auto& [key, count] : census.n_pair)
            std::cout << "  with marked pair (" << key.first << "," << key.second
                      << "): " << count << "\n";
    }
    return kExitOk;
}

int run_factors(const BoundaryGraph& g, const Options& opt) {
    DeformedGraph dg{g};
    std::optional<std::pair<VertexId, VertexId>> pair;
    if (!opt.pair.empty()) pair = std::make_pair(opt.pair[0], opt.pair[1]);

    Json out;
    for (Mode m : modes_for(opt.mode)) {
        Json list = Json::array();
        long count = 0;
        for_each_factor(dg, m, pair, opt.cap, [&](const Factor& f) {
            ++count;
            if (json_output(opt)) {
                list.push_back(factor_to_json(f, dg));
            } else {
                std::cout << "[" << mode_name(m) << "] {";
                for (std::size_t i = 0; i < f.edge_subset.size(); ++i)
                    std::cout << (i ? ", " : "") << dg.edge_label(f.edge_subset[i]);
                std::cout << "}  omega=" << f.omega << " loops=" << f.loops.size()
                          << " b1=" << f.b1_noloop;
                if (pair) std::cout << " dist=" << f.pair_distance;
                std::cout << "\n";
            }
        });
        if (json_output(opt))
            out[mode_name(m)] = Json{{"count", count}, {"factors", std::move(list)}};
        else
            std::cout << "mode " << mode_name(m) << ": " << count << " factors\n";
    }
    if (json_output(opt)) std::cout << out.dump(2) << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Green's functions of discrete Schrodinger operators on graphs "
                 "with boundary, via cofactors and via factor enumeration"};
    app.require_subcommand(1);

    Options opt;
    auto add_common = [&](CLI::App* cmd, bool with_mode, bool with_pair, bool with_eval,
                          bool with_factored) {
        cmd->add_option("--input", opt.input, "graph JSON file")->required();
        if (with_mode)
            cmd->add_option("--mode", opt.mode, "L, Q, matrix, or all")
                ->check(CLI::IsMember({"L", "Q", "matrix", "all"}));
        if (with_pair)
            cmd->add_option("--pair", opt.pair, "two interior vertex ids")->expected(2);
        if (with_eval)
            cmd->add_option("--eval-at", opt.eval_at, "evaluate at z = P/Q");
        cmd->add_option("--output", opt.output, "text or json")
            ->check(CLI::IsMember({"text", "json"}));
        cmd->add_option("--cap", opt.cap, "enumeration cap");
        if (with_factored)
            cmd->add_flag("--factored", opt.factored, "print square-free factored forms");
    };

    CLI::App* greens = app.add_subcommand("greens", "Green's function matrix");
    add_common(greens, true, false, true, true);
    CLI::App* iota_cmd = app.add_subcommand("iota", "factor-sum polynomials");
    add_common(iota_cmd, true, true, true, true);
    CLI::App* verify = app.add_subcommand("verify", "run identity checks");
    add_common(verify, false, false, false, false);
    verify->add_option("ids", opt.check_ids,
                       "checks to run (iota-determinant, forest-determinant, "
                       "odd-cycle-difference, unicyclic-forest); default: all applicable");
    CLI::App* census = app.add_subcommand("census", "boundary-rooted forest counts");
    add_common(census, false, false, false, false);
    CLI::App* factors = app.add_subcommand("factors", "dump enumerated factors");
    add_common(factors, true, true, false, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kExitParseError;
    }

    try {
        greenfn::BoundaryGraph g = greenfn::load_graph(opt.input);
        if (!opt.pair.empty()) {
            for (greenfn::VertexId v : opt.pair)
                if (!g.is_interior(v))
                    throw greenfn::GraphError("--pair vertex " + std::to_string(v) +
                                              " is not interior");
        }
        if (greens->parsed()) return run_greens(g, opt);
        if (iota_cmd->parsed()) return run_iota(g, opt);
        if (verify->parsed()) return run_verify(g, opt);
        if (census->parsed()) return run_census(g, opt);
        if (factors->parsed()) return run_factors(g, opt);
        return kExitParseError;
    } catch (const greenfn::PoleError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPole;
    } catch (const greenfn::CapExceededError& e) {
        std::cerr << "error: " << e.what() << " (raise with --cap)\n";
        return kExitCapExceeded;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParseError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParseError;
    }
}
