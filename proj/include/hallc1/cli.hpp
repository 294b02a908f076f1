/*
   Copyright 2026 The hallc1 authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef HALLC1_CLI_HPP
#define HALLC1_CLI_HPP

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "pbw.hpp"
#include "serialize.hpp"

namespace hallc1 {

struct RunConfig {
    std::string quiver_path;
    std::vector<int> primes = {2, 3, 5};
    std::string format = "text";  // text | json | csv
    std::string out_path;         // empty: stdout
    unsigned seed = 0;
    int threshold_submodule = 14;
    std::int64_t threshold_end = std::int64_t(1) << 22;
};

namespace cli_detail {

template <class B, class C>
inline std::string elem_str(const IndCatalogue& cat, const LinComb<B, C>& e) {
    if (e.terms.empty()) return "0";
    std::string s;
    for (auto& [b, c] : e.terms) {
        if (!s.empty()) s += " + ";
        s += "(" + coeff_str(c) + ")*" + shorthand(cat, b);
    }
    return s;
}

inline nlohmann::ordered_json word_json(const GenWord& w) {
    nlohmann::ordered_json a = nlohmann::ordered_json::array();
    for (const GenLetter& l : w)
        a.push_back((l.is_k ? "k" : "c") + std::to_string(l.vertex + 1));
    return a;
}

inline std::string word_str(const GenWord& w) {
    if (w.empty()) return "1";
    std::string s;
    for (const GenLetter& l : w) {
        if (!s.empty()) s += " ";
        s += (l.is_k ? "k" : "c") + std::to_string(l.vertex + 1);
    }
    return s;
}

/// One table of results plus the structured JSON; rendered per --format.
struct Artifact {
    nlohmann::ordered_json meta = nlohmann::ordered_json::object();
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    nlohmann::ordered_json results = nlohmann::ordered_json::array();

    void add_row(std::vector<std::string> r) { rows.push_back(std::move(r)); }

    void emit(const RunConfig& cfg, std::ostream& os) const {
        if (cfg.format == "json") {
            nlohmann::ordered_json j = meta;
            j["results"] = results;
            os << j.dump(2) << "\n";
            return;
        }
        const char* sep = cfg.format == "csv" ? "," : "  ";
        for (auto& [k, v] : meta.items())
            os << "# " << k << "=" << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
        for (size_t i = 0; i < header.size(); ++i) os << (i ? sep : "") << header[i];
        os << "\n";
        for (const auto& r : rows) {
            for (size_t i = 0; i < r.size(); ++i) {
                std::string cell = r[i];
                if (cfg.format == "csv" && cell.find(',') != std::string::npos)
                    cell = "\"" + cell + "\"";
                os << (i ? sep : "") << cell;
            }
            os << "\n";
        }
    }
};

inline std::string primes_str(const std::vector<int>& primes) {
    std::string s;
    for (size_t i = 0; i < primes.size(); ++i) s += (i ? "," : "") + std::to_string(primes[i]);
    return s;
}

inline Artifact make_artifact(const RunConfig& cfg, const std::string& command,
                              const DynkinQuiver& Q) {
    Artifact art;
    art.meta["command"] = command;
    art.meta["quiver"] = cfg.quiver_path;
    art.meta["type"] = std::string(1, "ADE"[(int)Q.type()]) + std::to_string(Q.n());
    art.meta["primes"] = primes_str(cfg.primes);
    art.meta["seed"] = cfg.seed;
    art.meta["threshold_submodule"] = cfg.threshold_submodule;
    art.meta["threshold_end"] = cfg.threshold_end;
    return art;
}

/// Identity-id filter for the verify selectors.
inline bool selector_matches(const std::string& sel, const std::string& id) {
    auto starts = [&](const char* p) { return id.rfind(p, 0) == 0; };
    if (sel == "all") return true;
    if (sel == "6.1") return id == "6.1(1)" || starts("6.2-line") || starts("6.3-line");
    if (sel == "6.3") return starts("6.3(") || starts("6.13-") || starts("6.14-");
    if (sel == "7.4") return id == "7.4(1)" || starts("7.1-line") || starts("7.2-line");
    if (sel == "7.5")
        return id == "7.5(1)" || id == "7.3-residual" || id == "7.3-reduced" ||
               id == "7.4-reduced";
    if (sel == "4.2") return id == "4.2";
    if (sel == "2.11") return starts("2.11");
    if (sel == "5.1") return starts("5.1-");
    if (sel == "7.3") return id == "7.3-central";
    return false;
}

}  // namespace cli_detail

/// Runs the command line given argv-style arguments; all output goes to `os`,
/// diagnostics to `es`. Returns the process exit code.
inline int run_cli(int argc, const char* const* argv, std::ostream& os = std::cout,
                   std::ostream& es = std::cerr) {
    using cli_detail::Artifact;
    using cli_detail::elem_str;

    RunConfig cfg;
    CLI::App app{"Hall algebra engine for 1-cyclic complexes over Dynkin path algebras"};
    app.require_subcommand(1);
    app.add_option("--quiver", cfg.quiver_path, "quiver description file")
        ->required()
        ->check(CLI::ExistingFile);
    app.add_option("--primes", cfg.primes, "primes to compute at")->delimiter(',');
    app.add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--out", cfg.out_path, "write output to this path instead of stdout");
    app.add_option("--seed", cfg.seed, "random seed recorded in the artifact");
    app.add_option("--threshold-submodule", cfg.threshold_submodule,
                   "largest total dimension enumerated in subobject searches")
        ->check(CLI::PositiveNumber);
    app.add_option("--threshold-end", cfg.threshold_end,
                   "largest endomorphism-space size enumerated for Aut counts")
        ->check(CLI::PositiveNumber);

    auto* roots_cmd = app.add_subcommand("roots", "positive roots and projective markers");
    auto* indecs_cmd = app.add_subcommand("indecs", "indecomposable isoclasses in canonical order");
    std::string arg_x, arg_y, arg_z, arg_kind, arg_sel = "all";
    int arg_bound = 5;
    auto* hallnum_cmd = app.add_subcommand("hallnum", "structure constant F^Z_{X,Y} per prime");
    hallnum_cmd->add_option("x", arg_x, "quotient class")->required();
    hallnum_cmd->add_option("y", arg_y, "sub class")->required();
    hallnum_cmd->add_option("z", arg_z, "middle class")->required();
    auto* hallpoly_cmd = app.add_subcommand("hallpoly", "Hall polynomial in q for a triple");
    hallpoly_cmd->add_option("x", arg_x, "quotient class")->required();
    hallpoly_cmd->add_option("y", arg_y, "sub class")->required();
    hallpoly_cmd->add_option("z", arg_z, "middle class")->required();
    auto* mul_cmd = app.add_subcommand("mul", "product of two classes");
    mul_cmd->add_option("kind", arg_kind, "product kind")
        ->required()
        ->check(CLI::IsMember({"plain", "degenerate", "twisted", "module", "module-twisted"}));
    mul_cmd->add_option("a", arg_x, "left factor")->required();
    mul_cmd->add_option("b", arg_y, "right factor")->required();
    auto* bracket_cmd = app.add_subcommand("bracket", "Lie bracket of two indecomposables");
    bracket_cmd->add_option("mu", arg_x, "left class")->required();
    bracket_cmd->add_option("nu", arg_y, "right class")->required();
    auto* express_cmd = app.add_subcommand("express", "write a class in the minimal generators");
    express_cmd->add_option("lambda", arg_x, "target class")->required();
    auto* pbw_cmd = app.add_subcommand("pbw-check", "ordered-monomial triangularity sweep");
    pbw_cmd->add_option("bound", arg_bound, "underlying dimension bound")->required();
    auto* verify_cmd = app.add_subcommand("verify", "run the relation verification suite");
    verify_cmd->add_option("selector", arg_sel, "identity group to check")
        ->check(CLI::IsMember({"all", "6.1", "6.3", "7.4", "7.5", "4.2", "2.11", "5.1", "7.3"}));

    // global flags may be given after the subcommand name
    for (CLI::App* sub : app.get_subcommands(nullptr)) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, os, es);
    }

    int code = 0;
    try {
        std::ifstream qf(cfg.quiver_path);
        std::stringstream qbuf;
        qbuf << qf.rdbuf();
        DynkinQuiver Q = parse_quiver(qbuf.str());
        PolyContext pc(Q, cfg.threshold_submodule, cfg.threshold_end);
        const IndCatalogue& cat = pc.at_prime(cfg.primes.empty() ? 2 : cfg.primes[0]).cat();

        auto c1 = [&](const std::string& s) { return parse_c1_descriptor(cat, s); };
        auto mc = [&](const std::string& s) { return parse_mod_descriptor(cat, s); };
        auto rb = [](const C1Class& c) { return C1Element<Rational>::basis(c); };
        auto lbv = [](const C1Class& c) { return C1Element<LaurentV>::basis(c); };

        Artifact art = cli_detail::make_artifact(cfg, app.get_subcommands()[0]->get_name(), Q);

        if (*roots_cmd) {
            art.header = {"root", "dim", "projective"};
            for (int i = 0; i < cat.size(); ++i) {
                std::string mark;
                for (int v = 0; v < Q.n(); ++v)
                    if (cat.projective_root(v) == i) mark = "P" + std::to_string(v + 1);
                art.add_row({std::to_string(i + 1), dim_vector_key(cat.root(i)), mark});
                art.results.push_back({{"root", i + 1},
                                       {"dim", dim_vector_key(cat.root(i))},
                                       {"projective", mark}});
            }
        } else if (*indecs_cmd) {
            art.header = {"class", "homology", "underlying"};
            for (const IndC1& x : canonical_order(cat)) {
                C1Class c = x.as_class();
                std::string h = x.is_k ? dim_vector_key(DimVector(Q.n(), 0))
                                       : dim_vector_key(cat.root(x.idx));
                std::string u = dim_vector_key(cat.class_dim(underlying_projective(cat, c)));
                art.add_row({shorthand(cat, c), h, u});
                art.results.push_back(
                    {{"class", shorthand(cat, c)}, {"homology", h}, {"underlying", u}});
            }
        } else if (*hallnum_cmd) {
            C1Class x = c1(arg_x), y = c1(arg_y), z = c1(arg_z);
            art.header = {"prime", "count"};
            for (int p : cfg.primes) {
                std::int64_t f = pc.at_prime(p).hall_number(x, y, z);
                art.add_row({std::to_string(p), std::to_string(f)});
                art.results.push_back({{"prime", p}, {"count", f}});
            }
        } else if (*hallpoly_cmd) {
            IntPoly psi = pc.hall_polynomial(c1(arg_x), c1(arg_y), c1(arg_z));
            art.header = {"polynomial"};
            art.add_row({psi.str()});
            art.results.push_back({{"polynomial", psi.str()}});
        } else if (*mul_cmd) {
            art.meta["kind"] = arg_kind;
            if (arg_kind == "plain") {
                art.header = {"prime", "product"};
                for (int p : cfg.primes) {
                    auto r = pc.at_prime(p).multiply(rb(c1(arg_x)), rb(c1(arg_y)));
                    art.add_row({std::to_string(p), elem_str(cat, r)});
                    art.results.push_back({{"prime", p}, {"product", to_json(cat, r)}});
                }
            } else if (arg_kind == "degenerate") {
                auto r = pc.degenerate_multiply(rb(c1(arg_x)), rb(c1(arg_y)));
                art.header = {"product"};
                art.add_row({elem_str(cat, r)});
                art.results.push_back({{"product", to_json(cat, r)}});
            } else if (arg_kind == "twisted") {
                auto r = pc.twisted_multiply_symbolic(lbv(c1(arg_x)), lbv(c1(arg_y)));
                art.header = {"product"};
                art.add_row({elem_str(cat, r)});
                art.results.push_back({{"product", to_json(cat, r)}});
            } else if (arg_kind == "module") {
                art.header = {"prime", "product"};
                for (int p : cfg.primes) {
                    auto r = pc.at_prime(p).multiply_module(
                        ModElement<Rational>::basis(mc(arg_x)), ModElement<Rational>::basis(mc(arg_y)));
                    art.add_row({std::to_string(p), elem_str(cat, r)});
                    art.results.push_back({{"prime", p}, {"product", to_json(cat, r)}});
                }
            } else {  // module-twisted
                auto r = pc.twisted_multiply_module_symbolic(ModElement<LaurentV>::basis(mc(arg_x)),
                                                            ModElement<LaurentV>::basis(mc(arg_y)));
                art.header = {"product"};
                art.add_row({elem_str(cat, r)});
                art.results.push_back({{"product", to_json(cat, r)}});
            }
        } else if (*bracket_cmd) {
            auto r = pc.lie_bracket(c1(arg_x), c1(arg_y));
            art.header = {"bracket"};
            art.add_row({elem_str(cat, r)});
            art.results.push_back({{"bracket", to_json(cat, r)}});
        } else if (*express_cmd) {
            C1Class lambda = c1(arg_x);
            art.header = {"prime", "expression"};
            for (int p : cfg.primes) {
                HallContext& ctx = pc.at_prime(p);
                NCPolynomial e = express_in_generators(ctx, lambda);
                art.add_row({std::to_string(p), e.str()});
                nlohmann::ordered_json terms = nlohmann::ordered_json::array();
                for (auto& [w, c] : e.terms)
                    terms.push_back({{"word", cli_detail::word_json(w)}, {"coeff", c.str()}});
                art.results.push_back({{"prime", p}, {"terms", terms}});
            }
        } else if (*pbw_cmd) {
            art.header = {"prime", "classes", "violations"};
            for (int p : cfg.primes) {
                auto rep = pbw_triangularity_check(pc.at_prime(p), arg_bound);
                art.add_row({std::to_string(p), std::to_string(rep.classes_checked),
                             std::to_string(rep.violations.size())});
                nlohmann::ordered_json viols = nlohmann::ordered_json::array();
                for (auto& v : rep.violations)
                    viols.push_back({{"class", shorthand(cat, v.lambda)}, {"reason", v.reason}});
                art.results.push_back(
                    {{"prime", p}, {"classes", rep.classes_checked}, {"violations", viols}});
                if (!rep.ok()) code = 1;
            }
        } else if (*verify_cmd) {
            art.meta["selector"] = arg_sel;
            art.header = {"identity", "pair", "prime", "status"};
            nlohmann::ordered_json report = verify_relation_suite(pc, cfg.primes);
            for (const auto& item : report) {
                std::string id = item.at("identity");
                if (!cli_detail::selector_matches(arg_sel, id)) continue;
                auto pr = item.at("pair");
                art.add_row({id, pr[0].dump() + "-" + pr[1].dump(), item.at("prime").dump(),
                             item.at("status")});
                art.results.push_back(item);
                if (item.at("status") != "pass") code = 1;
            }
        }

        if (!cfg.out_path.empty()) {
            std::ofstream of(cfg.out_path);
            art.emit(cfg, of);
        } else {
            art.emit(cfg, os);
        }
    } catch (const std::exception& e) {
        es << "error: " << e.what() << "\n";
        return 1;
    }
    return code;
}

}  // namespace hallc1

#endif
