#pragma once

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "perichain/suites.hpp"

namespace perichain {

/// Batch front end: build chains from JSON parameter files, run named
/// verification suites, reproduce the three worked example sections.
/// Exit codes: 0 every selected check passed, 1 a check failed,
/// 2 usage or input error.

namespace cli_detail {

inline int max_n_cap() {
    if (const char* env = std::getenv("TWIST_MAX_N")) {
        int v = std::atoi(env);
        if (v >= 2) return v;
    }
    return 8;
}

inline int cmd_algebra(int n, const std::string& json_out, std::ostream& os) {
    if (n < 2 || n > max_n_cap()) {
        std::cerr << "algebra: N must be between 2 and " << max_n_cap() << "\n";
        return 2;
    }
    SlAlgebra sl = build_sl(n);
    nlohmann::ordered_json j;
    j["schema"] = "1";
    j["algebra"] = sl.alg.name();
    j["dimension"] = sl.alg.dim();
    j["basis"] = nlohmann::ordered_json::array();
    for (int i = 0; i < sl.alg.dim(); ++i) j["basis"].push_back(sl.alg.label(i).str());
    j["brackets"] = nlohmann::ordered_json::array();
    for (int i = 0; i < sl.alg.dim(); ++i)
        for (int k = i + 1; k < sl.alg.dim(); ++k) {
            const LieElement& br = sl.alg.bracket(i, k);
            if (br.is_zero()) continue;
            nlohmann::ordered_json e;
            e["x"] = sl.alg.label(i).str();
            e["y"] = sl.alg.label(k).str();
            e["bracket"] = nlohmann::ordered_json::array();
            for (const auto& [idx, c] : br.coeffs()) {
                nlohmann::ordered_json t;
                t["gen"] = sl.alg.label(idx).str();
                t["coeff"] = c.str();
                e["bracket"].push_back(t);
            }
            j["brackets"].push_back(e);
        }
    if (!json_out.empty()) {
        std::ofstream f(json_out);
        if (!f) {
            std::cerr << "algebra: cannot write " << json_out << "\n";
            return 2;
        }
        f << j.dump(2) << "\n";
    } else {
        os << j.dump(2) << "\n";
    }
    return 0;
}

inline void dump_operator(const std::string& dir, const std::string& name,
                          const TensorOp<Rational>& op) {
    nlohmann::ordered_json j;
    j["schema"] = "1";
    j["name"] = name;
    j["legs"] = op.legs;
    j["dim"] = op.dim;
    j["entries"] = nlohmann::ordered_json::array();
    for (int i = 0; i < op.mat.n(); ++i)
        for (const auto& [c, v] : op.mat.row(i))
            j["entries"].push_back({i, c, v.str()});
    std::ofstream f(dir + "/" + name + ".json");
    f << j.dump() << "\n";
}

inline int cmd_verify(const std::string& spec_path, const std::string& suite,
                      const std::string& rep, unsigned long long seed,
                      const std::string& out_path, const std::string& dump_dir) {
    nlohmann::json j;
    {
        std::ifstream f(spec_path);
        if (!f) {
            std::cerr << "verify: cannot read " << spec_path << "\n";
            return 2;
        }
        j = nlohmann::json::parse(f, nullptr, /*allow_exceptions=*/false);
        if (j.is_discarded()) {
            std::cerr << "verify: malformed JSON in " << spec_path << "\n";
            return 2;
        }
    }
    ChainSpec cs;
    std::vector<VerificationReport> reports;
    try {
        cs = chain_spec_from_json(j);
        cs.validate(max_n_cap());
        SuiteOptions opt;
        opt.rep = rep;
        opt.seed = seed;
        if (suite == "examples") {
            if (cs.N == 3 || cs.N == 4 || cs.N == 7)
                reports = run_example_section("sl" + std::to_string(cs.N));
            else {
                std::cerr << "verify: the examples suite exists for N in {3,4,7}\n";
                return 2;
            }
        } else {
            reports = run_suite(cs, suite, opt);
        }
        if (!dump_dir.empty()) {
            SlAlgebra sl = build_sl(cs.N);
            Representation r = suites_detail::representation_for(sl, rep);
            auto F = chain_from_spec<Rational>(cs, sl, Rational(1));
            dump_operator(dump_dir, "twist", eval_op(F, r));
            dump_operator(dump_dir, "r_matrix", r_matrix(F, r));
        }
    } catch (const BadParameters& e) {
        std::cerr << "verify: " << e.what() << "\n";
        return 2;
    } catch (const TooManyLinks& e) {
        std::cerr << "verify: " << e.what() << "\n";
        return 2;
    }

    auto out = reports_to_json(suite, reports);
    out["spec"] = chain_spec_to_json(cs);
    if (!out_path.empty()) {
        std::ofstream f(out_path);
        if (!f) {
            std::cerr << "verify: cannot write " << out_path << "\n";
            return 2;
        }
        f << out.dump(2) << "\n";
    }
    std::cout << "# identities verified in finite-dimensional representations "
                 "(exact arithmetic; necessary-but-not-sufficient for U(g))\n";
    bool all_pass = true;
    for (const auto& r : reports) {
        std::cout << (r.pass ? "PASS" : "FAIL") << " " << r.check
                  << " residual_support=" << r.residual_support << "\n";
        // the as-printed coproduct tables carry documented misprints and are
        // reported, not gated on
        if (r.check.find("table-printed") == std::string::npos) all_pass = all_pass && r.pass;
    }
    return all_pass ? 0 : 1;
}

inline int cmd_example(const std::string& section, const std::string& out_dir) {
    std::vector<VerificationReport> reports;
    try {
        reports = run_example_section(section);
    } catch (const BadParameters& e) {
        std::cerr << "example: " << e.what() << "\n";
        return 2;
    }
    if (!out_dir.empty()) {
        std::ofstream f(out_dir + "/" + section + ".json");
        if (!f) {
            std::cerr << "example: cannot write to " << out_dir << "\n";
            return 2;
        }
        f << reports_to_json("examples", reports).dump(2) << "\n";
    }
    std::cout << "# identities verified in finite-dimensional representations "
                 "(exact arithmetic; necessary-but-not-sufficient for U(g))\n";
    bool all_pass = true;
    for (const auto& r : reports) {
        std::cout << (r.pass ? "PASS" : "FAIL") << " " << r.check
                  << " residual_support=" << r.residual_support << "\n";
        // the as-printed coproduct tables carry documented misprints and are
        // reported, not gated on
        if (r.check.find("table-printed") == std::string::npos) all_pass = all_pass && r.pass;
    }
    return all_pass ? 0 : 1;
}

} // namespace cli_detail

inline int run_cli(std::vector<std::string> args) {
    CLI::App app{"exact verification toolkit for peripheric chains of twists"};
    app.require_subcommand(1);

    auto* alg = app.add_subcommand("algebra", "dump an sl(N) basis and its structure constants");
    int n = 0;
    std::string alg_json;
    alg->add_option("--n", n, "rank parameter N of sl(N)")->required();
    alg->add_option("--json", alg_json, "write the dump to this file");

    auto* ver = app.add_subcommand("verify", "run verification suites on a chain spec");
    std::string spec_path, suite = "all", rep = "defining", out_path, dump_dir;
    unsigned long long seed = 1;
    ver->add_option("--spec", spec_path, "chain spec JSON file")->required();
    ver->add_option("--suite", suite, "suite selector");
    ver->add_option("--rep", rep, "defining or adjoint");
    ver->add_option("--seed", seed, "seed recorded in the reports");
    ver->add_option("--out", out_path, "report JSON file");
    ver->add_option("--dump-ops", dump_dir, "dump evaluated operators to this directory");

    auto* ex = app.add_subcommand("example", "reproduce one worked example section");
    std::string section, ex_out;
    ex->add_option("section", section, "sl3, sl4 or sl7")->required();
    ex->add_option("--out", ex_out, "directory for the section report");

    // CLI11 reads argv-style reversed vectors
    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (alg->parsed()) return cli_detail::cmd_algebra(n, alg_json, std::cout);
        if (ver->parsed()) {
            if (!suite_names().count(suite)) {
                std::cerr << "verify: unknown suite " << suite << "\n";
                return 2;
            }
            if (rep != "defining" && rep != "adjoint") {
                std::cerr << "verify: unknown representation " << rep << "\n";
                return 2;
            }
            return cli_detail::cmd_verify(spec_path, suite, rep, seed, out_path, dump_dir);
        }
        if (ex->parsed()) return cli_detail::cmd_example(section, ex_out);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

} // namespace perichain
