#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "bks/alcove.hpp"
#include "bks/errors.hpp"
#include "bks/oracle.hpp"
#include "bks/weyl_cache.hpp"

namespace bks::app {

namespace {

using Clock = std::chrono::steady_clock;

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string tok;
    std::istringstream in(s);
    while (std::getline(in, tok, sep)) out.push_back(tok);
    return out;
}

Coords resolve_point(const RootSystem& rs, int k, const PointSpec& p, const char* name) {
    if (p.beta && p.weight) throw ValidationError(std::string("give either --") + name + " or its --weight form");
    if (p.beta) {
        Coords out;
        for (const auto& tok : split(*p.beta, ',')) {
            try {
                out.push_back(Rational::parse(tok));
            } catch (const std::invalid_argument&) {
                throw ValidationError(std::string(name) + ": '" + tok + "' is not a rational");
            }
        }
        if (out.size() != static_cast<std::size_t>(rs.rank))
            throw ValidationError(std::string(name) + " needs " + std::to_string(rs.rank) + " coordinates");
        return out;
    }
    if (p.weight) {
        std::vector<std::int64_t> w;
        for (const auto& tok : split(*p.weight, ',')) {
            try {
                std::size_t used = 0;
                w.push_back(std::stoll(tok, &used));
                if (used != tok.size()) throw std::invalid_argument(tok);
            } catch (const std::logic_error&) {
                throw ValidationError(std::string(name) + " weight: '" + tok + "' is not an integer");
            }
        }
        if (w.size() != static_cast<std::size_t>(rs.rank))
            throw ValidationError(std::string(name) + " weight needs " + std::to_string(rs.rank) + " coordinates");
        return beta_from_weight(rs, w, k);
    }
    throw ValidationError(std::string("missing --") + name + " (or its --weight form)");
}

std::string rootsys_csv(const RootSystem& rs) {
    std::ostringstream os;
    os << "index,height,coords,norm_sq\n";
    for (std::size_t i = 0; i < rs.positive_roots.size(); ++i) {
        const auto& a = rs.positive_roots[i];
        Rational height;
        for (const auto& x : a) height += x;
        std::string coords;
        for (std::size_t j = 0; j < a.size(); ++j) coords += (j ? " " : "") + a[j].str();
        os << i + 1 << ',' << height.str() << ',' << coords << ',' << inner_product(rs, a, a).str() << '\n';
    }
    return os.str();
}

}  // namespace

Json cmd_rootsys_info(const RunConfig& c) {
    require_group(c);
    const RootSystem rs = build_root_system(c.type_letter, c.rank);
    Json report = make_report("rootsys info", c);
    Json r;
    r["group"] = rs.name();
    r["r"] = rs.rank;
    r["m"] = rs.m();
    r["n"] = rs.n();
    r["cartan"] = to_json(rs.cartan);
    r["gram"] = to_json(rs.gram);
    Json roots = Json::array();
    for (const auto& a : rs.positive_roots) roots.push_back(to_json(a));
    r["positive_roots"] = std::move(roots);
    r["highest_root"] = to_json(rs.highest_root);
    r["rho"] = to_json(rs.rho);
    r["fundamental_weights"] = to_json(rs.weight_to_root.transpose());
    Json comarks = Json::array();
    for (const auto& x : rs.highest_root_comarks) comarks.push_back(x.str());
    r["highest_root_comarks"] = std::move(comarks);
    r["kappa_sq"] = to_json(kappa_squared(rs, c.conventions.haar));
    const SymbolicReal vol = vol_GT_metric(rs);
    r["vol_GT_metric"] = {{"coefficient", to_json(vol.coefficient)}, {"two_pi_power", vol.two_pi_power},
                          {"value", vol.value()}};
    report["results"] = std::move(r);
    return report;
}

Json cmd_weyl_enumerate(const RunConfig& c) {
    require_group(c);
    const RootSystem rs = build_root_system(c.type_letter, c.rank);
    Json report = make_report("weyl enumerate", c);
    const WeylLoad load = load_or_enumerate_weyl(rs, c.weyl_cache_dir, c.max_weyl);
    std::vector<std::size_t> histogram;
    for (const auto& w : load.elements) {
        const auto l = static_cast<std::size_t>(w.length());
        if (histogram.size() <= l) histogram.resize(l + 1, 0);
        ++histogram[l];
    }
    const std::uint64_t classical = oracle::classical_weyl_order(rs);
    Json r;
    r["group"] = rs.name();
    r["order"] = load.elements.size();
    r["longest_length"] = histogram.empty() ? 0 : histogram.size() - 1;
    r["length_histogram"] = histogram;
    report["results"] = std::move(r);
    verify::CheckRecord check;
    check.suite = "weyl";
    check.name = "classical_order";
    check.record_exact(load.elements.size() == classical, "enumerated " + std::to_string(load.elements.size()) +
                                                              ", classical " + std::to_string(classical));
    report["checks"] = Json::array({to_json(check)});
    report["pass"] = check.pass;
    report["runtime"]["weyl_from_cache"] = load.from_cache;
    if (!c.weyl_cache_dir.empty()) report["runtime"]["cache_file"] = weyl_cache_path(c.weyl_cache_dir, rs).string();
    return report;
}

Json cmd_pairing(const RunConfig& c, const PointSpec& beta, const PointSpec& beta_prime, bool table,
                 std::vector<PairingResult>& rows) {
    require_group(c);
    if (c.k < 1) throw ValidationError("--k is required and must be >= 1");
    const RootSystem rs = build_root_system(c.type_letter, c.rank);
    Json report = make_report(table ? "pairing --table" : "pairing", c);
    const WeylLoad load = load_or_enumerate_weyl(rs, c.weyl_cache_dir, c.max_weyl);

    if (table) {
        if (beta.beta || beta.weight || beta_prime.beta || beta_prime.weight)
            throw ValidationError("--table computes every admissible pair; do not pass points");
        const auto points = enumerate_admissible(rs, c.k);
        for (const auto& p : points)
            for (const auto& q : points) rows.push_back(bks_pairing(rs, load.elements, c.k, p.beta, q.beta, c.conventions));
    } else {
        const Coords b = resolve_point(rs, c.k, beta, "beta");
        const Coords bp = (beta_prime.beta || beta_prime.weight) ? resolve_point(rs, c.k, beta_prime, "beta-prime") : b;
        rows.push_back(bks_pairing(rs, load.elements, c.k, b, bp, c.conventions));
    }

    Json r;
    r["group"] = rs.name();
    r["weyl_order"] = load.elements.size();
    r["row_count"] = rows.size();
    Json list = Json::array();
    for (const auto& p : rows) list.push_back(to_json(p));
    r["rows"] = std::move(list);
    report["results"] = std::move(r);
    report["runtime"]["weyl_from_cache"] = load.from_cache;
    return report;
}

Json cmd_verify(const RunConfig& c) {
    Json report = make_report("verify --suite " + c.suite, c);
    verify::Options o;
    o.seed = c.seed;
    o.trials = c.trials;
    o.cache_dir = c.weyl_cache_dir;
    const verify::SuiteReport suite = verify::run_suite(c.suite, o);
    Json checks = Json::array();
    for (const auto& check : suite.checks) checks.push_back(to_json(check));
    report["checks"] = std::move(checks);
    report["pass"] = suite.pass();
    return report;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            const std::optional<std::string>& env_cache_dir) {
    CLI::App app{"Quasi-Hamiltonian BKS pairings, root data and density checks", "bks"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kToolVersion);

    Settings flags;
    std::string config_path;
    PointSpec beta, beta_prime;
    bool table = false;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "key = value settings file (flags take precedence)");
        auto setting = [&](const std::string& name, const std::string& key, const std::string& help) {
            sub->add_option_function<std::string>(name, [&flags, key](const std::string& v) { flags[key] = v; }, help);
        };
        setting("--type", "type", "Cartan type letter A-G");
        setting("--rank", "rank", "rank r");
        setting("--k", "k", "level k >= 1");
        setting("--haar", "haar", "probability | unit-lattice");
        sub->add_flag_function("--phase-k", [&flags](std::int64_t) { flags["phase_k"] = "true"; },
                               "use k ||w beta - beta'||^2 as the phase exponent");
        setting("--seed", "seed", "seed for randomized suites");
        setting("--cache-dir", "weyl_cache_dir", "Weyl group cache directory (also BKS_CACHE_DIR)");
        setting("--output", "output", "json | csv");
        setting("--max-weyl", "max_weyl", "abort enumeration past this many elements");
        setting("--trials", "trials", "trials per randomized check");
        setting("--suite", "suite", "densities | signs | oracles | all");
    };

    CLI::App* rootsys = app.add_subcommand("rootsys", "root system data");
    rootsys->require_subcommand(1);
    CLI::App* info = rootsys->add_subcommand("info", "positive roots, highest root, rho, Gram matrix");
    common(info);
    CLI::App* weyl = app.add_subcommand("weyl", "Weyl group");
    weyl->require_subcommand(1);
    CLI::App* enumerate = weyl->add_subcommand("enumerate", "enumerate W with reduced words");
    common(enumerate);
    CLI::App* pairing = app.add_subcommand("pairing", "BKS pairing of two admissible classes");
    common(pairing);
    pairing->add_option("--beta", beta.beta, "alcove point, simple-root coordinates p/q,...");
    pairing->add_option("--weight", beta.weight, "k beta in fundamental-weight coordinates");
    pairing->add_option("--beta-prime", beta_prime.beta, "second alcove point (default: beta)");
    pairing->add_option("--weight-prime", beta_prime.weight, "k beta' in fundamental-weight coordinates");
    pairing->add_flag("--table", table, "all admissible pairs at level k");
    CLI::App* verify_cmd = app.add_subcommand("verify", "randomized and exhaustive verification suites");
    common(verify_cmd);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::CallForVersion&) {
        out << kToolVersion << '\n';
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitValidation;
    }

    try {
        const auto start = Clock::now();
        const RunConfig config =
            resolve_config(config_path.empty() ? Settings{} : read_config_file(config_path), env_cache_dir, flags);
        Json report;
        std::vector<PairingResult> rows;
        std::string csv;
        if (info->parsed()) {
            report = cmd_rootsys_info(config);
            if (config.output == "csv") csv = rootsys_csv(build_root_system(config.type_letter, config.rank));
        } else if (enumerate->parsed()) {
            if (config.output == "csv") throw ValidationError("weyl enumerate supports JSON output only");
            report = cmd_weyl_enumerate(config);
        } else if (pairing->parsed()) {
            report = cmd_pairing(config, beta, beta_prime, table, rows);
            if (config.output == "csv") csv = pairing_csv(rows);
        } else {
            if (config.output == "csv") throw ValidationError("verify supports JSON output only");
            report = cmd_verify(config);
        }
        report["runtime"]["wall_seconds"] = std::chrono::duration<double>(Clock::now() - start).count();

        if (config.output == "csv")
            out << csv;
        else
            out << finalize_report(report);
        if (report.contains("pass") && !report["pass"].get<bool>()) {
            err << "one or more checks failed\n";
            return kExitCheckFailed;
        }
        return kExitOk;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const ResourceLimitError& e) {
        err << "error: " << e.what() << " (stopped after " << e.partial() << ")\n";
        return kExitResourceCap;
    } catch (const OverflowError& e) {
        err << "error: exact arithmetic out of range: " << e.what() << '\n';
        return kExitResourceCap;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitError;
    }
}

}  // namespace bks::app
