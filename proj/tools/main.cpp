#include <cstdio>
#include <fstream>
#include <future>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "eoslab/catalog.hpp"
#include "eoslab/experiments.hpp"
#include "eoslab/norms.hpp"
#include "eoslab/serialize.hpp"

using json = nlohmann::json;
using namespace eoslab;

namespace {

// "key=val,key=val" suffix of a colon-separated token into a json object
json parse_kv(const std::string& s) {
    json j = json::object();
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t comma = s.find(',', pos);
        if (comma == std::string::npos) comma = s.size();
        std::string item = s.substr(pos, comma - pos);
        std::size_t eq = item.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("expected key=value: " + item);
        j[item.substr(0, eq)] = std::stod(item.substr(eq + 1));
        pos = comma + 1;
    }
    return j;
}

std::pair<std::string, json> split_spec(const std::string& s) {
    std::size_t colon = s.find(':');
    if (colon == std::string::npos) return {s, json::object()};
    return {s.substr(0, colon), parse_kv(s.substr(colon + 1))};
}

int cmd_run(const std::string& config_path, const std::string& out_dir,
            long seed_override, unsigned threads) {
    json manifest;
    try {
        std::ifstream in(config_path);
        if (!in) {
            std::cerr << "cannot open config: " << config_path << "\n";
            return 2;
        }
        in >> manifest;
    } catch (const std::exception& e) {
        std::cerr << "config parse error: " << e.what() << "\n";
        return 2;
    }
    if (!manifest.contains("experiments") || !manifest["experiments"].is_array()) {
        std::cerr << "config must contain an \"experiments\" array\n";
        return 2;
    }
    std::uint64_t base_seed = manifest.value("seed", std::uint64_t(1));
    if (seed_override >= 0) base_seed = std::uint64_t(seed_override);

    std::vector<json> configs;
    std::vector<std::string> ids;
    for (const auto& entry : manifest["experiments"]) {
        if (!entry.is_object() || !entry.contains("id")) {
            std::cerr << "each experiment entry needs an \"id\"\n";
            return 2;
        }
        std::string id = entry["id"].get<std::string>();
        bool known = false;
        for (const auto& info : list_experiments()) known = known || info.id == id;
        if (!known) {
            std::cerr << "unknown experiment id: " << id << "\n";
            return 2;
        }
        json c = entry;
        c.erase("id");
        if (!c.contains("seed")) c["seed"] = base_seed;
        ids.push_back(id);
        configs.push_back(std::move(c));
    }

    std::vector<ExperimentReport> reports(ids.size());
    auto worker = [&](std::size_t i) { reports[i] = run_experiment(ids[i], configs[i]); };
    try {
        if (threads > 1) {
            std::vector<std::future<void>> futs;
            for (std::size_t i = 0; i < ids.size(); ++i)
                futs.push_back(std::async(std::launch::async, worker, i));
            for (auto& f : futs) f.get();
        } else {
            for (std::size_t i = 0; i < ids.size(); ++i) worker(i);
        }
    } catch (const std::exception& e) {
        std::cerr << "experiment failed: " << e.what() << "\n";
        return 1;
    }

    bool all_passed = true;
    for (const auto& rep : reports) {
        std::string path = write_report(rep, out_dir);
        std::cout << rep.id << ": " << (rep.passed ? "passed" : "FAILED")
                  << " -> " << path << "\n";
        all_passed = all_passed && rep.passed;
    }
    return all_passed ? 0 : 1;
}

GridFunction make_function(const std::string& spec, const SpaceSpec& space) {
    auto [name, args] = split_spec(spec);
    if (name == "g_m") return g_m(space, args.value("m", 1.0));
    if (name == "f_ab") return f_ab(space, args.value("a", 1.0), args.value("b", 4.0));
    if (name == "z_log" || name == "z_loglog") {
        ZSeries z = z_series(name == "z_log" ? "log" : "loglog", 8,
                             int(args.value("n_max", double(1 << 16))));
        return z_function(z, space);
    }
    if (name == "random_trig") {
        FourierCoeffs fc = random_trig(std::uint64_t(args.value("seed", 1.0)),
                                       int(args.value("degree", 64.0)));
        return partial_sum(fc, space, fc.m_max);
    }
    throw std::invalid_argument("unknown function: " + name);
}

int cmd_norm(const std::string& space_spec, const std::string& fn_spec,
             const std::string& norm_spec) {
    auto [sname, sargs] = split_spec(space_spec);
    SpaceSpec space;
    std::size_t res = std::size_t(sargs.value("resolution", double(1 << 14)));
    bool graded = sargs.value("graded", 1.0) != 0.0;
    if (sname == "torus") space = SpaceSpec::torus(res, graded);
    else if (sname == "line") space = SpaceSpec::line(sargs.value("x_max", 16.0), res, graded);
    else if (sname == "line-nu") space = SpaceSpec::line_nu(sargs.value("x_max", 16.0), res, graded);
    else {
        std::cerr << "unknown space: " << sname << "\n";
        return 2;
    }

    GridFunction f;
    try {
        f = make_function(fn_spec, space);
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    auto [nname, nargs] = split_spec(norm_spec);
    json out;
    try {
        if (nname == "lp") {
            out = {{"norm", "lp"}, {"p", nargs.value("p", 4.0)},
                   {"value", lp(f, nargs.value("p", 4.0))}};
        } else if (nname == "lp_nu") {
            out = {{"norm", "lp_nu"}, {"p", nargs.value("p", 4.0)},
                   {"value", lp_nu(f, nargs.value("p", 4.0))}};
        } else if (nname == "orlicz") {
            NFunction n = n_mr(nargs.value("m", 1.0), nargs.value("r", 0.0));
            out = norm_report_to_json(orlicz(f, n));
            out["norm"] = "orlicz";
        } else if (nname == "g_psi") {
            PsiFunction psi = psi_power(nargs.value("m", 1.0),
                                        nargs.value("alpha", 2.0));
            out = norm_report_to_json(g_psi(f, nargs.value("alpha", 2.0), psi));
            out["norm"] = "g_psi";
        } else if (nname == "g_abab") {
            out = norm_report_to_json(
                g_abab(f, nargs.value("a", 2.0), nargs.value("b", 8.0),
                       nargs.value("alpha", 1.0), nargs.value("beta", 0.5)));
            out["norm"] = "g_abab";
        } else {
            std::cerr << "unknown norm: " << nname << "\n";
            return 2;
        }
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    std::cout << out.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"eoslab: numerical laboratory for exponential Orlicz and "
                 "grand function spaces"};
    app.require_subcommand(1);

    auto* run = app.add_subcommand("run", "run experiments from a JSON manifest");
    std::string config_path, out_dir = "reports";
    long seed = -1;
    unsigned threads = 1;
    run->add_option("--config", config_path, "manifest JSON path")->required();
    run->add_option("--out", out_dir, "output directory");
    run->add_option("--seed", seed, "override manifest seed");
    run->add_option("--threads", threads, "worker threads");

    auto* list = app.add_subcommand("list", "list available experiments");

    auto* norm = app.add_subcommand("norm", "compute one norm of a catalog function");
    std::string space_spec = "torus", fn_spec, norm_spec;
    norm->add_option("--space", space_spec, "e.g. torus:resolution=16384,graded=1");
    norm->add_option("--function", fn_spec, "e.g. g_m:m=1")->required();
    norm->add_option("--norm", norm_spec, "e.g. orlicz:m=1 or lp:p=4")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (run->parsed()) return cmd_run(config_path, out_dir, seed, threads);
    if (list->parsed()) {
        for (const auto& info : list_experiments())
            std::cout << info.id << "  [" << info.anchor << "]  "
                      << info.description << "\n";
        return 0;
    }
    if (norm->parsed()) return cmd_norm(space_spec, fn_spec, norm_spec);
    return 2;
}
