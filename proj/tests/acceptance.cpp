// Acceptance gate: one criterion per invocation (argv[1] in 1..11), one
// PASS/FAIL line on stdout, exit code 0/1. Each criterion exercises the
// library end to end at production resolutions.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "eoslab/catalog.hpp"
#include "eoslab/convex.hpp"
#include "eoslab/experiments.hpp"
#include "eoslab/norms.hpp"
#include "eoslab/psi.hpp"

using namespace eoslab;
using json = nlohmann::json;

namespace {

struct Check {
    bool ok = true;
    std::vector<std::string> notes;
    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            notes.push_back(what);
        }
    }
};

// W**(z) via two nested on-demand maximizations; no tabulation error.
double biconjugate(const YoungFunction& w, double z) {
    LegendreTransform star(w);
    auto obj = [&](double p) { return z * p - star(p); };
    return maximize_concave(obj, 1e-6).value;
}

// --------------------------------------------------------------- criteria

Check criterion_duality() {
    Check c;
    struct Kernel {
        std::string name;
        YoungFunction w;
    };
    std::vector<Kernel> kernels = {
        {"z^2/2", {[](double z) { return 0.5 * z * z; },
                   [](double z) { return z; }, 2.0}},
        {"z^2", {[](double z) { return z * z; },
                 [](double z) { return 2.0 * z; }, 2.0}},
        {"e^z", {[](double z) { return std::exp(z); },
                 [](double z) { return std::exp(z); }, 2.0}},
        {"e^{2z}", {[](double z) { return std::exp(2.0 * z); },
                    [](double z) { return 2.0 * std::exp(2.0 * z); }, 2.0}},
        {"z log z", {[](double z) { return z * std::log(z); },
                     [](double z) { return std::log(z) + 1.0; }, 2.0}},
    };
    for (const auto& k : kernels) {
        for (double z : {2.5, 3.0, 4.0, 6.0, 8.0}) {
            double back = biconjugate(k.w, z);
            double rel = std::abs(back - k.w(z)) / k.w(z);
            c.require(rel <= 1e-6, "biconjugate of " + k.name + " at z=" +
                                       std::to_string(z) + " rel err " +
                                       std::to_string(rel));
        }
    }
    YoungFunction wexp{[](double z) { return std::exp(z); },
                       [](double z) { return std::exp(z); }, 2.0};
    PsiFunction psi = psi_from_young(wexp, std::exp(3.0));
    for (double p : {std::exp(3.0), 30.0, 100.0, 1000.0}) {
        double rel = std::abs(psi.eval(p) - p / std::exp(1.0)) / (p / std::exp(1.0));
        c.require(rel <= 0.01, "psi recovery at p=" + std::to_string(p) +
                                   " rel err " + std::to_string(rel));
    }
    return c;
}

Check from_experiment(const std::string& id, const json& cfg = json::object()) {
    Check c;
    ExperimentReport rep = run_experiment(id, cfg.is_null() ? json::object() : cfg);
    c.require(rep.passed, id + " reported failure: " + rep.results.dump());
    return c;
}

Check criterion_moments() {
    Check c;
    SpaceSpec s = SpaceSpec::torus(1 << 16, true);
    for (double m : {1.0, 2.0}) {
        GridFunction f = g_m(s, m);
        for (double p : log_grid(2.0, 64.0, 12)) {
            double got = lp(f, p), want = g_m_lp_exact(m, p);
            double rel = std::abs(got - want) / want;
            c.require(rel <= 0.02, "g_" + std::to_string(int(m)) + " at p=" +
                                       std::to_string(p) + " rel err " +
                                       std::to_string(rel));
        }
    }
    return c;
}

Check criterion_conjugate_membership() {
    Check c;
    ExperimentReport rep = run_experiment("lemma1-sharpness", json::object());
    for (const auto& cs : rep.results["cases"]) {
        double m = cs["m"].get<double>();
        c.require(cs["tail_exponent_ok"].get<bool>(),
                  "tail exponent for m=" + std::to_string(m) + ": fitted " +
                      std::to_string(cs["tail_exponent_fit"].get<double>()));
        c.require(!cs["matched_infinite"].get<bool>(),
                  "matched-index membership proxy flagged infinite, m=" +
                      std::to_string(m));
        // Literal requirement: the proxy at index (m - 0.25)/(m + 1) must be
        // flagged infinite. That index names a weaker Orlicz function than
        // the matched one, so a function with the fitted tail law belongs to
        // it and every sound evaluator returns a finite value. Recorded as a
        // red check; see the report fields for the measured flags.
        c.require(cs["weaker_index_infinite"].get<bool>(),
                  "weaker-index infinite flag not set for m=" +
                      std::to_string(m) +
                      " (finite value is consistent with the fitted tail "
                      "exponent; the flag as specified is unattainable)");
    }
    return c;
}

Check criterion_fitted_constants() {
    Check c;
    ExperimentReport paley = run_experiment("paley", json::object());
    c.require(paley.passed, "paley constants: " + paley.results.dump());
    ExperimentReport t6 = run_experiment("thm6", json::object());
    c.require(t6.passed, "thm6 constants: " + t6.results.dump());
    return c;
}

Check criterion_determinism() {
    Check c;
    json cfg = {{"seed", 7}, {"trials", 10}};
    for (const std::string id : {"thm9-dominance", "hausdorff-young"}) {
        ExperimentReport a = run_experiment(id, id == "thm9-dominance"
                                                    ? json::object() : cfg);
        ExperimentReport b = run_experiment(id, id == "thm9-dominance"
                                                    ? json::object() : cfg);
        c.require(a.to_json(false).dump() == b.to_json(false).dump(),
                  id + " reports differ between identical runs");
        bool csv_same = a.csv_tables == b.csv_tables;
        c.require(csv_same, id + " csv tables differ between identical runs");
    }
    return c;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::fprintf(stderr, "usage: %s <criterion 1..11>\n", argv[0]);
        return 2;
    }
    int n = std::atoi(argv[1]);
    Check c;
    std::string name;
    switch (n) {
        case 1: name = "duality-roundtrip"; c = criterion_duality(); break;
        case 2: name = "orlicz-grand-equivalence";
                c = from_experiment("thm7-equivalence"); break;
        case 3: name = "moment-oracle"; c = criterion_moments(); break;
        case 4: name = "fundamental-functions";
                c = from_experiment("fundamental-curve"); break;
        case 5: name = "partial-sum-growth";
                c = from_experiment("riesz-growth"); break;
        case 6: name = "conjugate-membership";
                c = criterion_conjugate_membership(); break;
        case 7: name = "transform-inequalities";
                c = from_experiment("hausdorff-young"); break;
        case 8: name = "fitted-constants"; c = criterion_fitted_constants(); break;
        case 9: name = "divergence-flags";
                c = from_experiment("divergence-zL"); break;
        case 10: name = "haar-bound"; c = from_experiment("haar-bound"); break;
        case 11: name = "determinism"; c = criterion_determinism(); break;
        default:
            std::fprintf(stderr, "unknown criterion %d\n", n);
            return 2;
    }
    for (const auto& note : c.notes)
        std::printf("  detail: %s\n", note.c_str());
    std::printf("ACCEPTANCE %02d %s: %s\n", n, name.c_str(),
                c.ok ? "PASS" : "FAIL");
    return c.ok ? 0 : 1;
}
