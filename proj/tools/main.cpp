#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "passband/errors.hpp"
#include "passband/extension.hpp"
#include "passband/extremal.hpp"
#include "passband/io.hpp"
#include "passband/parallel.hpp"
#include "passband/sigma.hpp"

namespace {

using namespace passband;
using nlohmann::json;

constexpr int kExitVerifyFail = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitParse = 3;
constexpr int kExitNonConvergence = 4;

struct Options {
    std::vector<double> band;
    int grid = 256;
    bool as_json = false;
    std::string output;
    int threads = 0;
    unsigned seed = 0; // reserved for randomized property commands
    double rel_tol = QuadratureConfig{}.rel_tol;
    double abs_tol = QuadratureConfig{}.abs_tol;

    std::string density_path;
    std::vector<double> eps;
    std::vector<double> radii;
    double tol = 1e-3;
    double perturb = 1.0;
    int n_check = 17;
};

Band make_band(const Options& o) { return Band(o.band.at(0), o.band.at(1)); }

QuadratureConfig make_cfg(const Options& o) {
    QuadratureConfig cfg;
    cfg.rel_tol = o.rel_tol;
    cfg.abs_tol = o.abs_tol;
    cfg.validate();
    return cfg;
}

// stdout by default; -o writes atomically, with relative paths resolved
// against PASSBAND_OUTPUT_DIR when that is set
void emit(const Options& o, const std::string& content) {
    if (o.output.empty()) {
        std::cout << content;
        return;
    }
    std::string path = o.output;
    if (const char* dir = std::getenv("PASSBAND_OUTPUT_DIR"); dir && *dir && path.front() != '/')
        path = std::string(dir) + "/" + path;
    write_file_atomic(path, content);
}

int cmd_bound(const Options& o) {
    const Band band = make_band(o);
    const double lambda = lambda_bound(band);
    const double xstar = argmax_envelope(band);
    const int n = o.grid;

    if (o.as_json) {
        json env = json::array();
        for (int i = 0; i < n; ++i) {
            const double x = band.a + band.width() * double(i) / double(n - 1);
            env.push_back({{"x", json_number(x)}, {"value", json_number(envelope(x, band))}});
        }
        const json doc{{"band", {{"a", json_number(band.a)}, {"b", json_number(band.b)}}},
                       {"lambda", json_number(lambda)},
                       {"xstar", json_number(xstar)},
                       {"envelope", std::move(env)}};
        emit(o, doc.dump(2) + "\n");
        return 0;
    }

    std::string out;
    out += "# lambda " + format_double(lambda) + "\n";
    out += "# xstar " + format_double(xstar) + "\n";
    out += "x,envelope\n";
    for (int i = 0; i < n; ++i) {
        const double x = band.a + band.width() * double(i) / double(n - 1);
        out += format_double(x) + "," + format_double(envelope(x, band)) + "\n";
    }
    emit(o, out);
    return 0;
}

int cmd_extend(const Options& o) {
    const Band band = make_band(o);
    const QuadratureConfig cfg = make_cfg(o);
    const Density v = load_density_file(o.density_path);

    const FeasibilityReport rep = check_feasibility(v, band, cfg);
    if (!rep.feasible()) {
        std::cerr << "infeasible density: " << rep.notes << "\n";
        return kExitInfeasible;
    }
    const ExtensionResult ext = extend(v, band, o.grid, cfg);

    if (o.as_json) {
        json doc = extension_json(ext);
        doc["feasibility"] = feasibility_json(rep);
        emit(o, doc.dump(2) + "\n");
        return 0;
    }
    auto cond_line = [](const char* name, const ConditionReport& c) {
        return std::string(name) + " " + to_string(c.verdict) + " value " +
               format_double(c.value) + " error " + format_double(c.error);
    };
    const std::vector<std::string> preamble{
        "alpha " + format_double(ext.alpha),
        "alpha_error " + format_double(ext.alpha_error),
        "sup_norm " + format_double(ext.sup_norm),
        cond_line("condition_one", rep.condition_one),
        cond_line("corollary_condition", rep.corollary_condition),
    };
    emit(o, extension_csv(ext, preamble));
    return 0;
}

int cmd_verify(const Options& o) {
    const Band band = make_band(o);
    const QuadratureConfig cfg = make_cfg(o);
    const Density v = load_density_file(o.density_path);

    const ConstancyReport rep =
        verify_constancy(v, band, o.n_check, cfg, o.grid, o.perturb);
    const double threshold = o.tol * std::max(1.0, std::fabs(rep.alpha));
    const bool pass = rep.max_deviation <= threshold &&
                      std::fabs(rep.alpha_measured - rep.alpha) <= threshold;

    if (o.as_json) {
        const json doc{{"alpha", json_number(rep.alpha)},
                       {"alpha_measured", json_number(rep.alpha_measured)},
                       {"max_deviation", json_number(rep.max_deviation)},
                       {"tolerance", json_number(threshold)},
                       {"pass", pass}};
        emit(o, doc.dump(2) + "\n");
    } else {
        std::string out;
        out += "alpha " + format_double(rep.alpha) + "\n";
        out += "alpha_measured " + format_double(rep.alpha_measured) + "\n";
        out += "max_deviation " + format_double(rep.max_deviation) + "\n";
        out += "tolerance " + format_double(threshold) + "\n";
        out += std::string("result ") + (pass ? "PASS" : "FAIL") + "\n";
        emit(o, out);
    }
    return pass ? 0 : kExitVerifyFail;
}

int cmd_sweep(const Options& o) {
    const Band band = make_band(o);
    const QuadratureConfig cfg = make_cfg(o);
    const std::vector<SweepRecord> recs = sweep(o.eps, band, o.grid, cfg);

    if (o.as_json) {
        json doc = sweep_json(recs);
        doc["band"] = {{"a", json_number(band.a)}, {"b", json_number(band.b)}};
        doc["lambda"] = json_number(lambda_bound(band));
        emit(o, doc.dump(2) + "\n");
    } else {
        emit(o, sweep_csv(recs));
    }

    std::cerr << "final gap " << format_double(recs.back().gap) << "\n";
    bool ok = true;
    for (std::size_t i = 0; i < recs.size(); ++i) {
        if (recs[i].gap < -recs[i].err) ok = false; // non-attainment within error bars
        if (i > 0) {
            std::cerr << "gap ratio " << format_double(recs[i].gap / recs[i - 1].gap) << "\n";
            if (!(recs[i].gap < recs[i - 1].gap)) ok = false;
        }
    }
    if (!ok) {
        std::cerr << "sweep invariant violated (gaps not monotone toward lambda)\n";
        return 1;
    }
    return 0;
}

int cmd_decay(const Options& o) {
    const Band band = make_band(o);
    const QuadratureConfig cfg = make_cfg(o);
    const std::vector<DecayRecord> recs = positive_alpha_decay(o.radii, band, o.grid, cfg);

    if (o.as_json) {
        json doc = decay_json(recs);
        doc["band"] = {{"a", json_number(band.a)}, {"b", json_number(band.b)}};
        emit(o, doc.dump(2) + "\n");
    } else {
        emit(o, decay_csv(recs));
    }

    std::cerr << "final sup_norm " << format_double(recs.back().sup_norm) << "\n";
    for (std::size_t i = 1; i < recs.size(); ++i) {
        if (!(recs[i].sup_norm < recs[i - 1].sup_norm)) {
            std::cerr << "decay invariant violated (sup_norm not decreasing)\n";
            return 1;
        }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"passive-band completion toolkit: extremal bound, density "
                 "completion, and round-trip verification"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--band", o.band, "band edges a,b (0 < a < b)")
            ->delimiter(',')
            ->expected(2)
            ->required();
        sub->add_option("--grid", o.grid, "number of band grid points")
            ->check(CLI::Range(16, 1 << 20));
        sub->add_flag("--json", o.as_json, "emit one JSON document instead of CSV/text");
        sub->add_option("-o,--output", o.output,
                        "output file (default stdout; PASSBAND_OUTPUT_DIR prefixes "
                        "relative paths; written atomically)");
        sub->add_option("--threads", o.threads, "cap worker thread count");
        sub->add_option("--seed", o.seed, "seed for randomized property commands (reserved)");
        sub->add_option("--rel-tol", o.rel_tol, "quadrature relative tolerance");
        sub->add_option("--abs-tol", o.abs_tol, "quadrature absolute tolerance");
    };

    CLI::App* bound = app.add_subcommand(
        "bound", "print lambda = (b^2-a^2)/2ab, its maximizer, and the envelope profile");
    add_common(bound);

    CLI::App* extend_cmd =
        app.add_subcommand("extend", "complete an off-band density onto the band");
    add_common(extend_cmd);
    extend_cmd->add_option("density", o.density_path, "density JSON file")->required();

    CLI::App* verify_cmd = app.add_subcommand(
        "verify", "complete a density, then check the Hilbert operator is constant on the band");
    add_common(verify_cmd);
    verify_cmd->add_option("density", o.density_path, "density JSON file")->required();
    verify_cmd->add_option("--tol", o.tol, "relative PASS threshold");
    verify_cmd->add_option("--n-check", o.n_check, "number of interior check points")
        ->check(CLI::PositiveNumber);
    verify_cmd->add_option("--perturb", o.perturb,
                           "debug: scale the completed extension (non-production; values "
                           "other than 1 must FAIL)");

    CLI::App* sweep_cmd =
        app.add_subcommand("sweep", "near-extremal family: sup norms converging to lambda");
    add_common(sweep_cmd);
    sweep_cmd->add_option("--eps", o.eps, "epsilon schedule, each in (0, a/2)")
        ->delimiter(',')
        ->required();

    CLI::App* decay_cmd =
        app.add_subcommand("decay", "positive-alpha family: sup norms vanishing as R grows");
    add_common(decay_cmd);
    decay_cmd->add_option("--radii", o.radii, "support radii, each > b")
        ->delimiter(',')
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help and friends
        app.exit(e);
        return kExitParse;
    }

    try {
        if (o.threads > 0) set_threads(o.threads);
        if (bound->parsed()) return cmd_bound(o);
        if (extend_cmd->parsed()) return cmd_extend(o);
        if (verify_cmd->parsed()) return cmd_verify(o);
        if (sweep_cmd->parsed()) return cmd_sweep(o);
        if (decay_cmd->parsed()) return cmd_decay(o);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const InfeasibleError& e) { // includes SupportOverlapsBandError
        std::cerr << "infeasible: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const NonConvergenceError& e) {
        std::cerr << "quadrature did not converge: " << e.what() << "\n";
        return kExitNonConvergence;
    } catch (const DecayViolationError& e) {
        std::cerr << "quadrature decay violation: " << e.what() << "\n";
        return kExitNonConvergence;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitParse;
    }
    return 0;
}
