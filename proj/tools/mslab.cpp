// mslab: batch front-end for the multislice laboratory.
//
//   mslab compute --profile 2,2 --lsc --bounds
//   mslab verify [--only chain-rule,recursion]
//   mslab sweep --max-n 6 --out table.csv

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <omp.h>

#include "CLI11.hpp"
#include "json.hpp"

#include "mslab/bounds.hpp"
#include "mslab/constants.hpp"
#include "mslab/errors.hpp"
#include "mslab/exclusion.hpp"
#include "mslab/isoperimetry.hpp"
#include "mslab/verify.hpp"

using nlohmann::json;
using namespace mslab;

namespace {

constexpr const char* kSchema = "1";

void apply_thread_env() {
    if (const char* env = std::getenv("MULTISLICE_LAB_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (!end || *end != '\0' || v <= 0)
            throw ConfigError("MULTISLICE_LAB_THREADS must be a positive integer");
        omp_set_num_threads(static_cast<int>(v));
    }
}

WeightedGraph resolve_graph(const std::string& spec, int n) {
    if (!spec.empty() && spec[0] == '@')
        return WeightedGraph::from_edge_list(spec.substr(1));
    return WeightedGraph::by_name(spec, n);
}

std::string graph_label(const std::string& spec) {
    return spec.empty() ? "mean_field" : spec;
}

struct ComputeOpts {
    std::string profile;
    std::string graph = "mean_field";
    uint64_t seed = 12345;
    int budget_restarts = 64;
    uint64_t cap_states = kDefaultStateCap;
    std::string out;
    std::string format = "json";
    bool want_poincare = false, want_lsc = false, want_mlsc = false;
    bool want_iota = false, want_comparison = false, want_bounds = false;
    bool want_mixing = false;
};

void write_output(const std::string& text, const std::string& out) {
    if (out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out);
    if (!f) throw ConfigError("cannot write '" + out + "'");
    f << text;
}

std::string compute_csv(const json& results) {
    std::ostringstream os;
    os.precision(17);
    os << "name,lower,upper,value,kind,note\n";
    auto cell = [](const json& row, const char* key) -> std::string {
        if (!row.contains(key) || row[key].is_null()) return "";
        if (row[key].is_string()) return row[key].get<std::string>();
        std::ostringstream c;
        c.precision(17);
        c << row[key].get<double>();
        return c.str();
    };
    for (const auto& [name, row] : results.items()) {
        if (name == "bounds") {
            for (const auto& b : row)
                os << "bound:" << b["name"].get<std::string>() << ','
                   << cell(b, "lower") << ',' << cell(b, "upper") << ",,closed_form,"
                   << cell(b, "note") << '\n';
            continue;
        }
        if (name == "mixing") {
            os << "mixing:t_mix(0.25),,," << cell(row, "t_mix") << ','
               << cell(row, "kind") << ",\n";
            continue;
        }
        os << name << ",,," << cell(row, "value") << ',' << cell(row, "kind")
           << ',' << cell(row, "note") << '\n';
    }
    return os.str();
}

json bound_rows(const ColorProfile& p) {
    json rows = json::array();
    for (const BoundEntry& b : bounds_report(p)) {
        json row;
        row["name"] = b.name;
        row["kind"] = "closed_form";
        if (std::isnan(b.lower))
            row["lower"] = nullptr;
        else
            row["lower"] = b.lower;
        if (std::isnan(b.upper))
            row["upper"] = nullptr;
        else
            row["upper"] = b.upper;
        row["note"] = b.note;
        rows.push_back(row);
    }
    return rows;
}

int cmd_compute(const ComputeOpts& o) {
    const ColorProfile profile = ColorProfile::parse(o.profile);
    if (!(o.want_poincare || o.want_lsc || o.want_mlsc || o.want_iota ||
          o.want_comparison || o.want_bounds || o.want_mixing))
        throw ConfigError(
            "select at least one of --poincare --lsc --mlsc --iota "
            "--comparison --bounds --mixing");

    json report;
    report["schema"] = kSchema;
    report["command"] = "compute";
    report["profile"] = profile.counts;
    report["graph"] = graph_label(o.graph);
    report["seed"] = o.seed;
    json& results = report["results"];
    results = json::object();

    Budget budget;
    budget.seed = o.seed;
    budget.random_restarts = o.budget_restarts;

    const bool need_space = o.want_poincare || o.want_lsc || o.want_mlsc ||
                            o.want_iota || o.want_mixing;
    if (need_space) {
        StateSpace space(profile, o.cap_states);
        const WeightedGraph graph = resolve_graph(o.graph, profile.n());
        if (o.want_poincare || o.want_mixing) {
            const SparseOperator op = exclusion_generator(space, graph);
            if (o.want_poincare) {
                const ConstantEstimate est = poincare_constant(op);
                results["poincare"] = {{"value", est.value},
                                       {"kind", estimate_kind_name(est.kind)},
                                       {"residual", est.residual}};
            }
            if (o.want_mixing) {
                const double gap = spectral_gap(op).gap;
                const MixingCurve curve = tv_decay_exact(
                    op, StartPolicy::transitive, 0, default_time_grid(gap));
                results["mixing"] = {{"kind", "exact_enumeration"},
                                     {"policy", curve.policy},
                                     {"t_mix", mixing_time(curve, 0.25)},
                                     {"times", curve.times},
                                     {"tv", curve.tv}};
            }
        }
        if (o.want_lsc) {
            const ConstantEstimate est = lsc_estimate(space, graph, budget);
            results["lsc"] = {{"value", est.value},
                              {"kind", estimate_kind_name(est.kind)},
                              {"restarts", est.restarts_used},
                              {"iterations", est.iterations},
                              {"residual", est.residual},
                              {"indicator_seed_value", est.indicator_seed_value}};
        }
        if (o.want_mlsc) {
            const ConstantEstimate est = mlsc_estimate(space, graph, budget);
            results["mlsc"] = {{"value", est.value},
                               {"kind", estimate_kind_name(est.kind)},
                               {"restarts", est.restarts_used},
                               {"iterations", est.iterations},
                               {"residual", est.residual}};
        }
        if (o.want_iota) {
            const IotaResult iota = brute_force_iota(space);
            results["iota"] = {{"value", iota.iota},
                               {"kind", "exact_enumeration"},
                               {"argmin_size", iota.argmin.popcount}};
        }
    }
    if (o.want_comparison) {
        const WeightedGraph graph = resolve_graph(o.graph, profile.n());
        results["comparison"] = {
            {"value", comparison_constant(graph, profile.n())},
            {"kind", "exact_spectral"}};
    }
    if (o.want_bounds) results["bounds"] = bound_rows(profile);

    if (o.format == "json")
        write_output(report.dump(2) + "\n", o.out);
    else
        write_output(compute_csv(results), o.out);
    return 0;
}

struct VerifyOpts {
    std::string only;
    std::string profile;
    uint64_t seed = 12345;
};

int cmd_verify(const VerifyOpts& o) {
    std::vector<std::string> names;
    if (o.only.empty()) {
        names = check_names();
    } else {
        std::stringstream ss(o.only);
        std::string item;
        while (std::getline(ss, item, ','))
            if (!item.empty()) names.push_back(item);
        const auto known = check_names();
        for (const std::string& n : names)
            if (std::find(known.begin(), known.end(), n) == known.end())
                throw ConfigError("unknown check '" + n + "'");
    }
    if (!o.profile.empty())
        ColorProfile::parse(o.profile);  // validated; checks use built-in families

    std::vector<std::string> failed;
    for (const std::string& name : names) {
        const CheckResult res = run_check(name, o.seed);
        std::ostringstream line;
        line.precision(3);
        line << (res.pass ? "[PASS] " : "[FAIL] ") << res.name << " ("
             << std::fixed << res.seconds << "s): " << res.detail;
        std::cout << line.str() << std::endl;
        if (!res.pass) failed.push_back(res.name);
    }
    if (!failed.empty()) {
        std::cout << "failed checks:";
        for (const std::string& n : failed) std::cout << ' ' << n;
        std::cout << std::endl;
        return 1;
    }
    std::cout << names.size() << " checks passed" << std::endl;
    return 0;
}

struct SweepOpts {
    int max_n = 0;
    int max_l = 10;
    uint64_t seed = 12345;
    int budget_restarts = 16;
    uint64_t cap_states = kDefaultStateCap;
    std::string out;
};

int cmd_sweep(const SweepOpts& o) {
    std::ostringstream os;
    os.precision(17);
    os << "profile,n,L,states,tau_rel,lsc_lb,indicator_lb,mlsc_lb,"
          "main_lower,main_upper,recursive_upper,iota,note\n";
    Budget budget;
    budget.seed = o.seed;
    budget.random_restarts = o.budget_restarts;
    budget.max_iterations = 1500;
    for (int n = 2; n <= o.max_n; ++n) {
        for (const ColorProfile& p : all_partitions(n)) {
            if (p.l() > o.max_l) continue;
            const auto [lo, hi] = bound_main(p);
            os << '"' << p.to_string() << "\"," << p.n() << ',' << p.l() << ','
               << multinomial_size(p) << ',';
            std::string note;
            try {
                StateSpace space(p, o.cap_states);
                const WeightedGraph mf = WeightedGraph::mean_field(p.n());
                os << poincare_constant(exclusion_generator(space, mf)).value
                   << ',';
                const ConstantEstimate ls = lsc_estimate(space, mf, budget);
                os << ls.value << ',' << ls.indicator_seed_value << ',';
                os << mlsc_estimate(space, mf, budget).value << ',';
            } catch (const CapError& e) {
                os << ",,,,";
                note = e.what();
            }
            os << lo << ',' << hi << ',' << recursive_upper(p).final_value << ',';
            if (multinomial_size(p) <= kIotaSweepCap) {
                StateSpace space(p, o.cap_states);
                os << brute_force_iota(space).iota;
            }
            os << ",\"" << note << "\"\n";
        }
    }
    write_output(os.str(), o.out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"multislice laboratory"};
    app.require_subcommand(1);

    ComputeOpts co;
    CLI::App* compute = app.add_subcommand(
        "compute", "compute constants/bounds for one profile");
    compute->add_option("--profile", co.profile, "color counts, e.g. 2,2,1")
        ->required();
    compute->add_option("--graph", co.graph,
                        "graph name (mean_field|complete_srw|cycle|hypercube) "
                        "or @edge-list-file");
    compute->add_option("--seed", co.seed, "optimizer seed");
    compute->add_option("--budget-restarts", co.budget_restarts,
                        "random restarts for variational estimates");
    compute->add_option("--cap-states", co.cap_states, "state enumeration cap");
    compute->add_option("--out", co.out, "output path (default stdout)");
    compute->add_option("--format", co.format, "json|csv")
        ->check(CLI::IsMember({"json", "csv"}));
    compute->add_flag("--poincare", co.want_poincare, "tau_rel (spectral)");
    compute->add_flag("--lsc", co.want_lsc, "log-Sobolev lower bound");
    compute->add_flag("--mlsc", co.want_mlsc, "modified log-Sobolev lower bound");
    compute->add_flag("--iota", co.want_iota, "brute-force small-set expansion");
    compute->add_flag("--comparison", co.want_comparison, "comparison constant c(G)");
    compute->add_flag("--bounds", co.want_bounds, "closed-form bound table");
    compute->add_flag("--mixing", co.want_mixing, "exact TV mixing curve");

    VerifyOpts vo;
    CLI::App* verify =
        app.add_subcommand("verify", "run the built-in verification suite");
    verify->add_option("--only", vo.only, "comma-separated subset of checks");
    verify->add_option("--profile", vo.profile,
                       "validate a profile string before running");
    verify->add_option("--seed", vo.seed, "optimizer seed");

    SweepOpts so;
    CLI::App* sweep =
        app.add_subcommand("sweep", "per-profile CSV over all partitions");
    sweep->add_option("--max-n", so.max_n, "largest n in the family")->required();
    sweep->add_option("--max-l", so.max_l, "largest color count");
    sweep->add_option("--seed", so.seed, "optimizer seed");
    sweep->add_option("--budget-restarts", so.budget_restarts,
                      "random restarts per profile");
    sweep->add_option("--cap-states", so.cap_states, "state enumeration cap");
    sweep->add_option("--out", so.out, "output path (default stdout)");

    try {
        app.parse(argc, argv);
        apply_thread_env();
        if (*compute) return cmd_compute(co);
        if (*verify) return cmd_verify(vo);
        return cmd_sweep(so);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const CapError& e) {
        std::cerr << "cap violation: " << e.what() << std::endl;
        return 3;
    } catch (const OverflowError& e) {
        std::cerr << "cap violation: " << e.what() << std::endl;
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << std::endl;
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 1;
    }
}
