// Compares the OpenMP kernels against their serial reference
// implementations on one mid-sized space and reports timings.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>

#include <omp.h>

#include "CLI11.hpp"

#include "mslab/functionals.hpp"
#include "mslab/sparse_operator.hpp"

using namespace mslab;

namespace {

using Clock = std::chrono::steady_clock;

template <class F>
double time_best(int reps, F&& body) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const auto t0 = Clock::now();
        body();
        best = std::min(best,
                        std::chrono::duration<double>(Clock::now() - t0).count());
    }
    return best;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"serial vs OpenMP kernel benchmark"};
    std::string profile_text = "2,2,2,2,2";
    int reps = 5;
    app.add_option("--profile", profile_text, "color counts");
    app.add_option("--reps", reps, "repetitions (best time reported)");
    CLI11_PARSE(app, argc, argv);

    const ColorProfile profile = ColorProfile::parse(profile_text);
    StateSpace space(profile);
    const WeightedGraph graph = WeightedGraph::mean_field(profile.n());
    const SparseOperator op = build_generator(space, graph);

    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> uni(0.1, 1.1);
    std::vector<double> fv(space.size()), gv(space.size());
    for (double& x : fv) x = uni(rng);
    for (double& x : gv) x = uni(rng);
    const Observable f(space, fv), g(space, gv);

    std::printf("profile %s: %llu states, %d threads\n",
                profile.to_string().c_str(),
                static_cast<unsigned long long>(space.size()),
                omp_get_max_threads());
    std::printf("%-16s %12s %12s %8s %12s\n", "kernel", "serial[s]", "omp[s]",
                "speedup", "|diff|");

    {
        double a = 0, b = 0;
        const double ts = time_best(reps, [&] { a = ref::expectation(f); });
        const double tp = time_best(reps, [&] { b = expectation(f); });
        std::printf("%-16s %12.3e %12.3e %8.2f %12.3e\n", "expectation", ts, tp,
                    ts / tp, std::abs(a - b));
    }
    {
        double a = 0, b = 0;
        const double ts = time_best(reps, [&] { a = ref::entropy(f); });
        const double tp = time_best(reps, [&] { b = entropy(f); });
        std::printf("%-16s %12.3e %12.3e %8.2f %12.3e\n", "entropy", ts, tp,
                    ts / tp, std::abs(a - b));
    }
    {
        double a = 0, b = 0;
        const double ts =
            time_best(reps, [&] { a = ref::dirichlet_form(f, g, graph); });
        const double tp = time_best(reps, [&] { b = dirichlet_form(f, g, graph); });
        std::printf("%-16s %12.3e %12.3e %8.2f %12.3e\n", "dirichlet_form", ts,
                    tp, ts / tp, std::abs(a - b));
    }
    {
        std::vector<double> ya(space.size()), yb(space.size());
        const double ts =
            time_best(reps, [&] { ref::apply_neg(op, fv.data(), ya.data()); });
        const double tp = time_best(reps, [&] { op.apply_neg(fv.data(), yb.data()); });
        double diff = 0;
        for (size_t i = 0; i < ya.size(); ++i)
            diff = std::max(diff, std::abs(ya[i] - yb[i]));
        std::printf("%-16s %12.3e %12.3e %8.2f %12.3e\n", "apply_neg", ts, tp,
                    ts / tp, diff);
    }
    return 0;
}
