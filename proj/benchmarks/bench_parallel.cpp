// Compares the OpenMP kernels against their serial references:
// perturbation experiments and path traces.

#include "gitseq/normal_forms.hpp"
#include "gitseq/path_analysis.hpp"

#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace gitseq;

namespace {

double seconds(std::chrono::steady_clock::time_point from) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - from).count();
}

}  // namespace

int main(int argc, char** argv) {
    const int trials = argc > 1 ? std::atoi(argv[1]) : 4000;
#ifdef _OPENMP
    std::printf("OpenMP: %d threads\n", omp_get_max_threads());
#else
    std::printf("OpenMP: disabled at build time\n");
#endif
    Tolerances tols;

    const SpectralConfig cfg{3, {}, 0, {{2.0, 1}, {1.0, 2}}, 0, {}, {}};
    const auto form = normal_form(cfg, {{1, 0}, {1, 1}});

    auto t0           = std::chrono::steady_clock::now();
    const auto serial = perturbation_experiment_serial(form, 1e-3, trials, 1, tols);
    const double ts   = seconds(t0);

    t0                  = std::chrono::steady_clock::now();
    const auto parallel = perturbation_experiment(form, 1e-3, trials, 1, tols);
    const double tp     = seconds(t0);

    std::printf("perturbation_experiment, %d trials (n=3):\n", trials);
    std::printf("  serial   %.3f s\n  parallel %.3f s  (speedup %.2fx)\n", ts, tp, ts / tp);
    std::printf("  histograms identical: %s\n", serial == parallel ? "yes" : "NO");

    MatrixPath path;
    path.kind         = PathKind::symplectic;
    const int dof     = 8;
    const int samples = trials / 2;
    for (int i = 0; i < samples; ++i) {
        const double t = static_cast<double>(i) / (samples - 1);
        Mat a          = Mat::Zero(dof, dof);
        for (int k = 0; k < dof; ++k) a(k, k) = 1.4 - 2.0 * t + 0.35 * k;
        path.samples.push_back({t, assemble(WonenburgerTriple{
                                       a, Mat::Identity(dof, dof),
                                       a * a - Mat::Identity(dof, dof)})});
    }

    t0            = std::chrono::steady_clock::now();
    const auto rs = trace_serial(path, tols);
    const double trace_s = seconds(t0);

    t0            = std::chrono::steady_clock::now();
    const auto rp = trace(path, tols);
    const double trace_p = seconds(t0);

    bool same = rs.size() == rp.size();
    for (std::size_t i = 0; same && i < rs.size(); ++i)
        same = rs[i].point.s == rp[i].point.s && rs[i].region == rp[i].region;

    std::printf("trace, %d symplectic samples (n=%d):\n", samples, dof);
    std::printf("  serial   %.3f s\n  parallel %.3f s  (speedup %.2fx)\n", trace_s, trace_p,
                trace_s / trace_p);
    std::printf("  traces identical: %s\n", same ? "yes" : "NO");
    return (serial == parallel && same) ? 0 : 1;
}
