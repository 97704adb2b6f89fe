#include "gitseq/path_analysis.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gitseq {

const char* to_string(EventKind k) {
    switch (k) {
        case EventKind::eigenvalue_pm1_crossing: return "eigenvalue_pm1_crossing";
        case EventKind::kfold_crossing: return "kfold_crossing";
        case EventKind::region_transition: return "region_transition";
        case EventKind::krein_collision: return "krein_collision";
        case EventKind::hn_transition: return "hn_transition";
    }
    return "?";
}

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::admissible: return "admissible";
        case Verdict::krein_blocked: return "krein_blocked";
        case Verdict::theorem_violation: return "theorem_violation";
        case Verdict::not_applicable: return "not_applicable";
    }
    return "?";
}

const char* to_string(StabilityVerdict v) {
    switch (v) {
        case StabilityVerdict::unstable: return "unstable";
        case StabilityVerdict::stable: return "stable";
        case StabilityVerdict::strongly_stable: return "strongly_stable";
    }
    return "?";
}

void MatrixPath::validate(double constraint_tol) const {
    if (samples.size() < 2) throw ValidationError("MatrixPath: at least two samples required");
    for (std::size_t i = 1; i < samples.size(); ++i)
        if (!(samples[i].t > samples[i - 1].t))
            throw ValidationError("MatrixPath: parameters must be strictly increasing");
    for (const auto& sample : samples) {
        if (kind == PathKind::wonenburger) {
            const auto* triple = std::get_if<WonenburgerTriple>(&sample.payload);
            if (!triple) throw ValidationError("MatrixPath: expected Wonenburger payloads");
            auto violated = validate_wonenburger(*triple, constraint_tol);
            if (!violated.empty())
                throw ValidationError("MatrixPath: invalid triple at t=" + std::to_string(sample.t));
        } else {
            const auto* m = std::get_if<Mat>(&sample.payload);
            if (!m) throw ValidationError("MatrixPath: expected symplectic payloads");
            if (!is_symplectic(*m, constraint_tol))
                throw ValidationError("MatrixPath: non-symplectic matrix at t=" +
                                      std::to_string(sample.t));
        }
    }
}

int MatrixPath::dof() const {
    if (samples.empty()) return 0;
    if (const auto* triple = std::get_if<WonenburgerTriple>(&samples.front().payload))
        return triple->dof();
    return static_cast<int>(std::get<Mat>(samples.front().payload).rows()) / 2;
}

SpectralDecomposition stability_index_decomposition(const Mat& m, double cluster_tol) {
    Eigen::EigenSolver<Mat> solver(m, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success)
        throw NumericError("index_decomposition: eigen-solver failed");
    std::vector<cplx> indices;
    for (int i = 0; i < m.rows(); ++i) {
        const cplx lambda = solver.eigenvalues()(i);
        indices.push_back(0.5 * (lambda + 1.0 / lambda));
    }
    SpectralDecomposition doubled = cluster_eigenvalues(indices, cluster_tol);
    for (auto& c : doubled.real_clusters) {
        if (c.mult % 2 != 0)
            throw NumericError("index_decomposition: unpaired stability index");
        c.mult /= 2;
    }
    for (auto& c : doubled.complex_clusters) {
        if (c.mult % 2 != 0)
            throw NumericError("index_decomposition: unpaired stability index");
        c.mult /= 2;
    }
    return doubled;
}

namespace {

SpectralDecomposition sample_decomposition(const MatrixPath& path, std::size_t i,
                                           const Tolerances& tols) {
    if (const auto* triple = std::get_if<WonenburgerTriple>(&path.samples[i].payload))
        return spectral_decomposition(triple->a, tols.cluster);
    return stability_index_decomposition(std::get<Mat>(path.samples[i].payload), tols.cluster);
}

TracePoint trace_sample(const MatrixPath& path, std::size_t i, const Tolerances& tols) {
    const auto spec = sample_decomposition(path, i, tols);
    std::vector<cplx> values;
    for (const auto& c : spec.real_clusters)
        for (int j = 0; j < c.mult; ++j) values.emplace_back(c.value, 0.0);
    for (const auto& c : spec.complex_clusters)
        for (int j = 0; j < c.mult; ++j) {
            values.push_back(c.value);
            values.push_back(std::conj(c.value));
        }
    return {path.samples[i].t, stability_point(values), classify_clusters(spec)};
}

}  // namespace

std::vector<TracePoint> trace_serial(const MatrixPath& path, const Tolerances& tols) {
    path.validate(tols.constraint);
    std::vector<TracePoint> out(path.samples.size());
    for (std::size_t i = 0; i < path.samples.size(); ++i) out[i] = trace_sample(path, i, tols);
    return out;
}

std::vector<TracePoint> trace(const MatrixPath& path, const Tolerances& tols) {
    path.validate(tols.constraint);
    std::vector<TracePoint> out(path.samples.size());
    const auto count = static_cast<std::ptrdiff_t>(path.samples.size());
    std::string first_error;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (std::ptrdiff_t i = 0; i < count; ++i) {
        try {
            out[static_cast<std::size_t>(i)] = trace_sample(path, static_cast<std::size_t>(i), tols);
        } catch (const std::exception& e) {
#ifdef _OPENMP
#pragma omp critical
#endif
            if (first_error.empty())
                first_error = std::string(e.what()) + " (t=" +
                              std::to_string(path.samples[static_cast<std::size_t>(i)].t) + ")";
        }
    }
    if (!first_error.empty()) throw NumericError("trace: " + first_error);
    return out;
}

namespace {

struct IndexValue {
    double a;
    int l, k;
};

std::vector<IndexValue> pencil_values(int k_max) {
    std::vector<IndexValue> values;
    for (int k = 1; k <= k_max; ++k)
        for (int l = 0; 2 * l <= k; ++l) {
            if (std::gcd(l, k) != 1) continue;
            values.push_back({std::cos(2.0 * 3.141592653589793238462643 *
                                       static_cast<double>(l) / static_cast<double>(k)),
                              l, k});
        }
    return values;
}

}  // namespace

std::vector<Event> detect_events(const MatrixPath& path, int k_max, double tol,
                                 const Tolerances& tols) {
    if (k_max < 1) throw ValidationError("detect_events: k_max must be >= 1");
    const auto points = trace(path, tols);
    std::vector<Event> events;

    // ensure the +-1 lines are present even for k_max = 1
    auto values = pencil_values(std::max(k_max, 2));
    values.erase(std::remove_if(values.begin(), values.end(),
                                [&](const IndexValue& v) {
                                    return v.k > k_max && !(v.l == 1 && v.k == 2);
                                }),
                 values.end());

    for (const auto& value : values) {
        std::vector<double> g(points.size());
        for (std::size_t i = 0; i < points.size(); ++i)
            g[i] = gamma_eval(value.a, points[i].point)[0];
        for (std::size_t i = 0; i + 1 < points.size(); ++i) {
            if (!(g[i] * g[i + 1] < 0.0)) continue;
            double lo = points[i].t, hi = points[i + 1].t;
            double g_lo = g[i];
            const double span = hi - lo;
            while (hi - lo > tol) {
                const double mid = 0.5 * (lo + hi);
                const double w   = (mid - points[i].t) / span;
                const double g_mid = (1.0 - w) * g[i] + w * g[i + 1];
                if (g_lo * g_mid <= 0.0)
                    hi = mid;
                else {
                    lo   = mid;
                    g_lo = g_mid;
                }
            }
            Event event;
            event.kind = (value.l == 0 || 2 * value.l == value.k)
                             ? EventKind::eigenvalue_pm1_crossing
                             : EventKind::kfold_crossing;
            event.t_lo    = lo;
            event.t_hi    = hi;
            event.a_value = value.a;
            event.l       = value.l;
            event.k       = value.k;
            events.push_back(event);
        }
    }

    for (std::size_t i = 0; i + 1 < points.size(); ++i) {
        if (points[i].region == points[i + 1].region) continue;
        Event event;
        event.kind = EventKind::region_transition;
        event.t_lo = points[i].t;
        event.t_hi = points[i + 1].t;
        event.from = points[i].region.canonical();
        event.to   = points[i + 1].region.canonical();
        events.push_back(event);
    }

    std::sort(events.begin(), events.end(), [](const Event& a, const Event& b) {
        if (a.t_lo != b.t_lo) return a.t_lo < b.t_lo;
        if (a.kind != b.kind) return static_cast<int>(a.kind) < static_cast<int>(b.kind);
        if (a.k != b.k) return a.k < b.k;
        return a.l < b.l;
    });
    return events;
}

namespace {

// Combined signature of the two closest adjacent elliptic (or same-sign
// hyperbolic) clusters just before a merge.
SignPair combined_pair(const MatrixPath& path, std::size_t sample_idx,
                       const std::vector<double>& cluster_values, const Tolerances& tols) {
    SignPair total;
    for (double value : cluster_values) {
        if (const auto* triple = std::get_if<WonenburgerTriple>(&path.samples[sample_idx].payload)) {
            total = total + b_signature(*triple, value, BlockKind::b_block, tols.cluster);
        } else {
            const auto& m     = std::get<Mat>(path.samples[sample_idx].payload);
            const cplx lambda = eigenvalue_from_index(cplx(value, 0.0));
            total             = total + krein_signature(m, lambda, tols.cluster);
        }
    }
    return total;
}

std::size_t sample_before(const MatrixPath& path, double t_lo) {
    std::size_t idx = 0;
    for (std::size_t i = 0; i + 1 < path.samples.size(); ++i)
        if (path.samples[i].t <= t_lo) idx = i;
    return idx;
}

}  // namespace

Event krein_collision_check(const MatrixPath& path, const Event& event, const Tolerances& tols) {
    Event out   = event;
    out.kind    = EventKind::krein_collision;
    out.verdict = Verdict::not_applicable;
    if (event.kind != EventKind::region_transition) return out;

    const std::size_t i = sample_before(path, event.t_lo);
    const auto before   = sample_decomposition(path, i, tols);
    const auto after    = sample_decomposition(path, i + 1, tols);
    const auto from     = classify_clusters(before);
    const auto to       = classify_clusters(after);

    // eliminations into +-1 have no signature data
    if (from.m_minus != to.m_minus || from.m_plus != to.m_plus) return out;
    if (from.l() < 2 || to.l() >= from.l()) return out;

    // the merging pair: adjacent elliptic clusters with the smallest gap
    std::vector<const RealCluster*> elliptic;
    for (const auto& c : before.real_clusters)
        if (c.value > -1.0 && c.value < 1.0) elliptic.push_back(&c);
    std::size_t best = 0;
    for (std::size_t j = 1; j + 1 < elliptic.size(); ++j)
        if (elliptic[j + 1]->value - elliptic[j]->value <
            elliptic[best + 1]->value - elliptic[best]->value)
            best = j;

    out.pair = combined_pair(path, i, {elliptic[best]->value, elliptic[best + 1]->value}, tols);
    if (!out.pair->definite())
        out.verdict = Verdict::admissible;
    else
        out.verdict = to.r() > from.r() ? Verdict::theorem_violation : Verdict::krein_blocked;
    return out;
}

Event hn_check(const MatrixPath& path, const Event& event, const Tolerances& tols) {
    Event out   = event;
    out.kind    = EventKind::hn_transition;
    out.verdict = Verdict::not_applicable;
    if (event.kind != EventKind::region_transition) return out;
    if (path.kind != PathKind::wonenburger) return out;  // B-signature undefined otherwise

    const std::size_t i = sample_before(path, event.t_lo);
    const auto before   = sample_decomposition(path, i, tols);
    const auto after    = sample_decomposition(path, i + 1, tols);
    const auto from     = classify_clusters(before);
    const auto to       = classify_clusters(after);

    auto sum = [](const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); };

    // one hyperbolic side must lose two multiplicities to a complex quadruple
    // (departure) or merge two clusters into one (collision)
    for (bool positive : {true, false}) {
        const auto& from_side = positive ? from.mult_pos : from.mult_neg;
        const auto& to_side   = positive ? to.mult_pos : to.mult_neg;
        std::vector<double> side_values;
        for (const auto& c : before.real_clusters)
            if (positive ? c.value > 1.0 : c.value < -1.0) side_values.push_back(c.value);

        const bool departure = to.r() > from.r() && sum(from_side) - sum(to_side) == 2;
        const bool collision = to.r() == from.r() && sum(from_side) == sum(to_side) &&
                               static_cast<int>(to_side.size()) ==
                                   static_cast<int>(from_side.size()) - 1;
        if (!departure && !collision) continue;

        std::vector<double> transit;
        if (static_cast<int>(from_side.size()) >= 2) {
            // two clusters involved: the closest adjacent pair
            std::size_t best = 0;
            for (std::size_t j = 1; j + 1 < side_values.size(); ++j)
                if (side_values[j + 1] - side_values[j] < side_values[best + 1] - side_values[best])
                    best = j;
            transit = {side_values[best], side_values[best + 1]};
        } else if (from_side.size() == 1 && from_side.front() >= 2) {
            transit = {side_values.front()};  // departing multiplicity-2 cluster
        } else {
            continue;
        }

        out.pair = combined_pair(path, i, transit, tols);
        if (!out.pair->definite())
            out.verdict = Verdict::admissible;
        else
            out.verdict = departure ? Verdict::theorem_violation : Verdict::admissible;
        return out;
    }
    return out;
}

bool is_stable(const Mat& m, double tol) {
    if (m.rows() != m.cols() || m.rows() % 2 != 0)
        throw ValidationError("is_stable: matrix must be square of even size");
    Eigen::EigenSolver<Mat> solver(m, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success) throw NumericError("is_stable: eigen-solver failed");
    std::vector<cplx> eigs(solver.eigenvalues().data(), solver.eigenvalues().data() + m.rows());
    for (const auto& z : eigs)
        if (std::abs(std::abs(z) - 1.0) > tol) return false;

    const auto spec = cluster_eigenvalues(eigs, std::max(tol, 1e-9));
    const CMat mc   = m.cast<cplx>();
    auto semisimple = [&](cplx value, int mult) {
        const CMat shifted = mc - value * CMat::Identity(m.rows(), m.cols());
        Eigen::JacobiSVD<CMat> svd(shifted);
        const auto& sv     = svd.singularValues();
        const double floor = std::max(tol, 1e-9) * std::max(1.0, sv(0));
        int rank           = 0;
        for (int i = 0; i < sv.size(); ++i)
            if (sv(i) > floor) ++rank;
        return rank == static_cast<int>(m.rows()) - mult;
    };
    for (const auto& c : spec.real_clusters)
        if (!semisimple(cplx(c.value, 0.0), c.mult)) return false;
    for (const auto& c : spec.complex_clusters) {
        if (!semisimple(c.value, c.mult)) return false;
        if (!semisimple(std::conj(c.value), c.mult)) return false;
    }
    return true;
}

StabilityVerdict strong_stability(const Mat& m, double tol) {
    if (!is_stable(m, tol)) return StabilityVerdict::unstable;
    Eigen::EigenSolver<Mat> solver(m, /*computeEigenvectors=*/false);
    std::vector<cplx> eigs(solver.eigenvalues().data(), solver.eigenvalues().data() + m.rows());
    const auto spec = cluster_eigenvalues(eigs, std::max(tol, 1e-9));
    for (const auto& c : spec.real_clusters)  // +-1 eigenvalues are always indefinite
        if (!krein_signature(m, cplx(c.value, 0.0), std::max(tol, 1e-9)).definite())
            return StabilityVerdict::stable;
    for (const auto& c : spec.complex_clusters)
        if (!krein_signature(m, c.value, std::max(tol, 1e-9)).definite())
            return StabilityVerdict::stable;
    return StabilityVerdict::strongly_stable;
}

RegionHistogram perturbation_experiment_serial(const WonenburgerTriple& t, double eps, int trials,
                                               std::uint64_t seed, const Tolerances& tols) {
    RegionHistogram hist;
    for (int i = 0; i < trials; ++i) {
        const auto perturbed = perturb_wonenburger(t, eps, seed + static_cast<std::uint64_t>(i));
        const auto label = classify_clusters(spectral_decomposition(perturbed.a, tols.cluster));
        ++hist[label.canonical()];
    }
    return hist;
}

RegionHistogram perturbation_experiment(const WonenburgerTriple& t, double eps, int trials,
                                        std::uint64_t seed, const Tolerances& tols) {
    RegionHistogram hist;
    std::string first_error;
#ifdef _OPENMP
#pragma omp parallel
    {
        RegionHistogram local;
#pragma omp for schedule(dynamic, 16)
        for (int i = 0; i < trials; ++i) {
            try {
                const auto perturbed =
                    perturb_wonenburger(t, eps, seed + static_cast<std::uint64_t>(i));
                const auto label =
                    classify_clusters(spectral_decomposition(perturbed.a, tols.cluster));
                ++local[label.canonical()];
            } catch (const std::exception& e) {
#pragma omp critical
                if (first_error.empty()) first_error = e.what();
            }
        }
#pragma omp critical
        for (const auto& [key, count] : local) hist[key] += count;
    }
#else
    hist = perturbation_experiment_serial(t, eps, trials, seed, tols);
#endif
    if (!first_error.empty()) throw NumericError("perturbation_experiment: " + first_error);
    return hist;
}

}  // namespace gitseq
