#pragma once

#include "gitseq/base_space.hpp"
#include "gitseq/signatures.hpp"

#include <map>
#include <optional>
#include <variant>
#include <vector>

namespace gitseq {

enum class PathKind { wonenburger, symplectic };

struct PathSample {
    double t = 0.0;
    std::variant<WonenburgerTriple, Mat> payload;
};

// Discrete one-parameter family of monodromy matrices, parameters strictly
// increasing, at least two samples, uniform payload kind.
struct MatrixPath {
    PathKind kind = PathKind::wonenburger;
    std::vector<PathSample> samples;

    void validate(double constraint_tol) const;
    int dof() const;
};

struct TracePoint {
    double t = 0.0;
    StabilityPoint point;
    RegionLabel region;
};

// Stability-index multiset of a symplectic matrix: the 2n eigenvalues map in
// reciprocal pairs onto n index values; clustered like an A-block spectrum.
SpectralDecomposition stability_index_decomposition(const Mat& m, double cluster_tol);

// Per-sample stability points and region labels. For Wonenburger payloads
// these come from the A block; for plain symplectic payloads from the
// stability-index multiset of the full spectrum. The parallel kernel and
// the serial reference produce identical output.
std::vector<TracePoint> trace(const MatrixPath& path, const Tolerances& tol);
std::vector<TracePoint> trace_serial(const MatrixPath& path, const Tolerances& tol);

enum class EventKind {
    eigenvalue_pm1_crossing,
    kfold_crossing,
    region_transition,
    krein_collision,
    hn_transition,
};

enum class Verdict { admissible, krein_blocked, theorem_violation, not_applicable };

const char* to_string(EventKind k);
const char* to_string(Verdict v);

struct Event {
    EventKind kind = EventKind::region_transition;
    double t_lo = 0.0, t_hi = 0.0;
    double a_value = 0.0;         // crossed stability-index value (crossings only)
    int l = 0, k = 0;             // e^{2 pi i l/k} tag, reduced fraction
    std::optional<SignPair> pair; // combined signature at a collision
    Verdict verdict = Verdict::not_applicable;
    std::string from, to;         // region labels around a transition
};

// Crossing events for every stability index a = cos(2 pi l/k), k <= k_max,
// l/k reduced, localized on the piecewise-linear interpolation of the
// s-coordinates to intervals of width <= tol; plus a region_transition per
// pair of consecutive samples that classify differently.
std::vector<Event> detect_events(const MatrixPath& path, int k_max, double tol,
                                 const Tolerances& tols);

// Fill in the verdict of a region transition where two elliptic clusters
// merge: blocked when the combined signature is definite (entering the
// nonreal region from there would contradict the Krein--Moser theorem).
Event krein_collision_check(const MatrixPath& path, const Event& event, const Tolerances& tols);

// Same for a merge of two same-sign hyperbolic clusters followed by a
// complex quadruple; definite transit signature entering the nonreal region
// flags a violation. Wonenburger payloads only.
Event hn_check(const MatrixPath& path, const Event& event, const Tolerances& tols);

// Spectrum on the unit circle within tol and every eigenvalue semisimple.
bool is_stable(const Mat& m, double tol);

enum class StabilityVerdict { unstable, stable, strongly_stable };

const char* to_string(StabilityVerdict v);

// Strongly stable iff stable and every eigenvalue is Krein-definite.
StabilityVerdict strong_stability(const Mat& m, double tol);

using RegionHistogram = std::map<std::string, int>;

// Classifies `trials` independent perturbations of t (seed + i for trial i).
// OpenMP-parallel; the serial reference is kept for testing and produces the
// same histogram.
RegionHistogram perturbation_experiment(const WonenburgerTriple& t, double eps, int trials,
                                        std::uint64_t seed, const Tolerances& tols);
RegionHistogram perturbation_experiment_serial(const WonenburgerTriple& t, double eps, int trials,
                                               std::uint64_t seed, const Tolerances& tols);

}  // namespace gitseq
