#pragma once

#include "gitseq/core.hpp"

#include <array>
#include <vector>

namespace gitseq {

// Point of the base space R^n: elementary symmetric values s_1..s_n of the
// A-eigenvalues. For n=2 this is (tr A, det A).
struct StabilityPoint {
    int n = 0;
    std::vector<double> s;

    bool operator==(const StabilityPoint&) const = default;
};

// Eigenvalue-configuration label of a region: multiplicity lists per distinct
// cluster, ordered by increasing eigenvalue, plus the +-1 multiplicities.
struct RegionLabel {
    std::vector<int> mult_neg;  // clusters < -1
    int m_minus = 0;            // multiplicity at -1
    std::vector<int> mult_ell;  // clusters in (-1,1)
    int m_plus = 0;             // multiplicity at +1
    std::vector<int> mult_pos;  // clusters > 1
    std::vector<int> mult_cx;   // complex conjugate pairs (counted once)

    int k() const { return static_cast<int>(mult_neg.size()); }
    int l() const { return static_cast<int>(mult_ell.size()); }
    int m() const { return static_cast<int>(mult_pos.size()); }
    int r() const { return static_cast<int>(mult_cx.size()); }
    int total() const;

    bool operator==(const RegionLabel&) const = default;
    std::string canonical() const;  // stable text key, e.g. "H-[1]|1|E[2]|0|H+[]|N[]"
};

StabilityPoint stability_point(const Mat& a);
StabilityPoint stability_point(const std::vector<cplx>& eigenvalues);
StabilityPoint stability_point(const std::vector<double>& eigenvalues);

// Monic coefficients (1, c_{n-1}, ..., c_0) of prod (t - mu_i), from s-coords.
std::vector<double> monic_coefficients(const StabilityPoint& pt);

// Roots via the companion matrix.
std::vector<cplx> polynomial_roots(const std::vector<double>& monic);

RegionLabel classify_clusters(const SpectralDecomposition& spec);
RegionLabel classify_point(const StabilityPoint& pt, double tol);

// prod_{i<j} (lambda_i - lambda_j)^2 over the roots of the point's polynomial.
double discriminant(const StabilityPoint& pt);

// (P_a, dP_a): the point's monic polynomial and its a-derivative evaluated at
// a. Both are affine-linear in the s-coordinates; Gamma_a = {P_a = 0}.
std::array<double, 2> gamma_eval(double a, const StabilityPoint& pt);

enum class BifKind { elliptic, hyperbolic };

struct TangentLine {
    double slope;
    double intercept;
    std::array<double, 2> tangency;  // (2a, a^2) on the parabola y = x^2/4
};

// n=2 bifurcation line: slope cos(2 pi phi) for the elliptic pencil, or the
// stability index a(lambda) for a real hyperbolic lambda; tangent to y=x^2/4.
TangentLine bifurcation_line_2d(BifKind kind, double param);

struct DepressedCubic {
    double q, p, delta;  // -y^3 + p y + q, delta = 4p^3 - 27q^2
};

// Depressed form of -x^3 + b x^2 + c x + d under y = x - b/3. The (q,p)
// formulas are fixed by the root-shift identity (roots move by exactly -b/3).
DepressedCubic depressed_cubic(double b, double c, double d);

// All roots real and within [-1,1], boundary membership decided at tol.
bool in_stable_region(const StabilityPoint& pt, double tol);

}  // namespace gitseq
