#include "gitseq/core.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <string>

namespace gitseq {
namespace {

// Coordinates on Sym(n) orthonormal for the Frobenius inner product:
// E_ii, then (E_ij + E_ji)/sqrt(2) for i < j.
const double kInvSqrt2 = 0.7071067811865475244;

int sym_dim(int n) { return n * (n + 1) / 2; }
int skew_dim(int n) { return n * (n - 1) / 2; }

Vec vec_sym(const Mat& s) {
    const int n = static_cast<int>(s.rows());
    Vec v(sym_dim(n));
    int idx = 0;
    for (int i = 0; i < n; ++i) v(idx++) = s(i, i);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) v(idx++) = (s(i, j) + s(j, i)) * kInvSqrt2;
    return v;
}

Mat unvec_sym(const Vec& v, int n) {
    Mat s(n, n);
    int idx = 0;
    for (int i = 0; i < n; ++i) s(i, i) = v(idx++);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            s(i, j) = s(j, i) = v(idx++) * kInvSqrt2;
        }
    return s;
}

Vec vec_skew(const Mat& w) {
    const int n = static_cast<int>(w.rows());
    Vec v(skew_dim(n));
    int idx = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) v(idx++) = (w(i, j) - w(j, i)) * kInvSqrt2;
    return v;
}

// Matrix of X |-> A X - X A^t restricted to Sym(n), landing in Skew(n).
// Its null space is the space of admissible B blocks for this A.
Mat constraint_operator(const Mat& a) {
    const int n = static_cast<int>(a.rows());
    Mat op(skew_dim(n), sym_dim(n));
    int col = 0;
    auto emit = [&](const Mat& basis_elem) {
        op.col(col++) = vec_skew(a * basis_elem - basis_elem * a.transpose());
    };
    for (int i = 0; i < n; ++i) {
        Mat e = Mat::Zero(n, n);
        e(i, i) = 1.0;
        emit(e);
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Mat e = Mat::Zero(n, n);
            e(i, j) = e(j, i) = kInvSqrt2;
            emit(e);
        }
    return op;
}

// Orthonormal basis (columns) of the admissible-B space.
Mat admissible_b_basis(const Mat& a) {
    const int n = static_cast<int>(a.rows());
    if (n == 1) return Mat::Identity(1, 1);
    const Mat op = constraint_operator(a);
    Eigen::JacobiSVD<Mat> svd(op, Eigen::ComputeFullV);
    const auto& sv     = svd.singularValues();
    const double floor = 1e-10 * std::max(1.0, sv.size() > 0 ? sv(0) : 1.0);
    int null_dim       = 0;
    for (int i = 0; i < sv.size(); ++i)
        if (sv(i) <= floor) ++null_dim;
    // rank never exceeds skew_dim, so at least n dimensions always survive
    null_dim = std::max(null_dim, sym_dim(n) - skew_dim(n));
    return svd.matrixV().rightCols(null_dim);
}

Mat solve_c_block(const Mat& a, const Mat& b) {
    const int n = static_cast<int>(a.rows());
    return b.fullPivLu().solve(a * a - Mat::Identity(n, n));
}

}  // namespace

WonenburgerTriple sample_wonenburger(int n, std::uint64_t seed, double scale) {
    if (n < 1) throw ValidationError("sample_wonenburger: n must be >= 1");
    if (scale <= 0.0 || scale >= 1.0)
        throw ValidationError("sample_wonenburger: scale must lie in (0,1)");
    Rng rng(seed * 0x100000001b3ULL + static_cast<std::uint64_t>(n));

    const int max_attempts = 64;
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        const Mat a       = rng.gaussian_matrix(n, n);
        const Mat basis   = admissible_b_basis(a);
        Vec coeffs(basis.cols());
        for (int i = 0; i < coeffs.size(); ++i) coeffs(i) = rng.normal();
        Mat b = unvec_sym(basis * coeffs, n);
        const double norm = b.norm();
        if (norm < 1e-12) continue;
        b /= norm;

        Eigen::JacobiSVD<Mat> svd(b);
        const auto& sv = svd.singularValues();
        if (sv(sv.size() - 1) <= scale * sv(0)) continue;  // cond(B) >= 1/scale

        WonenburgerTriple t{a, b, solve_c_block(a, b)};
        if (validate_wonenburger(t, 1e-8).empty()) return t;
    }
    throw NumericError("sample_wonenburger: no well-conditioned B after " +
                       std::to_string(max_attempts) + " attempts (n=" + std::to_string(n) +
                       ", seed=" + std::to_string(seed) + ")");
}

WonenburgerTriple perturb_wonenburger(const WonenburgerTriple& t, double eps,
                                      std::uint64_t seed) {
    const int n = t.dof();
    if (!validate_wonenburger(t, 1e-6).empty())
        throw ValidationError("perturb_wonenburger: input triple is not valid");
    if (eps == 0.0) return t;
    if (eps < 0.0) throw ValidationError("perturb_wonenburger: eps must be >= 0");

    Eigen::JacobiSVD<Mat> svd_b(t.b);
    const double sigma_min = svd_b.singularValues()(n - 1);
    if (sigma_min <= 0.0) throw ValidationError("perturb_wonenburger: B block is singular");
    // Within this radius the eigenvalues of B cannot cross zero (Weyl), so
    // the signature of the perturbed block is pinned to that of B.
    const double radius = 0.5 * sigma_min;

    Rng rng(seed ^ 0xa02bdbf7bb3c0a7ULL);
    const Vec b_coords = vec_sym(t.b);

    const int max_attempts = 256;
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        Mat dir = rng.gaussian_matrix(n, n);
        dir /= dir.norm();
        const Mat a_new = t.a + eps * dir;

        const Mat basis = admissible_b_basis(a_new);
        const Mat b_new = unvec_sym(basis * (basis.transpose() * b_coords), n);
        if ((b_new - t.b).norm() > radius) continue;

        WonenburgerTriple out{a_new, b_new, solve_c_block(a_new, b_new)};
        if (!validate_wonenburger(out, 1e-8).empty()) continue;
        return out;
    }
    throw NumericError("perturb_wonenburger: no admissible direction after " +
                       std::to_string(max_attempts) + " attempts (seed=" +
                       std::to_string(seed) + ")");
}

}  // namespace gitseq
