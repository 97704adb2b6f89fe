#include "gitseq/core.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

namespace gitseq {

Mat standard_j(int n) {
    if (n < 1) throw ValidationError("standard_j: n must be >= 1");
    Mat j = Mat::Zero(2 * n, 2 * n);
    j.topRightCorner(n, n)   = Mat::Identity(n, n);
    j.bottomLeftCorner(n, n) = -Mat::Identity(n, n);
    return j;
}

bool is_symplectic(const Mat& m, double tol) {
    if (m.rows() != m.cols()) throw ValidationError("is_symplectic: matrix must be square");
    if (m.rows() % 2 != 0) throw ValidationError("is_symplectic: dimension must be even");
    const Mat j = standard_j(static_cast<int>(m.rows()) / 2);
    return ((m.transpose() * j * m - j).cwiseAbs().maxCoeff()) <= tol;
}

std::vector<std::string> validate_wonenburger(const WonenburgerTriple& t, double tol) {
    const auto n = t.a.rows();
    if (t.a.cols() != n || t.b.rows() != n || t.b.cols() != n || t.c.rows() != n ||
        t.c.cols() != n)
        throw ValidationError("validate_wonenburger: blocks must be square and of equal size");

    std::vector<std::string> violated;
    auto check = [&](const Mat& residual, const char* label) {
        if (residual.cwiseAbs().maxCoeff() > tol) violated.emplace_back(label);
    };
    check(t.b - t.b.transpose(), "B_symmetric");
    check(t.c - t.c.transpose(), "C_symmetric");
    check(t.a * t.b - t.b * t.a.transpose(), "AB_BAt");
    check(t.a.transpose() * t.c - t.c * t.a, "AtC_CA");
    check(t.a * t.a - t.b * t.c - Mat::Identity(n, n), "A2_BC_identity");
    return violated;
}

Mat assemble(const WonenburgerTriple& t, double tol) {
    auto violated = validate_wonenburger(t, tol);
    if (!violated.empty()) {
        std::string msg = "assemble: triple violates";
        for (const auto& v : violated) msg += " " + v;
        throw ValidationError(msg);
    }
    const auto n = t.a.rows();
    Mat m(2 * n, 2 * n);
    m.topLeftCorner(n, n)     = t.a;
    m.topRightCorner(n, n)    = t.b;
    m.bottomLeftCorner(n, n)  = t.c;
    m.bottomRightCorner(n, n) = t.a.transpose();
    return m;
}

WonenburgerTriple change_basis(const WonenburgerTriple& t, const Mat& r) {
    if (r.rows() != t.a.rows() || r.cols() != t.a.rows())
        throw ValidationError("change_basis: R must match the block size");
    Eigen::FullPivLU<Mat> lu(r);
    lu.setThreshold(1e-12);
    if (!lu.isInvertible()) throw ValidationError("change_basis: R is singular");
    const Mat r_inv = lu.inverse();
    return WonenburgerTriple{r * t.a * r_inv, r * t.b * r.transpose(),
                             r_inv.transpose() * t.c * r_inv};
}

cplx stability_index(cplx lambda) {
    if (lambda == cplx(0.0, 0.0)) throw ValidationError("stability_index: lambda = 0");
    return 0.5 * (lambda + 1.0 / lambda);
}

cplx eigenvalue_from_index(cplx a) {
    if (a.imag() == 0.0) {
        const double x = a.real();
        if (x >= -1.0 && x <= 1.0) {
            // elliptic: e^{i theta} with theta = arccos x, Im >= 0
            return {x, std::sqrt(std::max(0.0, 1.0 - x * x))};
        }
        // hyperbolic: pick the root outside the unit circle
        const double s = std::sqrt(x * x - 1.0);
        return {x > 0 ? x + s : x - s, 0.0};
    }
    const cplx root = std::sqrt(a * a - 1.0);
    const cplx lo   = a - root;
    const cplx hi   = a + root;
    return std::abs(hi) >= std::abs(lo) ? hi : lo;
}

int SpectralDecomposition::total() const {
    int sum = 0;
    for (const auto& c : real_clusters) sum += c.mult;
    for (const auto& c : complex_clusters) sum += 2 * c.mult;
    return sum;
}

SpectralDecomposition cluster_eigenvalues(const std::vector<cplx>& eigs, double cluster_tol) {
    SpectralDecomposition out;
    out.cluster_tol = cluster_tol;

    std::vector<double> reals;
    std::vector<cplx> upper;  // one representative per conjugate pair
    for (const auto& z : eigs) {
        if (std::abs(z.imag()) <= cluster_tol)
            reals.push_back(z.real());
        else if (z.imag() > 0.0)
            upper.push_back(z);
    }

    std::sort(reals.begin(), reals.end());
    std::size_t i = 0;
    while (i < reals.size()) {
        std::size_t j = i + 1;
        while (j < reals.size() && reals[j] - reals[i] <= cluster_tol) ++j;
        double mean = 0.0;
        for (std::size_t k = i; k < j; ++k) mean += reals[k];
        mean /= static_cast<double>(j - i);
        if (std::abs(mean - 1.0) <= cluster_tol) mean = 1.0;
        if (std::abs(mean + 1.0) <= cluster_tol) mean = -1.0;
        out.real_clusters.push_back({mean, static_cast<int>(j - i)});
        i = j;
    }

    std::sort(upper.begin(), upper.end(), [](cplx a, cplx b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    i = 0;
    while (i < upper.size()) {
        std::size_t j = i + 1;
        while (j < upper.size() && std::abs(upper[j] - upper[i]) <= cluster_tol) ++j;
        cplx mean(0.0, 0.0);
        for (std::size_t k = i; k < j; ++k) mean += upper[k];
        mean /= static_cast<double>(j - i);
        out.complex_clusters.push_back({mean, static_cast<int>(j - i)});
        i = j;
    }
    return out;
}

SpectralDecomposition spectral_decomposition(const Mat& a, double cluster_tol) {
    if (a.rows() != a.cols()) throw ValidationError("spectral_decomposition: matrix must be square");
    Eigen::EigenSolver<Mat> solver(a, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success)
        throw NumericError("spectral_decomposition: eigen-solver failed");
    std::vector<cplx> eigs(solver.eigenvalues().data(),
                           solver.eigenvalues().data() + a.rows());
    return cluster_eigenvalues(eigs, cluster_tol);
}

Mat real_eigenspace(const Mat& m, double a, double tol) {
    const auto n = m.rows();
    Eigen::JacobiSVD<Mat> svd(m - a * Mat::Identity(n, n), Eigen::ComputeFullV);
    const auto& sv     = svd.singularValues();
    const double floor = tol * std::max(1.0, sv.size() > 0 ? sv(0) : 1.0);
    int null_dim       = 0;
    for (int i = 0; i < sv.size(); ++i)
        if (sv(i) <= floor) ++null_dim;
    if (null_dim == 0)
        throw NumericError("real_eigenspace: value is not an eigenvalue within tolerance");
    return svd.matrixV().rightCols(null_dim);
}

CMat generalized_eigenspace(const CMat& m, cplx lambda, int power, double tol) {
    const auto n = m.rows();
    CMat shifted = m - lambda * CMat::Identity(n, n);
    CMat acc     = CMat::Identity(n, n);
    for (int i = 0; i < power; ++i) {
        acc = acc * shifted;
        const double norm = acc.norm();
        if (norm > 0.0) acc /= norm;  // keep singular values well scaled
    }
    Eigen::JacobiSVD<CMat> svd(acc, Eigen::ComputeFullV);
    const auto& sv     = svd.singularValues();
    const double floor = tol * std::max(1.0, sv.size() > 0 ? sv(0) : 1.0);
    int null_dim       = 0;
    for (int i = 0; i < sv.size(); ++i)
        if (sv(i) <= floor) ++null_dim;
    if (null_dim == 0)
        throw NumericError("generalized_eigenspace: value is not an eigenvalue within tolerance");
    return svd.matrixV().rightCols(null_dim);
}

}  // namespace gitseq
