#include "gitseq/signatures.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

namespace gitseq {

const char* to_string(EigClass c) {
    switch (c) {
        case EigClass::neg_hyperbolic: return "negHyperbolic";
        case EigClass::elliptic: return "elliptic";
        case EigClass::pos_hyperbolic: return "posHyperbolic";
    }
    return "?";
}

namespace {

SignPair count_signature(const Vec& form_eigenvalues, double tol, const char* what) {
    SignPair pair;
    for (int i = 0; i < form_eigenvalues.size(); ++i) {
        const double v = form_eigenvalues(i);
        if (std::abs(v) <= tol)
            throw NumericError(std::string(what) + ": restricted form is degenerate");
        (v > 0.0 ? pair.p : pair.q)++;
    }
    return pair;
}

}  // namespace

SignPair b_signature(const WonenburgerTriple& t, double a, BlockKind which, double tol) {
    if (std::abs(std::abs(a) - 1.0) <= tol)
        throw ValidationError("b_signature: undefined at eigenvalue +-1");
    const Mat basis = which == BlockKind::b_block
                          ? real_eigenspace(Mat(t.a.transpose()), a, tol)
                          : real_eigenspace(t.a, a, tol);
    const Mat& block = which == BlockKind::b_block ? t.b : t.c;
    const Mat gram   = basis.transpose() * block * basis;
    Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (gram + gram.transpose()),
                                          Eigen::EigenvaluesOnly);
    return count_signature(es.eigenvalues(), tol, "b_signature");
}

namespace {

Signature signature_over_clusters(const WonenburgerTriple& t, double tol, bool strict) {
    const auto spec = spectral_decomposition(t.a, tol);
    Signature sig;
    for (const auto& cluster : spec.real_clusters) {
        if (std::abs(std::abs(cluster.value) - 1.0) <= tol) {
            if (strict) throw ValidationError("full_b_signature: A has an eigenvalue at +-1");
            continue;
        }
        EigClass cls = cluster.value < -1.0   ? EigClass::neg_hyperbolic
                       : cluster.value > 1.0 ? EigClass::pos_hyperbolic
                                             : EigClass::elliptic;
        sig.push_back({cls, cluster.value, b_signature(t, cluster.value, BlockKind::b_block, tol)});
    }
    return sig;
}

}  // namespace

Signature full_b_signature(const WonenburgerTriple& t, double tol) {
    return signature_over_clusters(t, tol, /*strict=*/true);
}

Signature partial_b_signature(const WonenburgerTriple& t, double tol) {
    return signature_over_clusters(t, tol, /*strict=*/false);
}

namespace {

// Invariant subspace of the eigenvalue cluster at `target`. Eigenvector
// columns give the exact dimension for semisimple clusters even when the
// matrix is far from normal (a null-space threshold can over-count there);
// defective clusters fall back to the generalized null space.
CMat cluster_eigenspace(const CMat& mc, const Eigen::ComplexEigenSolver<CMat>& solver,
                        cplx target, double tol) {
    const double reach = std::max(tol, 1e-6) * (1.0 + std::abs(target));
    std::vector<int> members;
    for (int i = 0; i < solver.eigenvalues().size(); ++i)
        if (std::abs(solver.eigenvalues()(i) - target) <= reach) members.push_back(i);
    if (members.empty())
        throw ValidationError("krein_signature: lambda is not in the spectrum");

    CMat vectors(mc.rows(), members.size());
    for (std::size_t k = 0; k < members.size(); ++k)
        vectors.col(static_cast<Eigen::Index>(k)) = solver.eigenvectors().col(members[k]);
    Eigen::JacobiSVD<CMat> svd(vectors, Eigen::ComputeThinU);
    const auto& sv = svd.singularValues();
    if (sv(sv.size() - 1) > 1e-8 * sv(0)) return svd.matrixU();  // semisimple cluster
    return generalized_eigenspace(mc, target, static_cast<int>(members.size()), tol);
}

}  // namespace

SignPair krein_signature(const Mat& m, cplx lambda, double tol) {
    if (m.rows() != m.cols() || m.rows() % 2 != 0)
        throw ValidationError("krein_signature: matrix must be square of even size");
    const int two_n = static_cast<int>(m.rows());

    const CMat mc = m.cast<cplx>();
    Eigen::ComplexEigenSolver<CMat> solver(mc, /*computeEigenvectors=*/true);
    if (solver.info() != Eigen::Success) throw NumericError("krein_signature: eigen-solver failed");

    const bool on_circle = std::abs(std::abs(lambda) - 1.0) <= tol;
    CMat space;
    if (on_circle) {
        space = cluster_eigenspace(mc, solver, lambda, tol);
    } else {
        const CMat e1 = cluster_eigenspace(mc, solver, lambda, tol);
        const CMat e2 = cluster_eigenspace(mc, solver, 1.0 / std::conj(lambda), tol);
        space.resize(two_n, e1.cols() + e2.cols());
        space << e1, e2;
    }

    const CMat form = cplx(0.0, -1.0) * standard_j(two_n / 2).cast<cplx>();
    const CMat gram = space.adjoint() * form * space;
    Eigen::SelfAdjointEigenSolver<CMat> es(0.5 * (gram + gram.adjoint()),
                                           Eigen::EigenvaluesOnly);
    return count_signature(es.eigenvalues(), tol, "krein_signature");
}

Signature collapse(const Signature& s) {
    Signature out;
    std::copy_if(s.begin(), s.end(), std::back_inserter(out),
                 [](const SignatureEntry& e) { return e.cls == EigClass::elliptic; });
    return out;
}

}  // namespace gitseq
