#pragma once

#include "gitseq/common.hpp"

#include <vector>

namespace gitseq {

// The standard symplectic form, J = ( 0  1 ; -1  0 ) in n x n blocks.
Mat standard_j(int n);

// ||M^t J M - J||_max <= tol. Throws ValidationError on odd dimension.
bool is_symplectic(const Mat& m, double tol);

// Blocks (A,B,C) of a symplectic matrix in the form ( A  B ; C  A^t ).
// Valid triples satisfy B = B^t, C = C^t, AB = BA^t, A^tC = CA and
// A^2 - BC = 1, each within a stated tolerance.
struct WonenburgerTriple {
    Mat a, b, c;
    int dof() const { return static_cast<int>(a.rows()); }
};

// Labels of the violated constraints, empty iff the triple is valid at tol.
// Possible labels: "B_symmetric", "C_symmetric", "AB_BAt", "AtC_CA",
// "A2_BC_identity". Throws ValidationError on mismatched block shapes.
std::vector<std::string> validate_wonenburger(const WonenburgerTriple& t, double tol);

// The 2n x 2n matrix ( A  B ; C  A^t ). Throws ValidationError if the triple
// fails validation at tol.
Mat assemble(const WonenburgerTriple& t, double tol = 1e-8);

// Basis action R_*(A,B,C) = (R A R^-1, R B R^t, R^-t C R^-1).
// Throws ValidationError when R is singular within rcond 1e-12.
WonenburgerTriple change_basis(const WonenburgerTriple& t, const Mat& r);

// a(lambda) = (lambda + 1/lambda) / 2. Throws ValidationError at lambda = 0.
cplx stability_index(cplx lambda);

// Principal root of lambda^2 - 2 a lambda + 1 = 0: positive imaginary part
// for real a in (-1,1), modulus > 1 for real |a| > 1 and for nonreal a;
// a = +-1 maps to +-1.
cplx eigenvalue_from_index(cplx a);

struct RealCluster {
    double value;
    int mult;
};

// value has positive imaginary part; the conjugate pair is implied.
struct ComplexCluster {
    cplx value;
    int mult;
};

// Eigenvalues merged into clusters of diameter <= cluster_tol. Real clusters
// sorted ascending; representatives within cluster_tol of +-1 are snapped
// exactly to +-1; eigenvalues with |Im| <= cluster_tol are treated as real.
struct SpectralDecomposition {
    std::vector<RealCluster> real_clusters;
    std::vector<ComplexCluster> complex_clusters;
    double cluster_tol = 0.0;

    // real multiplicities plus twice the complex ones
    int total() const;
};

SpectralDecomposition spectral_decomposition(const Mat& a, double cluster_tol);

// Clustering of an explicit spectrum (same snapping rules).
SpectralDecomposition cluster_eigenvalues(const std::vector<cplx>& eigs, double cluster_tol);

// Orthonormal basis of the eigenspace of `m` for real eigenvalue `a`,
// computed as the null space of (m - a 1) with singular values below
// tol * max(1, sigma_max) treated as zero. Throws NumericError if the null
// space is empty.
Mat real_eigenspace(const Mat& m, double a, double tol);

// Orthonormal basis of ker (m - lambda 1)^power, same thresholding.
CMat generalized_eigenspace(const CMat& m, cplx lambda, int power, double tol);

// Random valid triple, deterministic in seed. A is Gaussian; B is a random
// element of the symmetric solution space of AB = BA^t with condition number
// below 1/scale; C = B^-1 (A^2 - 1). Throws NumericError when no acceptable
// B is found after bounded retries.
WonenburgerTriple sample_wonenburger(int n, std::uint64_t seed, double scale = 1e-3);

// A' = A + eps * D for a random unit-Frobenius direction D, accepted only
// when the projection B' of B onto the solution space for A' stays within
// half the smallest singular value of B (so the signature of B cannot jump)
// and remains well conditioned; C' is recomputed. ||A' - A||_F <= eps.
WonenburgerTriple perturb_wonenburger(const WonenburgerTriple& t, double eps, std::uint64_t seed);

}  // namespace gitseq
