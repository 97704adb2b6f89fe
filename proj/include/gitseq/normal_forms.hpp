#pragma once

#include "gitseq/base_space.hpp"
#include "gitseq/signatures.hpp"

namespace gitseq {

// Eigenvalue configuration of the A block, by distinct cluster. Clusters are
// kept sorted by increasing A-eigenvalue; +-1 multiplicities are separate
// (they carry no signature data). Parameters must be interior: theta in
// (0,pi), beta > 0, r > 0, gamma in (0,pi).
struct EllipticSpec {
    double theta;  // eigenvalue cos(theta)
    int mult;
};

struct HyperbolicSpec {
    double beta;  // eigenvalue +-cosh(beta)
    int mult;
};

struct ComplexSpec {
    double r, gamma;  // eigenvalue pair r e^{+-i gamma}
    int mult;
};

struct SpectralConfig {
    int n = 0;
    std::vector<HyperbolicSpec> neg_hyp;  // -cosh(beta), increasing eigenvalue
    int m_minus = 0;
    std::vector<EllipticSpec> ell;  // cos(theta) increasing
    int m_plus = 0;
    std::vector<HyperbolicSpec> pos_hyp;  // cosh(beta) increasing
    std::vector<ComplexSpec> cx;

    void validate() const;  // throws ValidationError
    RegionLabel region() const;
    // real non-(+-1) cluster multiplicities in eigenvalue order
    std::vector<int> signed_cluster_mults() const;
};

// R(r,gamma): dilation composed with a rotation.
Mat rotation_dilation_block(double r, double gamma);

// S(r,gamma): the C block paired with R, fixed by R^2 - diag(1,-1) S = 1.
Mat s_block(double r, double gamma);

// One SignPair per real non-(+-1) cluster, in eigenvalue order.
using SignatureAssignment = std::vector<SignPair>;

// All splittings (a,b) with a+b = mult per cluster; the list has
// prod (mult_j + 1) elements, in lexicographic order.
std::vector<SignatureAssignment> enumerate_signatures(const SpectralConfig& cfg);

// Block-diagonal representative triple for the configuration and signature.
// Throws ValidationError when the assignment does not fit the configuration.
WonenburgerTriple normal_form(const SpectralConfig& cfg, const SignatureAssignment& sig);

}  // namespace gitseq
