#pragma once

#include "gitseq/core.hpp"

namespace gitseq {

enum class EigClass { neg_hyperbolic, elliptic, pos_hyperbolic };

const char* to_string(EigClass c);

// Signature (p,q) of a non-degenerate symmetric or Hermitian form:
// p positive-definite dimensions, q negative-definite dimensions.
struct SignPair {
    int p = 0;
    int q = 0;

    bool definite() const { return p == 0 || q == 0; }
    SignPair swapped() const { return {q, p}; }
    SignPair operator+(const SignPair& o) const { return {p + o.p, q + o.q}; }
    bool operator==(const SignPair& o) const = default;
    auto operator<=>(const SignPair& o) const = default;
};

struct SignatureEntry {
    EigClass cls;
    double value;  // the A-eigenvalue (stability index of the pair)
    SignPair pair;

    bool operator==(const SignatureEntry&) const = default;
};

// One entry per real non-(+-1) eigenvalue cluster of the A block, ordered by
// increasing eigenvalue. Complex clusters contribute nothing.
using Signature = std::vector<SignatureEntry>;

enum class BlockKind { b_block, c_block };

// Signature of B restricted to the a-eigenspace of A^t (or of C restricted
// to the a-eigenspace of A). Requires |a| != 1 within tol; throws
// ValidationError at +-1 ("the block degenerates there") and NumericError
// when the restricted form has an eigenvalue of magnitude <= tol.
SignPair b_signature(const WonenburgerTriple& t, double a, BlockKind which, double tol);

// All entries of the B-signature, one per real cluster of A. Requires that
// no A-eigenvalue lies at +-1 within tol.
Signature full_b_signature(const WonenburgerTriple& t, double tol);

// Same, but clusters at +-1 are skipped instead of rejected (their block is
// degenerate and carries no signature data).
Signature partial_b_signature(const WonenburgerTriple& t, double tol);

// Krein signature of an eigenvalue lambda of a symplectic matrix: the
// signature of the Hermitian form v |-> v* (-iJ) v restricted to the
// generalized eigenspace of lambda (|lambda| = 1), or to
// E_lambda + E_{1/conj(lambda)} for |lambda| != 1, where it is (d,d).
SignPair krein_signature(const Mat& m, cplx lambda, double tol);

// Col: drop the hyperbolic entries, keep the elliptic ones in order.
Signature collapse(const Signature& s);

}  // namespace gitseq
