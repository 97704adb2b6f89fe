#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace gitseq {

using Mat  = Eigen::MatrixXd;
using Vec  = Eigen::VectorXd;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;
using cplx = std::complex<double>;

// Input fails a structural precondition (shape, constraint identity, schema).
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A numerical routine could not produce a trustworthy answer
// (rank detection ambiguous, solver failure, degenerate form).
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Requested size exceeds the enumeration limits.
class LimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Thresholds used throughout. `constraint` gates the Wonenburger/symplectic
// identities (absolute, max-norm), `cluster` merges nearby eigenvalues,
// `snap` decides membership at the boundary values ±1.
struct Tolerances {
    double constraint = 1e-8;
    double cluster    = 1e-6;
    double snap       = 1e-6;
};

// Deterministic RNG with a portable output sequence. std::mt19937_64 has a
// pinned stream, but the standard distributions do not, so uniform/normal
// are generated here directly (Box-Muller with a cached spare).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed ^ 0x9e3779b97f4a7c15ULL) {
        // splitmix warmup so that small consecutive seeds decorrelate
        next_u64();
        next_u64();
    }

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0,1)
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u1 = 0.0;
        while (u1 <= 0.0) u1 = uniform();
        double u2     = uniform();
        double radius = std::sqrt(-2.0 * std::log(u1));
        double angle  = 2.0 * 3.141592653589793238462643 * u2;
        spare_        = radius * std::sin(angle);
        has_spare_    = true;
        return radius * std::cos(angle);
    }

    Mat gaussian_matrix(int rows, int cols) {
        Mat m(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) m(i, j) = normal();
        return m;
    }

private:
    std::uint64_t state_;
    bool has_spare_ = false;
    double spare_   = 0.0;
};

}  // namespace gitseq
