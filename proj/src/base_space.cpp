#include "gitseq/base_space.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numeric>
#include <sstream>

namespace gitseq {

int RegionLabel::total() const {
    auto sum = [](const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); };
    return sum(mult_neg) + m_minus + sum(mult_ell) + m_plus + sum(mult_pos) + 2 * sum(mult_cx);
}

std::string RegionLabel::canonical() const {
    auto list = [](std::ostringstream& os, const std::vector<int>& v) {
        os << '[';
        for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
        os << ']';
    };
    std::ostringstream os;
    os << "H-";
    list(os, mult_neg);
    os << "|" << m_minus << "|E";
    list(os, mult_ell);
    os << "|" << m_plus << "|H+";
    list(os, mult_pos);
    os << "|N";
    list(os, mult_cx);
    return os.str();
}

StabilityPoint stability_point(const std::vector<cplx>& eigenvalues) {
    const int n = static_cast<int>(eigenvalues.size());
    std::vector<cplx> elem(n + 1, cplx(0.0, 0.0));
    elem[0] = cplx(1.0, 0.0);
    for (const cplx& mu : eigenvalues)
        for (int j = n; j >= 1; --j) elem[j] += mu * elem[j - 1];
    StabilityPoint pt{n, std::vector<double>(n)};
    for (int j = 1; j <= n; ++j) pt.s[j - 1] = elem[j].real();
    return pt;
}

StabilityPoint stability_point(const std::vector<double>& eigenvalues) {
    std::vector<cplx> z(eigenvalues.begin(), eigenvalues.end());
    return stability_point(z);
}

StabilityPoint stability_point(const Mat& a) {
    if (a.rows() != a.cols()) throw ValidationError("stability_point: matrix must be square");
    Eigen::EigenSolver<Mat> solver(a, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success) throw NumericError("stability_point: eigen-solver failed");
    std::vector<cplx> eigs(solver.eigenvalues().data(), solver.eigenvalues().data() + a.rows());
    return stability_point(eigs);
}

std::vector<double> monic_coefficients(const StabilityPoint& pt) {
    // prod (t - mu_i) = t^n - s1 t^{n-1} + s2 t^{n-2} - ...
    std::vector<double> coeffs(pt.n + 1);
    coeffs[0] = 1.0;
    double sign = -1.0;
    for (int j = 1; j <= pt.n; ++j, sign = -sign) coeffs[j] = sign * pt.s[j - 1];
    return coeffs;
}

std::vector<cplx> polynomial_roots(const std::vector<double>& monic) {
    const int n = static_cast<int>(monic.size()) - 1;
    if (n < 1) return {};
    Mat companion = Mat::Zero(n, n);
    for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
    for (int i = 0; i < n; ++i) companion(i, n - 1) = -monic[n - i];
    Eigen::EigenSolver<Mat> solver(companion, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success) throw NumericError("polynomial_roots: solver failed");
    return {solver.eigenvalues().data(), solver.eigenvalues().data() + n};
}

RegionLabel classify_clusters(const SpectralDecomposition& spec) {
    RegionLabel label;
    for (const auto& c : spec.real_clusters) {
        if (c.value == -1.0)
            label.m_minus = c.mult;
        else if (c.value == 1.0)
            label.m_plus = c.mult;
        else if (c.value < -1.0)
            label.mult_neg.push_back(c.mult);
        else if (c.value < 1.0)
            label.mult_ell.push_back(c.mult);
        else
            label.mult_pos.push_back(c.mult);
    }
    for (const auto& c : spec.complex_clusters) label.mult_cx.push_back(c.mult);
    return label;
}

RegionLabel classify_point(const StabilityPoint& pt, double tol) {
    return classify_clusters(cluster_eigenvalues(polynomial_roots(monic_coefficients(pt)), tol));
}

double discriminant(const StabilityPoint& pt) {
    const auto roots = polynomial_roots(monic_coefficients(pt));
    cplx prod(1.0, 0.0);
    for (std::size_t i = 0; i < roots.size(); ++i)
        for (std::size_t j = i + 1; j < roots.size(); ++j) {
            const cplx d = roots[i] - roots[j];
            prod *= d * d;
        }
    return prod.real();
}

std::array<double, 2> gamma_eval(double a, const StabilityPoint& pt) {
    const auto coeffs = monic_coefficients(pt);
    double value = 0.0, derivative = 0.0;
    for (double c : coeffs) {
        derivative = derivative * a + value;
        value      = value * a + c;
    }
    return {value, derivative};
}

TangentLine bifurcation_line_2d(BifKind kind, double param) {
    double slope;
    if (kind == BifKind::elliptic) {
        slope = std::cos(2.0 * 3.141592653589793238462643 * param);
    } else {
        if (param == 0.0) throw ValidationError("bifurcation_line_2d: lambda = 0");
        slope = 0.5 * (param + 1.0 / param);
        if (std::abs(slope) < 1.0)
            throw ValidationError("bifurcation_line_2d: lambda is not hyperbolic");
    }
    return {slope, -slope * slope, {2.0 * slope, slope * slope}};
}

DepressedCubic depressed_cubic(double b, double c, double d) {
    const double p = c + b * b / 3.0;
    const double q = d + b * c / 3.0 + 2.0 * b * b * b / 27.0;
    return {q, p, 4.0 * p * p * p - 27.0 * q * q};
}

bool in_stable_region(const StabilityPoint& pt, double tol) {
    const auto roots = polynomial_roots(monic_coefficients(pt));
    for (const auto& z : roots) {
        if (std::abs(z.imag()) > tol) return false;
        if (std::abs(z.real()) > 1.0 + tol) return false;
    }
    return true;
}

}  // namespace gitseq
