#include "gitseq/normal_forms.hpp"

#include <cmath>

namespace gitseq {

namespace {
constexpr double kPi = 3.141592653589793238462643;
}

void SpectralConfig::validate() const {
    int budget = m_minus + m_plus;
    for (const auto& h : neg_hyp) {
        if (h.beta <= 0.0) throw ValidationError("SpectralConfig: beta must be > 0");
        if (h.mult < 1) throw ValidationError("SpectralConfig: multiplicities must be >= 1");
        budget += h.mult;
    }
    for (const auto& e : ell) {
        if (e.theta <= 0.0 || e.theta >= kPi)
            throw ValidationError("SpectralConfig: theta must lie in (0,pi)");
        if (e.mult < 1) throw ValidationError("SpectralConfig: multiplicities must be >= 1");
        budget += e.mult;
    }
    for (const auto& h : pos_hyp) {
        if (h.beta <= 0.0) throw ValidationError("SpectralConfig: beta must be > 0");
        if (h.mult < 1) throw ValidationError("SpectralConfig: multiplicities must be >= 1");
        budget += h.mult;
    }
    for (const auto& c : cx) {
        if (c.r <= 0.0) throw ValidationError("SpectralConfig: r must be > 0");
        if (c.gamma <= 0.0 || c.gamma >= kPi)
            throw ValidationError("SpectralConfig: gamma must lie in (0,pi)");
        if (c.mult < 1) throw ValidationError("SpectralConfig: multiplicities must be >= 1");
        budget += 2 * c.mult;
    }
    if (budget != n) throw ValidationError("SpectralConfig: multiplicities do not sum to n");

    // distinct cluster values, increasing within each ordered list
    auto require_increasing = [](const std::vector<double>& v, const char* what) {
        for (std::size_t i = 1; i < v.size(); ++i)
            if (v[i] <= v[i - 1]) throw ValidationError(std::string("SpectralConfig: ") + what);
    };
    std::vector<double> neg, mid, pos;
    for (const auto& h : neg_hyp) neg.push_back(-std::cosh(h.beta));
    for (const auto& e : ell) mid.push_back(std::cos(e.theta));
    for (const auto& h : pos_hyp) pos.push_back(std::cosh(h.beta));
    require_increasing(neg, "negative hyperbolic clusters must increase");
    require_increasing(mid, "elliptic clusters must increase in cos(theta)");
    require_increasing(pos, "positive hyperbolic clusters must increase");
    for (std::size_t i = 0; i < cx.size(); ++i)
        for (std::size_t j = i + 1; j < cx.size(); ++j)
            if (cx[i].r == cx[j].r && cx[i].gamma == cx[j].gamma)
                throw ValidationError("SpectralConfig: complex clusters must be distinct");
}

RegionLabel SpectralConfig::region() const {
    RegionLabel label;
    for (const auto& h : neg_hyp) label.mult_neg.push_back(h.mult);
    label.m_minus = m_minus;
    for (const auto& e : ell) label.mult_ell.push_back(e.mult);
    label.m_plus = m_plus;
    for (const auto& h : pos_hyp) label.mult_pos.push_back(h.mult);
    for (const auto& c : cx) label.mult_cx.push_back(c.mult);
    return label;
}

std::vector<int> SpectralConfig::signed_cluster_mults() const {
    std::vector<int> mults;
    for (const auto& h : neg_hyp) mults.push_back(h.mult);
    for (const auto& e : ell) mults.push_back(e.mult);
    for (const auto& h : pos_hyp) mults.push_back(h.mult);
    return mults;
}

Mat rotation_dilation_block(double r, double gamma) {
    Mat block(2, 2);
    block << r * std::cos(gamma), -r * std::sin(gamma),  //
        r * std::sin(gamma), r * std::cos(gamma);
    return block;
}

Mat s_block(double r, double gamma) {
    const double r2 = r * r;
    Mat block(2, 2);
    block << r2 * std::cos(2.0 * gamma) - 1.0, -r2 * std::sin(2.0 * gamma),  //
        -r2 * std::sin(2.0 * gamma), -r2 * std::cos(2.0 * gamma) + 1.0;
    return block;
}

std::vector<SignatureAssignment> enumerate_signatures(const SpectralConfig& cfg) {
    cfg.validate();
    const auto mults = cfg.signed_cluster_mults();
    std::vector<SignatureAssignment> out{{}};
    for (int mult : mults) {
        std::vector<SignatureAssignment> next;
        next.reserve(out.size() * (mult + 1));
        for (const auto& prefix : out)
            for (int p = mult; p >= 0; --p) {
                auto extended = prefix;
                extended.push_back({p, mult - p});
                next.push_back(std::move(extended));
            }
        out = std::move(next);
    }
    return out;
}

WonenburgerTriple normal_form(const SpectralConfig& cfg, const SignatureAssignment& sig) {
    cfg.validate();
    const auto mults = cfg.signed_cluster_mults();
    if (sig.size() != mults.size())
        throw ValidationError("normal_form: signature length does not match the configuration");
    for (std::size_t i = 0; i < mults.size(); ++i)
        if (sig[i].p < 0 || sig[i].q < 0 || sig[i].p + sig[i].q != mults[i])
            throw ValidationError("normal_form: signature pair does not fit the multiplicity");

    Mat a = Mat::Zero(cfg.n, cfg.n);
    Mat b = Mat::Zero(cfg.n, cfg.n);
    Mat c = Mat::Zero(cfg.n, cfg.n);

    int offset   = 0;
    int sig_slot = 0;
    // diag block of size `mult`: eigenvalue `mu` on A, +w on p dims and -w on
    // q dims of B; the C weight on elliptic clusters flips sign.
    auto put_real_cluster = [&](double mu, double w_b, double w_c, int mult) {
        const SignPair pair = sig[sig_slot++];
        for (int i = 0; i < mult; ++i) {
            a(offset + i, offset + i) = mu;
            const double sign         = i < pair.p ? 1.0 : -1.0;
            b(offset + i, offset + i) = sign * w_b;
            c(offset + i, offset + i) = sign * w_c;
        }
        offset += mult;
    };
    auto put_unit_cluster = [&](double mu, int mult) {
        for (int i = 0; i < mult; ++i) a(offset + i, offset + i) = mu;
        offset += mult;
    };

    for (const auto& h : cfg.neg_hyp)
        put_real_cluster(-std::cosh(h.beta), std::sinh(h.beta), std::sinh(h.beta), h.mult);
    put_unit_cluster(-1.0, cfg.m_minus);
    for (const auto& e : cfg.ell)
        put_real_cluster(std::cos(e.theta), std::sin(e.theta), -std::sin(e.theta), e.mult);
    put_unit_cluster(1.0, cfg.m_plus);
    for (const auto& h : cfg.pos_hyp)
        put_real_cluster(std::cosh(h.beta), std::sinh(h.beta), std::sinh(h.beta), h.mult);

    for (const auto& cxc : cfg.cx)
        for (int copy = 0; copy < cxc.mult; ++copy) {
            a.block<2, 2>(offset, offset) = rotation_dilation_block(cxc.r, cxc.gamma);
            b.block<2, 2>(offset, offset) = (Mat(2, 2) << 1.0, 0.0, 0.0, -1.0).finished();
            c.block<2, 2>(offset, offset) = s_block(cxc.r, cxc.gamma);
            offset += 2;
        }

    return {a, b, c};
}

}  // namespace gitseq
