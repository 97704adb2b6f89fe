#include "gitseq/base_space.hpp"
#include "gitseq/strata.hpp"

#include <doctest.h>

#include <cmath>

using namespace gitseq;

TEST_CASE("stability points of the singular corners") {
    CHECK(stability_point(Mat(Mat::Identity(2, 2))).s == std::vector<double>{2.0, 1.0});
    Mat d(2, 2);
    d << 1, 0, 0, -1;
    CHECK(stability_point(d).s == std::vector<double>{0.0, -1.0});
    CHECK(stability_point(Mat(-Mat::Identity(2, 2))).s == std::vector<double>{-2.0, 1.0});
}

TEST_CASE("classify_point") {
    SUBCASE("roots -1 and 1") {
        const auto label = classify_point({2, {0.0, -1.0}}, 1e-9);
        CHECK(label.m_minus == 1);
        CHECK(label.m_plus == 1);
        CHECK(label.k() + label.l() + label.m() + label.r() == 0);
    }
    SUBCASE("roots 1 and 2") {
        const auto label = classify_point({2, {3.0, 2.0}}, 1e-9);
        CHECK(label.m_plus == 1);
        CHECK(label.mult_pos == std::vector<int>{1});
        CHECK(label.m() == 1);
    }
    SUBCASE("complex pair") {
        const auto label = classify_point({2, {0.0, 2.0}}, 1e-9);
        CHECK(label.r() == 1);
        CHECK(label.mult_cx == std::vector<int>{1});
    }
}

TEST_CASE("discriminant") {
    CHECK(std::abs(discriminant({2, {2.0, 1.0}})) < 1e-9);
    CHECK(discriminant({2, {3.0, 2.0}}) == doctest::Approx(1.0));

    SUBCASE("closed form cross-checks") {
        Rng rng(31);
        for (int i = 0; i < 50; ++i) {
            const double s1 = rng.uniform(-2, 2), s2 = rng.uniform(-2, 2);
            CHECK(discriminant({2, {s1, s2}}) ==
                  doctest::Approx(s1 * s1 - 4 * s2).epsilon(1e-8));
            const double s3 = rng.uniform(-2, 2);
            const double expected = s1 * s1 * s2 * s2 - 4 * s2 * s2 * s2 - 4 * s1 * s1 * s1 * s3 -
                                    27 * s3 * s3 + 18 * s1 * s2 * s3;
            CHECK(discriminant({3, {s1, s2, s3}}) == doctest::Approx(expected).epsilon(1e-6));
        }
    }
    SUBCASE("positive for simple real-rooted polynomials") {
        Rng rng(77);
        for (int i = 0; i < 50; ++i) {
            std::vector<double> roots{rng.uniform(-2, -0.7), rng.uniform(-0.5, 0.5),
                                      rng.uniform(0.7, 2)};
            CHECK(discriminant(stability_point(roots)) > 0.0);
        }
    }
    SUBCASE("zero iff a cluster has multiplicity >= 2") {
        CHECK(std::abs(discriminant(stability_point(std::vector<double>{0.3, 0.3, -1.5}))) < 1e-9);
        CHECK(std::abs(discriminant(stability_point(std::vector<double>{0.3, 0.8, -1.5}))) > 1e-6);
    }
}

TEST_CASE("gamma_eval") {
    SUBCASE("n=2 closed form: P_a = a^2 - a x + y") {
        Rng rng(3);
        for (int i = 0; i < 30; ++i) {
            const double a = rng.uniform(-2, 2), x = rng.uniform(-3, 3), y = rng.uniform(-3, 3);
            const auto [p, dp] = gamma_eval(a, {2, {x, y}});
            CHECK(p == doctest::Approx(a * a - a * x + y).epsilon(1e-12));
            CHECK(dp == doctest::Approx(2 * a - x).epsilon(1e-12));
        }
    }
    SUBCASE("vanishing at roots, and with derivative at double roots") {
        const auto pt = stability_point(std::vector<double>{0.4, 1.7});
        CHECK(std::abs(gamma_eval(0.4, pt)[0]) < 1e-12);
        const auto dbl = stability_point(std::vector<double>{0.4, 0.4});
        const auto [p, dp] = gamma_eval(0.4, dbl);
        CHECK(std::abs(p) < 1e-12);
        CHECK(std::abs(dp) < 1e-12);
    }
    SUBCASE("linear in the s-coordinates") {
        Rng rng(9);
        for (int i = 0; i < 30; ++i) {
            const double a = rng.uniform(-2, 2), w = rng.uniform(0, 1);
            StabilityPoint p1{3, {rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2)}};
            StabilityPoint p2{3, {rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2)}};
            StabilityPoint mix{3,
                               {w * p1.s[0] + (1 - w) * p2.s[0], w * p1.s[1] + (1 - w) * p2.s[1],
                                w * p1.s[2] + (1 - w) * p2.s[2]}};
            CHECK(gamma_eval(a, mix)[0] ==
                  doctest::Approx(w * gamma_eval(a, p1)[0] + (1 - w) * gamma_eval(a, p2)[0])
                      .epsilon(1e-12));
        }
    }
}

TEST_CASE("bifurcation lines") {
    const auto g1 = bifurcation_line_2d(BifKind::elliptic, 0.0);
    CHECK(g1.slope == doctest::Approx(1.0));
    CHECK(g1.intercept == doctest::Approx(-1.0));
    CHECK(g1.tangency[0] == doctest::Approx(2.0));
    CHECK(g1.tangency[1] == doctest::Approx(1.0));

    const auto gm = bifurcation_line_2d(BifKind::elliptic, 0.5);
    CHECK(gm.slope == doctest::Approx(-1.0));
    CHECK(gm.intercept == doctest::Approx(-1.0));

    const auto gh = bifurcation_line_2d(BifKind::hyperbolic, 2.0);
    CHECK(gh.slope == doctest::Approx(1.25));
    CHECK(gh.intercept == doctest::Approx(-1.5625));

    SUBCASE("tangency to the parabola") {
        Rng rng(15);
        for (int i = 0; i < 20; ++i) {
            const auto line = bifurcation_line_2d(BifKind::elliptic, rng.uniform(0, 1));
            const double x  = line.tangency[0];
            CHECK(line.slope * x + line.intercept == doctest::Approx(x * x / 4.0).epsilon(1e-12));
            // one-sided: the line never goes above the parabola
            for (double dx : {-1.0, -0.3, 0.3, 1.0}) {
                const double xx = x + dx;
                CHECK(line.slope * xx + line.intercept <= xx * xx / 4.0 + 1e-12);
            }
        }
    }
}

TEST_CASE("depressed cubic") {
    const auto zero = depressed_cubic(0, 0, 0);
    CHECK(zero.q == 0.0);
    CHECK(zero.p == 0.0);
    CHECK(zero.delta == 0.0);

    SUBCASE("triple root gives delta = 0") {
        const double rho = 0.7;
        // -(x - rho)^3 = -x^3 + 3 rho x^2 - 3 rho^2 x + rho^3
        const auto d = depressed_cubic(3 * rho, -3 * rho * rho, rho * rho * rho);
        CHECK(std::abs(d.delta) < 1e-12);
        CHECK(std::abs(d.p) < 1e-12);
        CHECK(std::abs(d.q) < 1e-12);
    }

    SUBCASE("root-shift oracle") {
        // roots of -y^3 + p y + q must equal roots of -x^3 + b x^2 + c x + d
        // shifted by -b/3
        Rng rng(21);
        for (int i = 0; i < 60; ++i) {
            const double b = rng.uniform(-2, 2), c = rng.uniform(-2, 2), d = rng.uniform(-2, 2);
            const auto dep = depressed_cubic(b, c, d);
            // -x^3+bx^2+cx+d = 0  <=>  x^3 - b x^2 - c x - d = 0
            const auto input_roots  = polynomial_roots({1.0, -b, -c, -d});
            const auto output_roots = polynomial_roots({1.0, 0.0, -dep.p, -dep.q});
            std::vector<bool> used(3, false);
            for (const auto& root : input_roots) {
                const cplx shifted = root - b / 3.0;
                double best        = 1e9;
                int best_k         = -1;
                for (int k = 0; k < 3; ++k) {
                    if (used[k]) continue;
                    const double dist = std::abs(output_roots[k] - shifted);
                    if (dist < best) best = dist, best_k = k;
                }
                used[best_k] = true;
                CHECK(best < 1e-9);
            }
        }
    }
}

TEST_CASE("in_stable_region") {
    CHECK(in_stable_region({2, {0.0, -0.5}}, 1e-9));
    CHECK_FALSE(in_stable_region({2, {3.0, 2.0}}, 1e-9));
    CHECK(in_stable_region({2, {2.0, 1.0}}, 1e-6));  // boundary corner
}

TEST_CASE("classification agrees with the spectral decomposition") {
    int count = 0;
    for (int n = 1; n <= 4; ++n)
        for (std::uint64_t i = 0; i < 510; ++i) {
            Rng rng(i * 131 + static_cast<std::uint64_t>(n));
            const Mat a      = rng.gaussian_matrix(n, n);
            const auto spec  = classify_clusters(spectral_decomposition(a, 1e-6));
            const auto point = classify_point(stability_point(a), 1e-6);
            CHECK(spec == point);
            ++count;
        }
    CHECK(count >= 2000);
}

TEST_CASE("the stable region is compact: random rays exit") {
    const StabilityPoint interior{2, {0.2, -0.3}};
    REQUIRE(in_stable_region(interior, 1e-9));
    Rng rng(41);
    for (int i = 0; i < 40; ++i) {
        const double angle = rng.uniform(0, 2 * 3.141592653589793);
        bool exited        = false;
        for (double radius = 0.25; radius < 50.0; radius *= 1.3) {
            StabilityPoint probe{2,
                                 {interior.s[0] + radius * std::cos(angle),
                                  interior.s[1] + radius * std::sin(angle)}};
            if (!in_stable_region(probe, 1e-9)) {
                exited = true;
                break;
            }
        }
        CHECK(exited);
    }
}
