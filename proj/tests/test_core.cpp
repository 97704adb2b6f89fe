#include "gitseq/core.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>

using namespace gitseq;

namespace {

Mat planar_rotation(double theta) {
    Mat m(2, 2);
    m << std::cos(theta), std::sin(theta), -std::sin(theta), std::cos(theta);
    return m;
}

WonenburgerTriple one_dof_elliptic(double theta, double delta) {
    Mat a(1, 1), b(1, 1), c(1, 1);
    a << std::cos(theta);
    b << delta * std::sin(theta);
    c << -delta * std::sin(theta);
    return {a, b, c};
}

}  // namespace

TEST_CASE("standard J") {
    const Mat j1 = standard_j(1);
    CHECK(j1(0, 0) == 0.0);
    CHECK(j1(0, 1) == 1.0);
    CHECK(j1(1, 0) == -1.0);
    CHECK(j1(1, 1) == 0.0);
    for (int n = 1; n <= 3; ++n) {
        const Mat j = standard_j(n);
        CHECK((j * j + Mat::Identity(2 * n, 2 * n)).norm() == 0.0);
        CHECK((j.transpose() + j).norm() == 0.0);
    }
}

TEST_CASE("is_symplectic") {
    CHECK(is_symplectic(Mat::Identity(2, 2), 1e-12));
    CHECK(is_symplectic(planar_rotation(0.7), 1e-12));
    Mat d(2, 2);
    d << 2, 0, 0, 3;
    CHECK_FALSE(is_symplectic(d, 1e-8));
    CHECK_THROWS_AS(is_symplectic(Mat::Identity(3, 3), 1e-8), ValidationError);
}

TEST_CASE("validate_wonenburger") {
    WonenburgerTriple id{Mat::Identity(2, 2), Mat::Zero(2, 2), Mat::Zero(2, 2)};
    CHECK(validate_wonenburger(id, 1e-12).empty());

    CHECK(validate_wonenburger(one_dof_elliptic(1.0, 1.0), 1e-12).empty());

    WonenburgerTriple bad = id;
    bad.b(0, 1)           = 0.3;  // break symmetry only
    const auto violated   = validate_wonenburger(bad, 1e-8);
    CHECK(std::find(violated.begin(), violated.end(), "B_symmetric") != violated.end());

    WonenburgerTriple mismatched{Mat::Identity(2, 2), Mat::Zero(3, 3), Mat::Zero(2, 2)};
    CHECK_THROWS_AS(validate_wonenburger(mismatched, 1e-8), ValidationError);
}

TEST_CASE("assemble") {
    WonenburgerTriple id1{Mat::Identity(1, 1), Mat::Zero(1, 1), Mat::Zero(1, 1)};
    CHECK((assemble(id1) - Mat::Identity(2, 2)).norm() == 0.0);

    // (cos, -sin, sin) assembles to the planar rotation with upper-right -sin
    const double theta = 0.9;
    const auto t       = one_dof_elliptic(theta, -1.0);
    const Mat m        = assemble(t);
    CHECK(m(0, 0) == doctest::Approx(std::cos(theta)));
    CHECK(m(0, 1) == doctest::Approx(-std::sin(theta)));
    CHECK(m(1, 0) == doctest::Approx(std::sin(theta)));

    // appendix 4x4: A = cos 1, B = -sin 1, C = sin 1
    const double c = std::cos(1.0), s = std::sin(1.0);
    WonenburgerTriple app{c * Mat::Identity(2, 2), -s * Mat::Identity(2, 2),
                          s * Mat::Identity(2, 2)};
    const Mat m4 = assemble(app);
    CHECK(m4(0, 2) == doctest::Approx(-s));
    CHECK(m4(2, 0) == doctest::Approx(s));
    CHECK(m4(1, 3) == doctest::Approx(-s));
    CHECK(is_symplectic(m4, 1e-12));

    WonenburgerTriple invalid{Mat::Identity(2, 2), Mat::Zero(2, 2), Mat::Zero(2, 2)};
    invalid.b(0, 1) = 0.5;
    CHECK_THROWS_AS(assemble(invalid), ValidationError);
}

TEST_CASE("change_basis") {
    const auto t = sample_wonenburger(2, 7);

    SUBCASE("identity leaves the triple unchanged") {
        const auto same = change_basis(t, Mat::Identity(2, 2));
        CHECK((same.a - t.a).norm() == 0.0);
        CHECK((same.b - t.b).norm() == 0.0);
        CHECK((same.c - t.c).norm() == 0.0);
    }

    SUBCASE("result is valid and preserves the A spectrum") {
        Rng rng(11);
        const Mat r       = rng.gaussian_matrix(2, 2);
        const auto mapped = change_basis(t, r);
        CHECK(validate_wonenburger(mapped, 1e-8).empty());
        const auto before = spectral_decomposition(t.a, 1e-6);
        const auto after  = spectral_decomposition(mapped.a, 1e-6);
        REQUIRE(before.real_clusters.size() == after.real_clusters.size());
        for (std::size_t i = 0; i < before.real_clusters.size(); ++i)
            CHECK(before.real_clusters[i].value ==
                  doctest::Approx(after.real_clusters[i].value).epsilon(1e-9));
    }

    SUBCASE("group action: R2*(R1*t) = (R2 R1)*t") {
        Rng rng(13);
        const Mat r1 = rng.gaussian_matrix(2, 2), r2 = rng.gaussian_matrix(2, 2);
        const auto stepwise = change_basis(change_basis(t, r1), r2);
        const auto direct   = change_basis(t, Mat(r2 * r1));
        CHECK((stepwise.a - direct.a).cwiseAbs().maxCoeff() < 1e-10);
        CHECK((stepwise.b - direct.b).cwiseAbs().maxCoeff() < 1e-10);
        CHECK((stepwise.c - direct.c).cwiseAbs().maxCoeff() < 1e-10);
    }

    SUBCASE("singular R is rejected") {
        CHECK_THROWS_AS(change_basis(t, Mat::Zero(2, 2)), ValidationError);
    }
}

TEST_CASE("stability index") {
    CHECK(std::abs(stability_index(cplx(0, 1))) < 1e-15);
    CHECK(stability_index(cplx(1, 0)) == cplx(1, 0));
    CHECK(stability_index(cplx(2, 0)) == cplx(1.25, 0));
    CHECK_THROWS_AS(stability_index(cplx(0, 0)), ValidationError);
}

TEST_CASE("eigenvalue_from_index") {
    CHECK(std::abs(eigenvalue_from_index(cplx(0, 0)) - cplx(0, 1)) < 1e-15);
    CHECK(std::abs(eigenvalue_from_index(cplx(1.25, 0)) - cplx(2, 0)) < 1e-12);
    const double a = std::cos(0.7);
    CHECK(std::abs(eigenvalue_from_index(cplx(a, 0)) - std::polar(1.0, 0.7)) < 1e-12);
    CHECK(eigenvalue_from_index(cplx(1, 0)) == cplx(1, 0));
    CHECK(eigenvalue_from_index(cplx(-1, 0)) == cplx(-1, 0));

    SUBCASE("roundtrip and principal conventions") {
        Rng rng(5);
        for (int i = 0; i < 200; ++i) {
            cplx a_val;
            switch (i % 3) {
                case 0: a_val = cplx(rng.uniform(-0.999, 0.999), 0.0); break;
                case 1: a_val = cplx((rng.uniform() < 0.5 ? -1 : 1) * rng.uniform(1.001, 4.0), 0.0); break;
                default: a_val = cplx(rng.uniform(-2, 2), rng.uniform(0.05, 2.0)); break;
            }
            const cplx lambda = eigenvalue_from_index(a_val);
            CHECK(std::abs(stability_index(lambda) - a_val) < 1e-12);
            if (a_val.imag() == 0.0 && std::abs(a_val.real()) < 1.0)
                CHECK(lambda.imag() > 0.0);
            else
                CHECK(std::abs(lambda) > 1.0);
        }
    }
}

TEST_CASE("spectral decomposition") {
    SUBCASE("identity") {
        const auto spec = spectral_decomposition(Mat::Identity(3, 3), 1e-8);
        REQUIRE(spec.real_clusters.size() == 1);
        CHECK(spec.real_clusters[0].value == 1.0);
        CHECK(spec.real_clusters[0].mult == 3);
        CHECK(spec.total() == 3);
    }
    SUBCASE("designed cluster") {
        Mat d         = Mat::Zero(3, 3);
        d(0, 0)       = 0.2;
        d(1, 1)       = 0.2 + 1e-12;
        d(2, 2)       = 5.0;
        const auto spec = spectral_decomposition(d, 1e-8);
        REQUIRE(spec.real_clusters.size() == 2);
        CHECK(spec.real_clusters[0].value == doctest::Approx(0.2));
        CHECK(spec.real_clusters[0].mult == 2);
        CHECK(spec.real_clusters[1].value == doctest::Approx(5.0));
        CHECK(spec.real_clusters[1].mult == 1);
    }
    SUBCASE("rotation-dilation block") {
        Mat block(2, 2);
        const double r = 1.1, g = 0.4;
        block << r * std::cos(g), -r * std::sin(g), r * std::sin(g), r * std::cos(g);
        const auto spec = spectral_decomposition(block, 1e-8);
        CHECK(spec.real_clusters.empty());
        REQUIRE(spec.complex_clusters.size() == 1);
        CHECK(std::abs(spec.complex_clusters[0].value - std::polar(r, g)) < 1e-12);
        CHECK(spec.complex_clusters[0].mult == 1);
    }
    SUBCASE("snap to +-1") {
        Mat d   = Mat::Zero(2, 2);
        d(0, 0) = 1.0 + 1e-9;
        d(1, 1) = 0.5;
        const auto spec = spectral_decomposition(d, 1e-6);
        REQUIRE(spec.real_clusters.size() == 2);
        CHECK(spec.real_clusters[1].value == 1.0);
    }
}

TEST_CASE("sampler") {
    SUBCASE("n=1 closed form") {
        const auto t = sample_wonenburger(1, 3);
        CHECK(t.b(0, 0) != 0.0);
        CHECK(t.c(0, 0) ==
              doctest::Approx((t.a(0, 0) * t.a(0, 0) - 1.0) / t.b(0, 0)).epsilon(1e-10));
    }
    SUBCASE("validity and symplecticity across sizes") {
        for (int n = 1; n <= 4; ++n)
            for (std::uint64_t seed : {7ULL, 42ULL, 99ULL}) {
                const auto t = sample_wonenburger(n, seed);
                CHECK(validate_wonenburger(t, 1e-8).empty());
                CHECK(is_symplectic(assemble(t), 1e-8));
            }
    }
    SUBCASE("deterministic in seed") {
        const auto t1 = sample_wonenburger(3, 2024);
        const auto t2 = sample_wonenburger(3, 2024);
        CHECK((t1.a - t2.a).norm() == 0.0);
        CHECK((t1.b - t2.b).norm() == 0.0);
    }
    SUBCASE("eigenvalues of M are lambda(a), 1/lambda(a)") {
        const auto t = sample_wonenburger(3, 17);
        const Mat m  = assemble(t);
        Eigen::EigenSolver<Mat> ms(m, false), as(t.a, false);
        std::vector<cplx> expected;
        for (int i = 0; i < 3; ++i) {
            const cplx lambda = eigenvalue_from_index(as.eigenvalues()(i));
            expected.push_back(lambda);
            expected.push_back(1.0 / lambda);
        }
        std::vector<bool> used(6, false);
        for (int i = 0; i < 6; ++i) {
            double best    = 1e9;
            int best_k     = -1;
            for (int k = 0; k < 6; ++k) {
                if (used[k]) continue;
                const double d = std::abs(ms.eigenvalues()(i) - expected[k]);
                if (d < best) best = d, best_k = k;
            }
            used[best_k] = true;
            CHECK(best < 1e-6);
        }
    }
}

TEST_CASE("perturbation") {
    const double theta = 1.1;
    Mat a              = std::cos(theta) * Mat::Identity(2, 2);
    Mat b(2, 2), c(2, 2);
    b << std::sin(theta), 0, 0, -std::sin(theta);
    c = -b;
    const WonenburgerTriple t{a, b, c};
    REQUIRE(validate_wonenburger(t, 1e-12).empty());

    SUBCASE("eps = 0 returns the input") {
        const auto same = perturb_wonenburger(t, 0.0, 1);
        CHECK((same.a - t.a).norm() == 0.0);
    }
    SUBCASE("valid, bounded, spectrum moves at most O(sqrt(eps))") {
        const double eps = 1e-3;
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            const auto moved = perturb_wonenburger(t, eps, seed);
            CHECK(validate_wonenburger(moved, 1e-8).empty());
            CHECK((moved.a - t.a).norm() <= eps * (1.0 + 1e-12));
            Eigen::EigenSolver<Mat> es(moved.a, false);
            for (int i = 0; i < 2; ++i)
                CHECK(std::abs(es.eigenvalues()(i) - cplx(std::cos(theta), 0.0)) <
                      5.0 * std::sqrt(eps));
        }
    }
}
