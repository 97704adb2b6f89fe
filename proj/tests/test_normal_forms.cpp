#include "gitseq/normal_forms.hpp"

#include <doctest.h>

#include <cmath>

using namespace gitseq;

namespace {
constexpr double kPi = 3.141592653589793238462643;
}

TEST_CASE("rotation-dilation and S blocks") {
    const Mat r = rotation_dilation_block(1.0, kPi / 2.0);
    CHECK(r(0, 0) == doctest::Approx(0.0));
    CHECK(r(0, 1) == doctest::Approx(-1.0));
    CHECK(r(1, 0) == doctest::Approx(1.0));

    const Mat s = s_block(1.0, kPi / 2.0);
    CHECK(s(0, 0) == doctest::Approx(-2.0));
    CHECK(s(0, 1) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(s(1, 1) == doctest::Approx(2.0));

    SUBCASE("R^2 - diag(1,-1) S = 1") {
        Rng rng(8);
        Mat flip(2, 2);
        flip << 1, 0, 0, -1;
        for (int i = 0; i < 30; ++i) {
            const double rr = rng.uniform(0.3, 2.0), gg = rng.uniform(0.05, kPi - 0.05);
            const Mat lhs = rotation_dilation_block(rr, gg) * rotation_dilation_block(rr, gg) -
                            flip * s_block(rr, gg);
            CHECK((lhs - Mat::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-12);
        }
    }
}

TEST_CASE("enumerate_signatures") {
    SUBCASE("one elliptic cluster of multiplicity two") {
        SpectralConfig cfg{2, {}, 0, {{1.0, 2}}, 0, {}, {}};
        const auto sigs = enumerate_signatures(cfg);
        REQUIRE(sigs.size() == 3);
        CHECK(sigs[0] == SignatureAssignment{{2, 0}});
        CHECK(sigs[1] == SignatureAssignment{{1, 1}});
        CHECK(sigs[2] == SignatureAssignment{{0, 2}});
    }
    SUBCASE("two simple elliptic clusters") {
        SpectralConfig cfg{2, {}, 0, {{2.0, 1}, {1.0, 1}}, 0, {}, {}};
        CHECK(enumerate_signatures(cfg).size() == 4);
    }
    SUBCASE("complex quadruple: one empty assignment") {
        SpectralConfig cfg{2, {}, 0, {}, 0, {}, {{1.1, 0.4, 1}}};
        const auto sigs = enumerate_signatures(cfg);
        REQUIRE(sigs.size() == 1);
        CHECK(sigs[0].empty());
    }
    SUBCASE("+-1 clusters carry no signature slot") {
        SpectralConfig cfg{3, {}, 1, {{1.0, 1}}, 1, {}, {}};
        const auto sigs = enumerate_signatures(cfg);
        CHECK(sigs.size() == 2);
        CHECK(sigs[0].size() == 1);
    }
}

TEST_CASE("normal_form block structure") {
    SUBCASE("1-dof elliptic") {
        SpectralConfig cfg{1, {}, 0, {{0.9, 1}}, 0, {}, {}};
        const auto t = normal_form(cfg, {{1, 0}});
        CHECK(t.a(0, 0) == doctest::Approx(std::cos(0.9)));
        CHECK(t.b(0, 0) == doctest::Approx(std::sin(0.9)));
        CHECK(t.c(0, 0) == doctest::Approx(-std::sin(0.9)));
    }
    SUBCASE("appendix form with (c,d) = (0,2)") {
        SpectralConfig cfg{2, {}, 0, {{kPi / 3, 2}}, 0, {}, {}};
        const auto t = normal_form(cfg, {{0, 2}});
        CHECK((t.a - std::cos(kPi / 3) * Mat::Identity(2, 2)).norm() < 1e-15);
        CHECK((t.b + std::sin(kPi / 3) * Mat::Identity(2, 2)).norm() < 1e-15);
        CHECK((t.c - std::sin(kPi / 3) * Mat::Identity(2, 2)).norm() < 1e-15);
    }
    SUBCASE("complex pair") {
        SpectralConfig cfg{2, {}, 0, {}, 0, {}, {{1.1, 0.4, 1}}};
        const auto t = normal_form(cfg, {});
        CHECK((t.a - rotation_dilation_block(1.1, 0.4)).norm() < 1e-15);
        CHECK(t.b(0, 0) == 1.0);
        CHECK(t.b(1, 1) == -1.0);
        CHECK((t.c - s_block(1.1, 0.4)).norm() < 1e-15);
        CHECK(validate_wonenburger(t, 1e-12).empty());
    }
    SUBCASE("point stratum: A = -1 on M- and +1 on M+") {
        SpectralConfig cfg{3, {}, 2, {}, 1, {}, {}};
        const auto t = normal_form(cfg, {});
        CHECK(t.a(0, 0) == -1.0);
        CHECK(t.a(1, 1) == -1.0);
        CHECK(t.a(2, 2) == 1.0);
        CHECK(t.b.norm() == 0.0);
        CHECK(validate_wonenburger(t, 1e-12).empty());
    }
}

TEST_CASE("invalid configurations and assignments are rejected") {
    CHECK_THROWS_AS((SpectralConfig{1, {}, 0, {{0.0, 1}}, 0, {}, {}}).validate(), ValidationError);
    CHECK_THROWS_AS((SpectralConfig{1, {}, 0, {}, 0, {{0.0, 1}}, {}}).validate(), ValidationError);
    CHECK_THROWS_AS((SpectralConfig{4, {}, 0, {}, 0, {}, {{1.1, .4, 1}, {1.1, .4, 1}}}).validate(),
                    ValidationError);
    CHECK_THROWS_AS((SpectralConfig{3, {}, 0, {{1.0, 2}}, 0, {}, {}}).validate(),
                    ValidationError);  // multiplicities sum to 2, not 3

    SpectralConfig cfg{2, {}, 0, {{1.0, 2}}, 0, {}, {}};
    CHECK_THROWS_AS(normal_form(cfg, {{1, 0}}), ValidationError);               // wrong pair sum
    CHECK_THROWS_AS(normal_form(cfg, {{2, 0}, {1, 0}}), ValidationError);       // wrong length
}

TEST_CASE("roundtrip: classification and signature recover the configuration") {
    struct Case {
        SpectralConfig cfg;
    };
    std::vector<SpectralConfig> cases{
        {1, {}, 0, {{0.9, 1}}, 0, {}, {}},
        {2, {}, 0, {{2.0, 1}, {0.9, 1}}, 0, {}, {}},
        {2, {}, 0, {{0.9, 2}}, 0, {}, {}},
        {3, {{0.8, 1}}, 0, {{0.9, 1}}, 0, {{0.5, 1}}, {}},
        {3, {}, 1, {{0.9, 2}}, 0, {}, {}},
        {4, {}, 0, {{0.9, 2}}, 0, {}, {{1.1, 0.4, 1}}},
        {4, {{0.9, 2}}, 0, {}, 2, {}, {}},
        {4, {}, 0, {}, 0, {}, {{1.1, 0.4, 2}}},
        {4, {}, 0, {{2.0, 1}, {1.2, 2}}, 1, {}, {}},
    };
    for (const auto& cfg : cases) {
        cfg.validate();
        const auto expected_region = cfg.region();
        for (const auto& sig : enumerate_signatures(cfg)) {
            const auto t = normal_form(cfg, sig);
            CHECK(validate_wonenburger(t, 1e-10).empty());

            const auto spec = spectral_decomposition(t.a, 1e-8);
            CHECK(classify_clusters(spec) == expected_region);

            std::size_t slot = 0;
            for (const auto& cluster : spec.real_clusters) {
                if (cluster.value == 1.0 || cluster.value == -1.0) continue;
                CHECK(b_signature(t, cluster.value, BlockKind::b_block, 1e-8) == sig[slot]);
                ++slot;
            }
            CHECK(slot == sig.size());
        }
    }
}

TEST_CASE("complex pairs force a mixed B summand") {
    SpectralConfig cfg{4, {}, 0, {{0.9, 2}}, 0, {}, {{1.3, 0.7, 1}}};
    const auto t = normal_form(cfg, {{2, 0}});
    // the trailing 2x2 block of B is diag(1,-1): indefinite as a form
    const Mat tail = t.b.bottomRightCorner(2, 2);
    CHECK(tail(0, 0) * tail(1, 1) < 0.0);
}
