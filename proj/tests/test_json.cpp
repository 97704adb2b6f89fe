#include "gitseq/json_io.hpp"

#include <doctest.h>

using namespace gitseq;
using io::json;

TEST_CASE("matrix and triple round-trips") {
    const auto t = sample_wonenburger(3, 5);
    const auto back = io::triple_from_json(io::triple_to_json(t));
    CHECK((back.a - t.a).norm() == 0.0);
    CHECK((back.b - t.b).norm() == 0.0);
    CHECK((back.c - t.c).norm() == 0.0);

    json broken = io::matrix_to_json(t.a);
    broken["data"].erase(0);
    CHECK_THROWS_AS(io::matrix_from_json(broken), ValidationError);
}

TEST_CASE("stability point round-trip") {
    const StabilityPoint pt{3, {0.5, -1.25, 0.75}};
    CHECK(io::point_from_json(io::point_to_json(pt)) == pt);
}

TEST_CASE("spectral config round-trip") {
    const SpectralConfig cfg{4, {{0.8, 1}}, 0, {{1.2, 1}}, 0, {}, {{1.1, 0.4, 1}}};
    const auto back = io::config_from_json(io::config_to_json(cfg));
    CHECK(back.n == 4);
    REQUIRE(back.neg_hyp.size() == 1);
    CHECK(back.neg_hyp[0].beta == 0.8);
    REQUIRE(back.cx.size() == 1);
    CHECK(back.cx[0].gamma == 0.4);

    json invalid = io::config_to_json(cfg);
    invalid["n"] = 7;  // budget no longer matches
    CHECK_THROWS_AS(io::config_from_json(invalid), ValidationError);
}

TEST_CASE("path round-trips for both payload kinds") {
    MatrixPath wpath;
    wpath.kind = PathKind::wonenburger;
    for (int i = 0; i < 3; ++i) {
        Mat a = Mat::Zero(2, 2);
        a(0, 0) = 0.2 + 0.1 * i;
        a(1, 1) = -0.4;
        wpath.samples.push_back(
            {static_cast<double>(i), WonenburgerTriple{a, Mat::Identity(2, 2),
                                                       a * a - Mat::Identity(2, 2)}});
    }
    const auto wback = io::path_from_json(io::path_to_json(wpath));
    CHECK(wback.kind == PathKind::wonenburger);
    CHECK(wback.samples.size() == 3);
    CHECK(std::get<WonenburgerTriple>(wback.samples[2].payload).a(0, 0) ==
          doctest::Approx(0.4));

    MatrixPath spath;
    spath.kind = PathKind::symplectic;
    for (const auto& s : wpath.samples)
        spath.samples.push_back({s.t, assemble(std::get<WonenburgerTriple>(s.payload))});
    const auto sback = io::path_from_json(io::path_to_json(spath));
    CHECK(sback.kind == PathKind::symplectic);
    CHECK(std::get<Mat>(sback.samples[0].payload).rows() == 4);

    json bad = io::path_to_json(wpath);
    bad["kind"] = "mystery";
    CHECK_THROWS_AS(io::path_from_json(bad), ValidationError);
}

TEST_CASE("signature pair parsing") {
    CHECK(io::parse_signature_pairs("(2,0)") == SignatureAssignment{{2, 0}});
    CHECK(io::parse_signature_pairs("(1,0),(0,1)") == SignatureAssignment{{1, 0}, {0, 1}});
    CHECK(io::parse_signature_pairs(" ( 2 , 1 ) ") == SignatureAssignment{{2, 1}});
    CHECK(io::parse_signature_pairs("").empty());
    CHECK_THROWS_AS(io::parse_signature_pairs("(2;0)"), ValidationError);
}

TEST_CASE("event serialization carries the verdict data") {
    Event e;
    e.kind    = EventKind::kfold_crossing;
    e.t_lo    = 0.25;
    e.t_hi    = 0.2500001;
    e.a_value = -0.5;
    e.l       = 1;
    e.k       = 3;
    e.pair    = SignPair{1, 1};
    e.verdict = Verdict::admissible;
    const auto j = io::event_to_json(e);
    CHECK(j.at("kind") == "kfold_crossing");
    CHECK(j.at("l") == 1);
    CHECK(j.at("k") == 3);
    CHECK(j.at("pair") == json::array({1, 1}));
    CHECK(j.at("verdict") == "admissible");
}
