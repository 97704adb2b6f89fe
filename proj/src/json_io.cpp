#include "gitseq/json_io.hpp"

#include <sstream>

namespace gitseq::io {

json matrix_to_json(const Mat& m) {
    json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    std::vector<double> data;
    data.reserve(static_cast<std::size_t>(m.size()));
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index k = 0; k < m.cols(); ++k) data.push_back(m(i, k));
    j["data"] = data;
    return j;
}

Mat matrix_from_json(const json& j) {
    const auto rows = j.at("rows").get<Eigen::Index>();
    const auto cols = j.at("cols").get<Eigen::Index>();
    const auto data = j.at("data").get<std::vector<double>>();
    if (rows < 1 || cols < 1 || static_cast<Eigen::Index>(data.size()) != rows * cols)
        throw ValidationError("matrix JSON: data length does not match rows*cols");
    Mat m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
        for (Eigen::Index k = 0; k < cols; ++k)
            m(i, k) = data[static_cast<std::size_t>(i * cols + k)];
    return m;
}

json triple_to_json(const WonenburgerTriple& t) {
    json j;
    j["n"] = t.dof();
    j["A"] = matrix_to_json(t.a);
    j["B"] = matrix_to_json(t.b);
    j["C"] = matrix_to_json(t.c);
    return j;
}

WonenburgerTriple triple_from_json(const json& j) {
    WonenburgerTriple t{matrix_from_json(j.at("A")), matrix_from_json(j.at("B")),
                        matrix_from_json(j.at("C"))};
    const auto n = j.at("n").get<int>();
    if (t.a.rows() != n || t.a.cols() != n || t.b.rows() != n || t.c.rows() != n)
        throw ValidationError("triple JSON: block sizes do not match n");
    return t;
}

json sign_pair_to_json(const SignPair& p) { return json::array({p.p, p.q}); }

json signature_to_json(const Signature& s) {
    json arr = json::array();
    for (const auto& entry : s) {
        json e;
        e["class"] = to_string(entry.cls);
        e["value"] = entry.value;
        e["p"]     = entry.pair.p;
        e["q"]     = entry.pair.q;
        arr.push_back(e);
    }
    return arr;
}

json point_to_json(const StabilityPoint& p) {
    json j;
    j["n"] = p.n;
    j["s"] = p.s;
    return j;
}

StabilityPoint point_from_json(const json& j) {
    StabilityPoint p{j.at("n").get<int>(), j.at("s").get<std::vector<double>>()};
    if (static_cast<int>(p.s.size()) != p.n)
        throw ValidationError("stability point JSON: s length does not match n");
    return p;
}

json region_to_json(const RegionLabel& r) {
    json j;
    j["k"]        = r.k();
    j["l"]        = r.l();
    j["m"]        = r.m();
    j["r"]        = r.r();
    j["mult_neg"] = r.mult_neg;
    j["M_minus"]  = r.m_minus;
    j["mult_ell"] = r.mult_ell;
    j["M_plus"]   = r.m_plus;
    j["mult_pos"] = r.mult_pos;
    j["mult_cx"]  = r.mult_cx;
    return j;
}

json config_to_json(const SpectralConfig& c) {
    json j;
    j["n"] = c.n;
    json neg = json::array(), ell = json::array(), pos = json::array(), cx = json::array();
    for (const auto& h : c.neg_hyp) neg.push_back({{"beta", h.beta}, {"mult", h.mult}});
    for (const auto& e : c.ell) ell.push_back({{"theta", e.theta}, {"mult", e.mult}});
    for (const auto& h : c.pos_hyp) pos.push_back({{"beta", h.beta}, {"mult", h.mult}});
    for (const auto& x : c.cx)
        cx.push_back({{"r", x.r}, {"gamma", x.gamma}, {"mult", x.mult}});
    j["neg_hyp"] = neg;
    j["M_minus"] = c.m_minus;
    j["ell"]     = ell;
    j["M_plus"]  = c.m_plus;
    j["pos_hyp"] = pos;
    j["cx"]      = cx;
    return j;
}

SpectralConfig config_from_json(const json& j) {
    SpectralConfig c;
    c.n       = j.at("n").get<int>();
    c.m_minus = j.value("M_minus", 0);
    c.m_plus  = j.value("M_plus", 0);
    for (const auto& h : j.value("neg_hyp", json::array()))
        c.neg_hyp.push_back({h.at("beta").get<double>(), h.at("mult").get<int>()});
    for (const auto& e : j.value("ell", json::array()))
        c.ell.push_back({e.at("theta").get<double>(), e.at("mult").get<int>()});
    for (const auto& h : j.value("pos_hyp", json::array()))
        c.pos_hyp.push_back({h.at("beta").get<double>(), h.at("mult").get<int>()});
    for (const auto& x : j.value("cx", json::array()))
        c.cx.push_back(
            {x.at("r").get<double>(), x.at("gamma").get<double>(), x.at("mult").get<int>()});
    c.validate();
    return c;
}

json path_to_json(const MatrixPath& p) {
    json j;
    j["kind"]    = p.kind == PathKind::wonenburger ? "wonenburger" : "symplectic";
    json samples = json::array();
    for (const auto& sample : p.samples) {
        json s;
        s["t"] = sample.t;
        if (const auto* triple = std::get_if<WonenburgerTriple>(&sample.payload))
            s["payload"] = triple_to_json(*triple);
        else
            s["payload"] = matrix_to_json(std::get<Mat>(sample.payload));
        samples.push_back(s);
    }
    j["samples"] = samples;
    return j;
}

MatrixPath path_from_json(const json& j) {
    MatrixPath p;
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "wonenburger")
        p.kind = PathKind::wonenburger;
    else if (kind == "symplectic")
        p.kind = PathKind::symplectic;
    else
        throw ValidationError("path JSON: kind must be wonenburger or symplectic");
    for (const auto& s : j.at("samples")) {
        PathSample sample;
        sample.t = s.at("t").get<double>();
        if (p.kind == PathKind::wonenburger)
            sample.payload = triple_from_json(s.at("payload"));
        else
            sample.payload = matrix_from_json(s.at("payload"));
        p.samples.push_back(std::move(sample));
    }
    return p;
}

json event_to_json(const Event& e) {
    json j;
    j["kind"]     = to_string(e.kind);
    j["interval"] = json::array({e.t_lo, e.t_hi});
    if (e.kind == EventKind::eigenvalue_pm1_crossing || e.kind == EventKind::kfold_crossing) {
        j["value"] = e.a_value;
        j["l"]     = e.l;
        j["k"]     = e.k;
    }
    if (e.pair) j["pair"] = sign_pair_to_json(*e.pair);
    j["verdict"] = to_string(e.verdict);
    if (!e.from.empty()) {
        j["from"] = e.from;
        j["to"]   = e.to;
    }
    return j;
}

json trace_to_json(const std::vector<TracePoint>& pts) {
    json arr = json::array();
    for (const auto& pt : pts) {
        json j;
        j["t"]      = pt.t;
        j["point"]  = point_to_json(pt.point);
        j["region"] = region_to_json(pt.region);
        arr.push_back(j);
    }
    return arr;
}

json poset_to_json(const StratumPoset& p) {
    json j;
    json nodes = json::array();
    for (const auto& n : p.nodes) nodes.push_back({{"label", n.label}, {"dim", n.dim}});
    j["nodes"]    = nodes;
    json covers   = json::array();
    for (const auto& [lo, hi] : p.covers) covers.push_back(json::array({lo, hi}));
    j["covers"]   = covers;
    j["f_vector"] = p.f_vector();
    return j;
}

json quotient_to_json(const QuotientResult& q) {
    json j;
    j["poset"]     = poset_to_json(q.poset);
    json collapsed = json::array();
    for (const auto& rec : q.collapsed)
        collapsed.push_back(
            {{"face", rec.face}, {"old_dim", rec.old_dim}, {"new_dim", rec.new_dim}});
    j["collapsed"] = collapsed;
    return j;
}

json degrees_to_json(const Degrees& d) {
    json j;
    j["top"]      = d.top;
    j["middle"]   = d.middle;
    j["relative"] = d.relative;
    return j;
}

SignatureAssignment parse_signature_pairs(const std::string& text) {
    SignatureAssignment pairs;
    std::size_t pos = 0;
    while (pos < text.size()) {
        const auto open = text.find('(', pos);
        if (open == std::string::npos) break;
        const auto comma = text.find(',', open);
        const auto close = text.find(')', open);
        if (comma == std::string::npos || close == std::string::npos || comma > close)
            throw ValidationError("signature string: expected pairs like (2,0),(1,1)");
        pairs.push_back({std::stoi(text.substr(open + 1, comma - open - 1)),
                         std::stoi(text.substr(comma + 1, close - comma - 1))});
        pos = close + 1;
    }
    if (pairs.empty() && text.find('(') != std::string::npos)
        throw ValidationError("signature string: could not parse any pair");
    return pairs;
}

}  // namespace gitseq::io
