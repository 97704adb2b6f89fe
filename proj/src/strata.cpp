#include "gitseq/strata.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace gitseq {

Degrees degrees(const RegionLabel& region) {
    auto product = [](const std::vector<int>& mults) {
        long acc = 1;
        for (int m : mults) acc *= (m + 1);
        return acc;
    };
    const long hyp = product(region.mult_neg) * product(region.mult_pos);
    const long ell = product(region.mult_ell);
    return {hyp * ell, ell, hyp};
}

int stratum_dimension(const RegionLabel& region) {
    return region.k() + region.l() + region.m() + 2 * region.r();
}

std::vector<int> basic_contraction(const std::vector<int>& tuple, int j) {
    if (j < 0 || j + 1 >= static_cast<int>(tuple.size()))
        throw ValidationError("basic_contraction: index out of range");
    std::vector<int> out;
    out.reserve(tuple.size() - 1);
    for (int i = 0; i < static_cast<int>(tuple.size()); ++i) {
        if (i == j)
            out.push_back(tuple[i] + tuple[i + 1]);
        else if (i != j + 1)
            out.push_back(tuple[i]);
    }
    return out;
}

int StableNode::total() const {
    return m_minus + std::accumulate(o.begin(), o.end(), 0) + m_plus;
}

std::string StableNode::label() const {
    std::ostringstream os;
    os << m_minus << "|(";
    for (std::size_t i = 0; i < o.size(); ++i) os << (i ? "," : "") << o[i];
    os << ")|" << m_plus;
    return os.str();
}

std::vector<StableNode> contraction_children(const StableNode& node) {
    std::vector<StableNode> children;
    const int l = node.dim();
    for (int j = 0; j + 1 < l; ++j)
        children.push_back({node.m_minus, basic_contraction(node.o, j), node.m_plus});
    if (l >= 1) {
        children.push_back({node.m_minus + node.o.front(),
                            std::vector<int>(node.o.begin() + 1, node.o.end()), node.m_plus});
        children.push_back({node.m_minus, std::vector<int>(node.o.begin(), node.o.end() - 1),
                            node.m_plus + node.o.back()});
    }
    return children;
}

std::set<StableNode> contraction_set(const StableNode& node) {
    std::set<StableNode> closure;
    std::deque<StableNode> frontier{node};
    while (!frontier.empty()) {
        const StableNode current = frontier.front();
        frontier.pop_front();
        for (auto& child : contraction_children(current))
            if (closure.insert(child).second) frontier.push_back(child);
    }
    return closure;
}

int Contraction::mord() const {
    return static_cast<int>(std::count_if(steps.begin(), steps.end(), [](const auto& s) {
        return s.kind == ContractionStep::Kind::middle;
    }));
}

int Contraction::lord() const {
    return static_cast<int>(std::count_if(steps.begin(), steps.end(), [](const auto& s) {
        return s.kind == ContractionStep::Kind::elim_left;
    }));
}

int Contraction::rord() const {
    return static_cast<int>(std::count_if(steps.begin(), steps.end(), [](const auto& s) {
        return s.kind == ContractionStep::Kind::elim_right;
    }));
}

std::vector<SignPair> signature_contraction(const std::vector<SignPair>& pairs,
                                            const Contraction& c) {
    std::vector<SignPair> current = pairs;
    for (const auto& step : c.steps) {
        switch (step.kind) {
            case ContractionStep::Kind::middle: {
                if (step.index < 0 || step.index + 1 >= static_cast<int>(current.size()))
                    throw ValidationError("signature_contraction: middle index out of range");
                current[step.index] = current[step.index] + current[step.index + 1];
                current.erase(current.begin() + step.index + 1);
                break;
            }
            case ContractionStep::Kind::elim_left:
                if (current.empty())
                    throw ValidationError("signature_contraction: nothing to eliminate");
                current.erase(current.begin());
                break;
            case ContractionStep::Kind::elim_right:
                if (current.empty())
                    throw ValidationError("signature_contraction: nothing to eliminate");
                current.pop_back();
                break;
        }
    }
    return current;
}

Signature signature_contraction(const Signature& sig, const Contraction& c) {
    Signature current = sig;
    for (const auto& step : c.steps) {
        switch (step.kind) {
            case ContractionStep::Kind::middle: {
                if (step.index < 0 || step.index + 1 >= static_cast<int>(current.size()))
                    throw ValidationError("signature_contraction: middle index out of range");
                auto& lhs       = current[step.index];
                const auto& rhs = current[step.index + 1];
                if (lhs.cls != rhs.cls)
                    throw ValidationError("signature_contraction: merging across classes");
                lhs.pair  = lhs.pair + rhs.pair;
                lhs.value = 0.5 * (lhs.value + rhs.value);
                current.erase(current.begin() + step.index + 1);
                break;
            }
            case ContractionStep::Kind::elim_left:
                if (current.empty())
                    throw ValidationError("signature_contraction: nothing to eliminate");
                current.erase(current.begin());
                break;
            case ContractionStep::Kind::elim_right:
                if (current.empty())
                    throw ValidationError("signature_contraction: nothing to eliminate");
                current.pop_back();
                break;
        }
    }
    return current;
}

void BranchLabel::validate() const {
    if (pairs.size() != node.o.size())
        throw ValidationError("BranchLabel: one signature pair per cluster required");
    for (std::size_t i = 0; i < pairs.size(); ++i)
        if (pairs[i].p < 0 || pairs[i].q < 0 || pairs[i].p + pairs[i].q != node.o[i])
            throw ValidationError("BranchLabel: pair sum must equal the cluster multiplicity");
}

std::string BranchLabel::label() const {
    std::ostringstream os;
    os << node.label() << ";";
    for (std::size_t i = 0; i < pairs.size(); ++i)
        os << (i ? "," : "") << "(" << pairs[i].p << "," << pairs[i].q << ")";
    return os.str();
}

std::optional<Contraction> branch_adjacent(const BranchLabel& upper, const BranchLabel& lower) {
    upper.validate();
    lower.validate();
    if (upper.node.total() != lower.node.total()) return std::nullopt;
    const int depth = upper.node.dim() - lower.node.dim();
    if (depth <= 0) return std::nullopt;

    struct State {
        BranchLabel branch;
        Contraction path;
    };
    std::deque<State> frontier{{upper, {}}};
    std::set<std::string> visited{upper.label()};

    while (!frontier.empty()) {
        State state = frontier.front();
        frontier.pop_front();
        if (state.branch == lower) return state.path;
        if (state.branch.node.dim() <= lower.node.dim()) continue;

        auto push = [&](BranchLabel next, ContractionStep step) {
            if (!visited.insert(next.label()).second) return;
            Contraction path = state.path;
            path.steps.push_back(step);
            frontier.push_back({std::move(next), std::move(path)});
        };

        const auto& node  = state.branch.node;
        const auto& pairs = state.branch.pairs;
        for (int j = 0; j + 1 < node.dim(); ++j) {
            BranchLabel next{{node.m_minus, basic_contraction(node.o, j), node.m_plus}, pairs};
            next.pairs[j] = next.pairs[j] + next.pairs[j + 1];
            next.pairs.erase(next.pairs.begin() + j + 1);
            push(std::move(next), {ContractionStep::Kind::middle, j});
        }
        if (node.dim() >= 1) {
            BranchLabel left{{node.m_minus + node.o.front(),
                              std::vector<int>(node.o.begin() + 1, node.o.end()), node.m_plus},
                             {pairs.begin() + 1, pairs.end()}};
            push(std::move(left), {ContractionStep::Kind::elim_left, 0});
            BranchLabel right{{node.m_minus, std::vector<int>(node.o.begin(), node.o.end() - 1),
                               node.m_plus + node.o.back()},
                              {pairs.begin(), pairs.end() - 1}};
            push(std::move(right), {ContractionStep::Kind::elim_right, 0});
        }
    }
    return std::nullopt;
}

bool complex_transition_admissible(const BranchLabel& branch, int cluster_index) {
    branch.validate();
    if (cluster_index < 0 || cluster_index >= branch.node.dim())
        throw ValidationError("complex_transition_admissible: cluster index out of range");
    return branch.node.o[cluster_index] >= 2 && !branch.pairs[cluster_index].definite();
}

std::vector<int> StratumPoset::f_vector() const {
    int max_dim = -1;
    for (const auto& n : nodes) max_dim = std::max(max_dim, n.dim);
    std::vector<int> f(max_dim + 1, 0);
    for (const auto& n : nodes) ++f[n.dim];
    return f;
}

void StratumPoset::check_graded() const {
    for (const auto& [lo, hi] : covers)
        if (nodes[hi].dim != nodes[lo].dim + 1)
            throw NumericError("StratumPoset: cover does not raise dimension by one");
}

namespace {

void compositions(int total, std::vector<int>& current,
                  const std::function<void(const std::vector<int>&)>& emit) {
    if (total == 0) {
        emit(current);
        return;
    }
    for (int part = 1; part <= total; ++part) {
        current.push_back(part);
        compositions(total - part, current, emit);
        current.pop_back();
    }
}

}  // namespace

std::vector<StableNode> stable_nodes(int n) {
    if (n < 1) throw ValidationError("stable_nodes: n must be >= 1");
    if (n > 12) throw LimitError("stable_nodes: n > 12 exceeds the enumeration limit");

    std::vector<StableNode> all;
    for (int m_minus = 0; m_minus <= n; ++m_minus)
        for (int m_plus = 0; m_plus + m_minus <= n; ++m_plus) {
            std::vector<int> scratch;
            compositions(n - m_minus - m_plus, scratch, [&](const std::vector<int>& o) {
                all.push_back({m_minus, o, m_plus});
            });
        }
    std::sort(all.begin(), all.end(), [](const StableNode& a, const StableNode& b) {
        return a.dim() != b.dim() ? a.dim() < b.dim() : a.label() < b.label();
    });
    return all;
}

std::vector<BranchLabel> stable_branches(const StableNode& node) {
    std::vector<BranchLabel> out{{node, {}}};
    for (int mult : node.o) {
        std::vector<BranchLabel> next;
        next.reserve(out.size() * (mult + 1));
        for (const auto& prefix : out)
            for (int p = mult; p >= 0; --p) {
                auto extended = prefix;
                extended.pairs.push_back({p, mult - p});
                next.push_back(std::move(extended));
            }
        out = std::move(next);
    }
    return out;
}

StratumPoset stable_region_poset(int n) {
    const auto all = stable_nodes(n);
    StratumPoset poset;
    std::map<std::string, int> index;
    for (const auto& node : all) {
        index[node.label()] = static_cast<int>(poset.nodes.size());
        poset.nodes.push_back({node.label(), node.dim()});
    }
    std::set<std::pair<int, int>> covers;
    for (const auto& node : all)
        for (const auto& child : contraction_children(node))
            covers.insert({index.at(child.label()), index.at(node.label())});
    poset.covers.assign(covers.begin(), covers.end());
    poset.check_graded();
    return poset;
}

namespace {

bool intervals_compatible(const Interval& a, const Interval& b) {
    if (a.hi < b.lo || b.hi < a.lo) return true;                // disjoint
    if (a.lo <= b.lo && b.hi <= a.hi) return true;              // b inside a
    if (b.lo <= a.lo && a.hi <= b.hi) return true;              // a inside b
    return false;
}

std::string letter(int m, int pos) {
    if (pos == 0) return "-1";
    if (pos == m - 1) return "1";
    return "v" + std::to_string(pos);
}

std::string render_range(int m, int lo, int hi, const std::vector<Interval>& face) {
    std::string out;
    int pos = lo;
    while (pos <= hi) {
        // maximal interval starting here and properly inside [lo, hi]
        const Interval* best = nullptr;
        for (const auto& iv : face)
            if (iv.lo == pos && iv.hi <= hi && !(iv.lo == lo && iv.hi == hi))
                if (!best || iv.hi > best->hi) best = &iv;
        if (!out.empty()) out += " ";
        if (best) {
            out += "(" + render_range(m, best->lo, best->hi, face) + ")";
            pos = best->hi + 1;
        } else {
            out += letter(m, pos);
            ++pos;
        }
    }
    return out;
}

std::string face_key(const std::vector<Interval>& face) {
    std::string key;
    for (const auto& iv : face)
        key += std::to_string(iv.lo) + "-" + std::to_string(iv.hi) + ";";
    return key;
}

}  // namespace

std::string face_label(int m, const std::vector<Interval>& face) {
    return render_range(m, 0, m - 1, face);
}

Associahedron associahedron(int m) {
    if (m < 3) throw ValidationError("associahedron: m must be >= 3");
    if (m > 12) throw LimitError("associahedron: m > 12 exceeds the enumeration limit");

    std::vector<Interval> intervals;
    for (int lo = 0; lo < m; ++lo)
        for (int hi = lo + 1; hi < m; ++hi)
            if (!(lo == 0 && hi == m - 1)) intervals.push_back({lo, hi});

    std::vector<std::vector<Interval>> faces;
    std::vector<Interval> current;
    // depth-first over interval indices; `current` stays pairwise compatible
    auto enumerate = [&](auto&& self, std::size_t from) -> void {
        faces.push_back(current);
        for (std::size_t i = from; i < intervals.size(); ++i) {
            bool ok = true;
            for (const auto& held : current)
                if (!intervals_compatible(held, intervals[i])) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            current.push_back(intervals[i]);
            self(self, i + 1);
            current.pop_back();
        }
    };
    enumerate(enumerate, 0);

    for (auto& face : faces) std::sort(face.begin(), face.end());
    // dim ascending (more intervals first), then by key
    std::sort(faces.begin(), faces.end(), [&](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() > b.size() : face_key(a) < face_key(b);
    });

    Associahedron assoc;
    assoc.m     = m;
    assoc.faces = faces;
    std::map<std::string, int> index;
    for (const auto& face : faces) {
        index[face_key(face)] = static_cast<int>(assoc.poset.nodes.size());
        assoc.poset.nodes.push_back(
            {face_label(m, face), m - 2 - static_cast<int>(face.size())});
    }
    for (const auto& face : faces) {
        if (face.empty()) continue;
        for (std::size_t i = 0; i < face.size(); ++i) {
            std::vector<Interval> parent = face;
            parent.erase(parent.begin() + i);
            assoc.poset.covers.emplace_back(index.at(face_key(face)),
                                            index.at(face_key(parent)));
        }
    }
    std::sort(assoc.poset.covers.begin(), assoc.poset.covers.end());
    assoc.poset.check_graded();
    return assoc;
}

StableNode face_to_stable_node(int m, const std::vector<Interval>& face) {
    // maximal intervals are pairwise disjoint; walk the word left to right
    std::vector<Interval> maximal;
    for (const auto& iv : face) {
        bool contained = false;
        for (const auto& other : face)
            if (!(other == iv) && other.lo <= iv.lo && iv.hi <= other.hi) {
                contained = true;
                break;
            }
        if (!contained) maximal.push_back(iv);
    }
    std::sort(maximal.begin(), maximal.end());

    StableNode node;
    int pos = 0;
    for (const auto& iv : maximal) {
        for (; pos < iv.lo; ++pos)
            if (pos != 0 && pos != m - 1) node.o.push_back(1);
        const int letters = iv.hi - iv.lo + 1;
        if (iv.lo == 0)
            node.m_minus = letters - 1;
        else if (iv.hi == m - 1)
            node.m_plus = letters - 1;
        else
            node.o.push_back(letters);
        pos = iv.hi + 1;
    }
    for (; pos < m; ++pos)
        if (pos != 0 && pos != m - 1) node.o.push_back(1);
    return node;
}

QuotientResult quotient_to_stable_region(const Associahedron& assoc) {
    const int m = assoc.m;
    std::vector<StableNode> image(assoc.faces.size());
    for (std::size_t i = 0; i < assoc.faces.size(); ++i)
        image[i] = face_to_stable_node(m, assoc.faces[i]);

    std::vector<StableNode> distinct = image;
    std::sort(distinct.begin(), distinct.end(), [](const StableNode& a, const StableNode& b) {
        return a.dim() != b.dim() ? a.dim() < b.dim() : a.label() < b.label();
    });
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

    QuotientResult result;
    std::map<std::string, int> index;
    for (const auto& node : distinct) {
        index[node.label()] = static_cast<int>(result.poset.nodes.size());
        result.poset.nodes.push_back({node.label(), node.dim()});
    }

    std::set<std::pair<int, int>> covers;
    for (const auto& [lo, hi] : assoc.poset.covers) {
        const auto& a = image[lo];
        const auto& b = image[hi];
        if (a == b) continue;
        if (b.dim() - a.dim() == 1) covers.insert({index.at(a.label()), index.at(b.label())});
    }
    result.poset.covers.assign(covers.begin(), covers.end());
    result.poset.check_graded();

    for (std::size_t i = 0; i < assoc.faces.size(); ++i) {
        const int face_dim = m - 2 - static_cast<int>(assoc.faces[i].size());
        if (image[i].dim() < face_dim)
            result.collapsed.push_back({face_label(m, assoc.faces[i]), face_dim, image[i].dim()});
    }
    return result;
}

std::vector<RegionLabel> enumerate_regions(int n) {
    if (n < 1) throw ValidationError("enumerate_regions: n must be >= 1");
    if (n > 6) throw LimitError("enumerate_regions: n > 6 exceeds the enumeration limit");

    auto all_compositions = [](int total) {
        std::vector<std::vector<int>> comps;
        std::vector<int> scratch;
        compositions(total, scratch, [&](const std::vector<int>& c) { comps.push_back(c); });
        return comps;
    };

    std::vector<RegionLabel> out;
    // budget split: negative clusters | M- | elliptic | M+ | positive | complex pairs
    for (int neg = 0; neg <= n; ++neg)
        for (int m_minus = 0; neg + m_minus <= n; ++m_minus)
            for (int ell = 0; neg + m_minus + ell <= n; ++ell)
                for (int m_plus = 0; neg + m_minus + ell + m_plus <= n; ++m_plus)
                    for (int pos = 0; neg + m_minus + ell + m_plus + pos <= n; ++pos) {
                        const int rest = n - neg - m_minus - ell - m_plus - pos;
                        if (rest % 2 != 0) continue;
                        for (const auto& mult_neg : all_compositions(neg))
                            for (const auto& mult_ell : all_compositions(ell))
                                for (const auto& mult_pos : all_compositions(pos))
                                    for (const auto& mult_cx : all_compositions(rest / 2)) {
                                        RegionLabel label;
                                        label.mult_neg = mult_neg;
                                        label.m_minus  = m_minus;
                                        label.mult_ell = mult_ell;
                                        label.m_plus   = m_plus;
                                        label.mult_pos = mult_pos;
                                        label.mult_cx  = mult_cx;
                                        out.push_back(label);
                                    }
                    }
    return out;
}

bool same_poset(const StratumPoset& a, const StratumPoset& b) {
    auto node_set = [](const StratumPoset& p) {
        std::set<std::pair<std::string, int>> s;
        for (const auto& n : p.nodes) s.insert({n.label, n.dim});
        return s;
    };
    auto cover_set = [](const StratumPoset& p) {
        std::set<std::pair<std::string, std::string>> s;
        for (const auto& [lo, hi] : p.covers) s.insert({p.nodes[lo].label, p.nodes[hi].label});
        return s;
    };
    return node_set(a) == node_set(b) && cover_set(a) == cover_set(b);
}

}  // namespace gitseq
