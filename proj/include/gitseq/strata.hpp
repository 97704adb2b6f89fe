#pragma once

#include "gitseq/base_space.hpp"
#include "gitseq/signatures.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace gitseq {

struct Degrees {
    long top;       // branches of the symmetric-orbit layer
    long middle;    // branches of the general-orbit layer
    long relative;  // top / middle, the collapsing multiplicity
};

// Branch counts over a region: top = prod(m-_j+1) prod(o_j+1) prod(m+_j+1),
// middle = prod(o_j+1), relative = their quotient (exact).
Degrees degrees(const RegionLabel& region);

// k + l + m + 2r: dimension of the stratum interior.
int stratum_dimension(const RegionLabel& region);

// Merge entries j and j+1 (0-based); length drops by one, sum is preserved.
std::vector<int> basic_contraction(const std::vector<int>& tuple, int j);

// Stratum of the stable region: multiplicities (M-, o, M+), sum = n, dim = |o|.
struct StableNode {
    int m_minus = 0;
    std::vector<int> o;
    int m_plus = 0;

    int dim() const { return static_cast<int>(o.size()); }
    int total() const;
    std::string label() const;  // e.g. "1|(1,2)|0"
    bool operator==(const StableNode&) const  = default;
    auto operator<=>(const StableNode&) const = default;
};

// Single basic contractions of (M-, o, M+): middle merges of consecutive o
// entries and absorptions of the first/last entry into the -1 / +1 slot.
// With o empty there is nothing left to contract (-1 never merges with +1
// directly).
std::vector<StableNode> contraction_children(const StableNode& node);

// Closure of the node under basic contractions, the node itself excluded.
std::set<StableNode> contraction_set(const StableNode& node);

struct ContractionStep {
    enum class Kind { middle, elim_left, elim_right };
    Kind kind;
    int index = 0;  // middle only: merge entries index, index+1 of the current o
};

// A sequence of basic steps. Orders count steps of each kind; the total order
// equals the codimension of the resulting stratum.
struct Contraction {
    std::vector<ContractionStep> steps;

    int mord() const;
    int lord() const;
    int rord() const;
    int tord() const { return static_cast<int>(steps.size()); }
};

// Apply the steps to a list of signature pairs: middle steps add consecutive
// pairs componentwise, eliminations drop the first/last entry.
std::vector<SignPair> signature_contraction(const std::vector<SignPair>& pairs,
                                            const Contraction& c);

// Same on full signatures; a middle merge requires equal classes and records
// the midpoint of the merged values.
Signature signature_contraction(const Signature& sig, const Contraction& c);

// Branch of the top layer over a stable-region stratum: one signature pair
// per o entry, pair sums matching the multiplicities.
struct BranchLabel {
    StableNode node;
    std::vector<SignPair> pairs;

    void validate() const;
    std::string label() const;
    bool operator==(const BranchLabel&) const = default;
};

// Witnessing contraction taking upper to lower (node and signature both), or
// nullopt when the branches do not meet. The codimension of the meet is the
// total order of the witness.
std::optional<Contraction> branch_adjacent(const BranchLabel& upper, const BranchLabel& lower);

// Whether the cluster (index into o) may leave the real axis and become a
// complex pair: needs multiplicity >= 2 and a mixed pair, since a complex
// pair forces a diag(1,-1) summand in the B block.
bool complex_transition_admissible(const BranchLabel& branch, int cluster_index);

struct PosetNode {
    std::string label;
    int dim = 0;
};

// Face poset given by labelled nodes and covering pairs (lower, upper);
// dim increases by exactly one along covers.
struct StratumPoset {
    std::vector<PosetNode> nodes;
    std::vector<std::pair<int, int>> covers;

    std::vector<int> f_vector() const;  // node counts per dimension
    void check_graded() const;          // throws NumericError on a bad cover
};

// All strata (M-, o, M+) with total n, sorted by dimension then label.
std::vector<StableNode> stable_nodes(int n);

// All strata of the stable region for n degrees of freedom, covers = single
// basic contractions. Throws LimitError for n > 12.
StratumPoset stable_region_poset(int n);

// The branches over a stable-region stratum: every signature assignment,
// prod (o_j + 1) of them, in lexicographic order (p descending per cluster).
std::vector<BranchLabel> stable_branches(const StableNode& node);

// Letter positions [lo, hi] of a parenthesis pair (at least two letters,
// never the full word).
struct Interval {
    int lo = 0, hi = 0;
    bool operator==(const Interval&) const  = default;
    auto operator<=>(const Interval&) const = default;
};

// Face lattice of the associahedron K_m on the word -1 v1 ... v_{m-2} 1.
// Faces are families of pairwise nested-or-disjoint intervals; the face
// dimension is (m-2) minus the family size. Throws LimitError for m > 12.
struct Associahedron {
    int m = 0;
    std::vector<std::vector<Interval>> faces;  // sorted families, aligned with poset.nodes
    StratumPoset poset;
};

Associahedron associahedron(int m);

struct CollapseRecord {
    std::string face;  // bracket-string label of the collapsed face
    int old_dim = 0;
    int new_dim = 0;
};

struct QuotientResult {
    StratumPoset poset;                    // nodes keyed by StableNode labels
    std::vector<CollapseRecord> collapsed; // faces whose dimension dropped
};

// Flatten nested parentheses into unordered brackets and identify faces with
// equal normalized labels. The result is the stable region of n = m-2
// degrees of freedom.
QuotientResult quotient_to_stable_region(const Associahedron& assoc);

// Label-keyed equality of node sets and cover sets.
bool same_poset(const StratumPoset& a, const StratumPoset& b);

// Every region label with total multiplicity n (all ordered multiplicity
// compositions per side, complex pairs included). Throws LimitError for
// n > 6; the count grows quickly.
std::vector<RegionLabel> enumerate_regions(int n);

// Node of the stable-region stratum corresponding to a face (by maximal
// intervals); exposed separately for the quotient tally tests.
StableNode face_to_stable_node(int m, const std::vector<Interval>& face);

// Parenthesized word of a face, innermost groups first, e.g. "((-1 v1) v2) 1".
std::string face_label(int m, const std::vector<Interval>& face);

}  // namespace gitseq
