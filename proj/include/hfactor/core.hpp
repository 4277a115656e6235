#ifndef HFACTOR_CORE_HPP
#define HFACTOR_CORE_HPP

#include <cstdint>
#include <bit>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

// Core domain types for clique-factor degree sequence realization.
// Vertices are labelled 1..n everywhere, including serialization.

namespace hfactor {

class ContractViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Dynamic bitset sized at construction. Bit positions are vertex labels,
/// so position 0 is unused in graph rows.
class Bits {
public:
    Bits() = default;
    explicit Bits(int nbits) : nbits_(nbits), words_((nbits + 64) / 64, 0) {}

    bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(int i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    int size() const { return nbits_; }
    std::size_t word_count() const { return words_.size(); }
    const std::uint64_t* data() const { return words_.data(); }

    int count() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }

    /// Number of set bits at positions in [1, upto].
    int count_prefix(int upto) const {
        if (upto <= 0) return 0;
        int c = 0;
        std::size_t full = static_cast<std::size_t>(upto + 1) >> 6;
        for (std::size_t w = 0; w < full; ++w) c += std::popcount(words_[w]);
        int rem = (upto + 1) & 63;
        if (rem) c += std::popcount(words_[full] & ((std::uint64_t{1} << rem) - 1));
        return c;
    }

    /// Smallest set position >= from, or 0 if none.
    int first_from(int from) const {
        if (from < 0) from = 0;
        std::size_t w = static_cast<std::size_t>(from) >> 6;
        if (w >= words_.size()) return 0;
        std::uint64_t cur = words_[w] & ~((std::uint64_t{1} << (from & 63)) - 1);
        while (true) {
            if (cur) return static_cast<int>(w * 64 + std::countr_zero(cur));
            if (++w >= words_.size()) return 0;
            cur = words_[w];
        }
    }

    bool operator==(const Bits&) const = default;

private:
    int nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Target sequence: non-increasing degrees d_1..d_n plus the clique order
/// parameter h. Kept as a plain value; structural validity is reported by
/// the checker as a Verdict rather than enforced here, so that invalid
/// inputs produce diagnostics instead of exceptions.
struct DegreeSequence {
    std::vector<int> degrees;  // d_1..d_n, index 0 holds d_1
    int h = 0;

    int n() const { return static_cast<int>(degrees.size()); }
    int at(int i) const { return degrees[i - 1]; }  // 1-based
    std::int64_t sum() const {
        std::int64_t s = 0;
        for (int d : degrees) s += d;
        return s;
    }
    bool sorted() const {
        for (std::size_t i = 1; i < degrees.size(); ++i)
            if (degrees[i - 1] < degrees[i]) return false;
        return true;
    }
};

/// The block partition of [n] into n/(h+1) consecutive runs of h+1 labels.
/// Block i covers labels (i-1)(h+1)+1 .. i(h+1).
class FactorShape {
public:
    FactorShape(int h, int n) : h_(h), n_(n) {
        if (h < 0 || n < 1 || n % (h + 1) != 0)
            throw ContractViolation("FactorShape: n must be a positive multiple of h+1");
    }

    int h() const { return h_; }
    int n() const { return n_; }
    int block_count() const { return n_ / (h_ + 1); }
    int block_of(int k) const { return (k - 1) / (h_ + 1) + 1; }
    int block_begin(int b) const { return (b - 1) * (h_ + 1) + 1; }
    int block_end(int b) const { return b * (h_ + 1); }
    /// Residue s of k within its block: k mod (h+1), in {0,...,h}.
    int residue(int k) const { return k % (h_ + 1); }
    bool same_block(int u, int v) const { return block_of(u) == block_of(v); }
    /// True iff uv is a block edge (an edge of H).
    bool h_edge(int u, int v) const { return u != v && same_block(u, v); }

private:
    int h_;
    int n_;
};

/// Simple graph on labels 1..n, adjacency as bit-packed symmetric rows with
/// a per-vertex degree cache.
class LabelledGraph {
public:
    LabelledGraph() = default;
    explicit LabelledGraph(int n) : n_(n), deg_(n + 1, 0), rows_(n + 1, Bits(n + 1)) {
        if (n < 1) throw ContractViolation("LabelledGraph: n must be positive");
    }

    int size() const { return n_; }
    bool adjacent(int u, int v) const { return rows_[u].test(v); }
    int degree(int v) const { return deg_[v]; }
    const Bits& row(int v) const { return rows_[v]; }

    void add_edge(int u, int v) {
        check_pair(u, v);
        if (rows_[u].test(v)) throw ContractViolation("add_edge: edge already present");
        rows_[u].set(v);
        rows_[v].set(u);
        ++deg_[u];
        ++deg_[v];
    }

    void remove_edge(int u, int v) {
        check_pair(u, v);
        if (!rows_[u].test(v)) throw ContractViolation("remove_edge: edge absent");
        rows_[u].reset(v);
        rows_[v].reset(u);
        --deg_[u];
        --deg_[v];
    }

    std::int64_t edge_count() const {
        std::int64_t s = 0;
        for (int v = 1; v <= n_; ++v) s += deg_[v];
        return s / 2;
    }

    /// Full consistency audit: symmetry, no loops, degree cache = row counts.
    bool consistent() const {
        for (int v = 1; v <= n_; ++v) {
            if (rows_[v].test(v)) return false;
            if (rows_[v].count() != deg_[v]) return false;
            for (int u = v + 1; u <= n_; ++u)
                if (rows_[v].test(u) != rows_[u].test(v)) return false;
        }
        return true;
    }

    bool operator==(const LabelledGraph&) const = default;

private:
    void check_pair(int u, int v) const {
        if (u < 1 || v < 1 || u > n_ || v > n_ || u == v)
            throw ContractViolation("edge endpoints out of range or equal");
    }

    int n_ = 0;
    std::vector<int> deg_;
    std::vector<Bits> rows_;
};

/// Builds H itself: every within-block pair.
inline LabelledGraph make_factor_graph(const FactorShape& shape) {
    LabelledGraph g(shape.n());
    for (int b = 1; b <= shape.block_count(); ++b)
        for (int u = shape.block_begin(b); u <= shape.block_end(b); ++u)
            for (int v = u + 1; v <= shape.block_end(b); ++v)
                g.add_edge(u, v);
    return g;
}

enum class Failure {
    NotSorted,
    BelowH,
    ParityOdd,
    NotMultiple,
    DegreeCeiling,
    Inequality,
};

inline const char* failure_name(Failure f) {
    switch (f) {
        case Failure::NotSorted: return "NotSorted";
        case Failure::BelowH: return "BelowH";
        case Failure::ParityOdd: return "ParityOdd";
        case Failure::NotMultiple: return "NotMultiple";
        case Failure::DegreeCeiling: return "DegreeCeiling";
        case Failure::Inequality: return "Inequality";
    }
    return "?";
}

/// Checker outcome. On an Inequality failure, k is the first violated index
/// and lhs/rhs are both sides at that k.
struct Verdict {
    bool accepted = false;
    std::optional<Failure> failure;
    std::optional<int> k;
    std::optional<std::int64_t> lhs;
    std::optional<std::int64_t> rhs;

    static Verdict ok() { return Verdict{true, {}, {}, {}, {}}; }
    static Verdict fail(Failure f) { return Verdict{false, f, {}, {}, {}}; }
    static Verdict violated(int k, std::int64_t lhs, std::int64_t rhs) {
        return Verdict{false, Failure::Inequality, k, lhs, rhs};
    }

    bool operator==(const Verdict&) const = default;
};

enum class RuleId {
    Case1,
    C2_1a, C2_1b, C2_1c,
    C2_2a, C2_2b, C2_2c,
    C2_3,
    C2_4a, C2_4b, C2_4c, C2_4d,
    C2_6a, C2_6b, C2_6c, C2_6d, C2_6e, C2_6f, C2_6g, C2_6h,
    C2_final,
    Case3,
    Case4,
};

inline const char* rule_name(RuleId r) {
    switch (r) {
        case RuleId::Case1: return "Case1";
        case RuleId::C2_1a: return "C2.1a";
        case RuleId::C2_1b: return "C2.1b";
        case RuleId::C2_1c: return "C2.1c";
        case RuleId::C2_2a: return "C2.2a";
        case RuleId::C2_2b: return "C2.2b";
        case RuleId::C2_2c: return "C2.2c";
        case RuleId::C2_3: return "C2.3";
        case RuleId::C2_4a: return "C2.4a";
        case RuleId::C2_4b: return "C2.4b";
        case RuleId::C2_4c: return "C2.4c";
        case RuleId::C2_4d: return "C2.4d";
        case RuleId::C2_6a: return "C2.6a";
        case RuleId::C2_6b: return "C2.6b";
        case RuleId::C2_6c: return "C2.6c";
        case RuleId::C2_6d: return "C2.6d";
        case RuleId::C2_6e: return "C2.6e";
        case RuleId::C2_6f: return "C2.6f";
        case RuleId::C2_6g: return "C2.6g";
        case RuleId::C2_6h: return "C2.6h";
        case RuleId::C2_final: return "C2.final";
        case RuleId::Case3: return "Case3";
        case RuleId::Case4: return "Case4";
    }
    return "?";
}

constexpr int kRuleIdCount = static_cast<int>(RuleId::Case4) + 1;

using VertexPair = std::pair<int, int>;  // stored with first < second

inline VertexPair ordered(int u, int v) { return u < v ? VertexPair{u, v} : VertexPair{v, u}; }

/// One edge exchange: edges removed, edges added, and the vertex bindings
/// the rule matched on (kept for traces and audit diagnostics).
struct Move {
    RuleId rule;
    std::vector<VertexPair> removed;
    std::vector<VertexPair> added;
    std::vector<std::pair<const char*, int>> witnesses;
};

/// Realizer state. The graph always spans H; d(v_i) = d_i for i < r and,
/// while r <= n, d(v_r) < d_r. Among S = {v_{r+1},...,v_n} only H edges
/// are present.
struct Subrealization {
    LabelledGraph graph;
    DegreeSequence targets;
    FactorShape shape;
    int r = 1;  // critical index, in [1, n+1]
    std::vector<Move> log;
    Bits deficient;  // v with d(v) < d_v

    int n() const { return shape.n(); }
    int deficiency(int v) const { return targets.at(v) - graph.degree(v); }

    void add_edge(int u, int v) {
        graph.add_edge(u, v);
        if (graph.degree(u) >= targets.at(u)) deficient.reset(u);
        if (graph.degree(v) >= targets.at(v)) deficient.reset(v);
    }
    void remove_edge(int u, int v) {
        graph.remove_edge(u, v);
        if (graph.degree(u) < targets.at(u)) deficient.set(u);
        if (graph.degree(v) < targets.at(v)) deficient.set(v);
    }
};

/// True iff every within-block pair of distinct labels is an edge of g.
inline bool is_h_spanning(const LabelledGraph& g, const FactorShape& shape) {
    if (g.size() != shape.n()) throw ContractViolation("is_h_spanning: size mismatch");
    for (int b = 1; b <= shape.block_count(); ++b)
        for (int u = shape.block_begin(b); u <= shape.block_end(b); ++u)
            for (int v = u + 1; v <= shape.block_end(b); ++v)
                if (!g.adjacent(u, v)) return false;
    return true;
}

struct VerifyReport {
    bool degrees_match = false;
    bool spanning = false;
    bool simple = false;
    std::optional<int> first_bad_index;  // set when degrees_match is false

    bool pass() const { return degrees_match && spanning && simple; }
};

/// Independent re-check that g realizes seq over shape: exact degrees,
/// spanning H, and internal graph consistency.
inline VerifyReport verify_realization(const LabelledGraph& g, const DegreeSequence& seq,
                                       const FactorShape& shape) {
    if (g.size() != seq.n() || seq.n() != shape.n() || seq.h != shape.h())
        throw ContractViolation("verify_realization: size mismatch");
    VerifyReport rep;
    rep.degrees_match = true;
    for (int i = 1; i <= seq.n(); ++i) {
        if (g.degree(i) != seq.at(i)) {
            rep.degrees_match = false;
            rep.first_bad_index = i;
            break;
        }
    }
    rep.spanning = is_h_spanning(g, shape);
    rep.simple = g.consistent();
    return rep;
}

}  // namespace hfactor

#endif
