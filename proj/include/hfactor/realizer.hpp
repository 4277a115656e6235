#ifndef HFACTOR_REALIZER_HPP
#define HFACTOR_REALIZER_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hfactor/checker.hpp"
#include "hfactor/core.hpp"

// Constructive side of the characterization: starting from the bare clique
// factor, repeatedly apply guarded edge exchanges that raise the degree of
// the critical vertex without touching any saturated prefix degree, until
// every target is met.
//
// Rule priority is fixed (first applicable wins) and every vertex witness
// is chosen smallest-index-first, so runs are deterministic.

namespace hfactor {
namespace realizer {

class Unrealizable : public std::runtime_error {
public:
    explicit Unrealizable(Verdict v)
        : std::runtime_error(std::string("sequence is not realizable (") +
                             (v.failure ? failure_name(*v.failure) : "?") + ")"),
          verdict(v) {}
    Verdict verdict;
};

class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class StuckWithDeficiency : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

struct EngineOptions {
    bool trace = false;  // keep the full move log in the report
    bool audit = false;  // re-check M1..M8 after every move
};

struct EngineReport {
    std::int64_t moves = 0;
    std::array<std::int64_t, kRuleIdCount> rule_counts{};
    LabelledGraph graph;
    std::vector<Move> log;  // populated when trace is on
};

/// min{i : d(v_i) < d_i}, or n+1 when the subrealization is a realization.
inline int critical_index(const Subrealization& state) {
    for (int i = 1; i <= state.n(); ++i)
        if (state.graph.degree(i) < state.targets.at(i)) return i;
    return state.n() + 1;
}

/// The graph H with all bookkeeping initialized. Rejected sequences never
/// enter the engine.
inline Subrealization initial_subrealization(const DegreeSequence& seq) {
    Verdict v = checker::check_h_realizable(seq);
    if (!v.accepted) throw Unrealizable(v);
    FactorShape shape(seq.h, seq.n());
    Subrealization state{make_factor_graph(shape), seq, shape, 1, {}, Bits(seq.n() + 1)};
    for (int i = 1; i <= seq.n(); ++i)
        if (state.graph.degree(i) < seq.at(i)) state.deficient.set(i);
    state.r = critical_index(state);
    return state;
}

/// Bare state constructor with no acceptance screen; test scaffolding for
/// exercising select_move on states the engine itself would never reach.
inline Subrealization make_subrealization_unchecked(const DegreeSequence& seq) {
    FactorShape shape(seq.h, seq.n());
    Subrealization state{make_factor_graph(shape), seq, shape, 1, {}, Bits(seq.n() + 1)};
    for (int i = 1; i <= seq.n(); ++i)
        if (state.graph.degree(i) < seq.at(i)) state.deficient.set(i);
    state.r = critical_index(state);
    return state;
}

namespace detail {

// The sets of the second-case analysis around the critical vertex. v_i is
// the smallest prefix non-neighbor of v_r; p and q are the blocks of v_i
// and v_r.
struct Case2Context {
    int i = 0, r = 0;
    int p = 0, q = 0;
    int pb = 0, pe = 0;  // V_p label range
    int qb = 0, qe = 0;  // V_q label range
    int deficiency = 0;
    int companion = 0;  // deficient k > r in V_q with N(v_k) subset N[v_r]; 0 if unset
};

class Selector {
public:
    explicit Selector(const Subrealization& s) : st(s), g(s.graph), n(s.n()), r(s.r) {}

    // nullopt = AdvanceR (only reachable when the deficiency is gone).
    std::optional<Move> select() {
        if (r < 1 || r > n) throw ContractViolation("select_move: r out of range");
        if (st.deficiency(r) <= 0) {
            audit_saturation();
            return std::nullopt;
        }
        if (auto m = case1()) return m;
        // smallest prefix non-neighbor of v_r
        for (int i = 1; i < r; ++i)
            if (!g.adjacent(i, r)) return case2(i);
        if (auto m = case3()) return m;
        if (auto m = case4()) return m;
        audit_saturation();
        throw StuckWithDeficiency("no rule applies but v_r is deficient (r=" +
                                  std::to_string(r) + ")");
    }

private:
    const Subrealization& st;
    const LabelledGraph& g;
    const int n;
    const int r;

    static Move make(RuleId rule, std::vector<VertexPair> rem, std::vector<VertexPair> add,
                     std::vector<std::pair<const char*, int>> wit = {}) {
        return Move{rule, std::move(rem), std::move(add), std::move(wit)};
    }

    bool h_edge(int u, int v) const { return st.shape.h_edge(u, v); }

    // ---- Case 1: attach v_r to a deficient later vertex ------------------

    std::optional<Move> case1() const {
        int k = st.deficient.first_from(r + 1);
        while (k) {
            if (!g.adjacent(r, k))
                return make(RuleId::Case1, {}, {ordered(r, k)}, {{"k", k}});
            k = st.deficient.first_from(k + 1);
        }
        return std::nullopt;
    }

    // ---- Case 2 ----------------------------------------------------------

    Move case2(int i) const {
        Case2Context c;
        c.i = i;
        c.r = r;
        c.p = st.shape.block_of(i);
        c.q = st.shape.block_of(r);
        if (c.p >= c.q) throw InvariantViolation("Case2: expected p < q");
        c.pb = st.shape.block_begin(c.p);
        c.pe = st.shape.block_end(c.p);
        c.qb = st.shape.block_begin(c.q);
        c.qe = st.shape.block_end(c.q);
        c.deficiency = st.deficiency(r);

        if (c.deficiency == 1) {
            if (auto m = companion_moves(c)) return *m;
            // c.companion now set: deficient, in V_q, N(v_k) subset N[v_r]
        }
        if (auto m = f_escape(c)) return *m;
        if (auto m = ad_purge(c)) return *m;
        if (auto m = ac_coverage(c)) return *m;
        if (auto m = degree_balance(c)) return *m;
        return terminal_exchange(c);
    }

    bool in_A(const Case2Context& c, int v) const {
        return v >= c.pb && v <= c.pe && !g.adjacent(r, v);
    }
    bool in_C(const Case2Context& c, int v) const { return v >= c.qb && v <= r; }
    bool in_D(const Case2Context& c, int v) const { return v > r && v <= c.qe; }
    bool in_pq(const Case2Context& c, int v) const {
        return (v >= c.pb && v <= c.pe) || (v >= c.qb && v <= c.qe);
    }

    // Establishing the deficient companion inside v_r's block when the
    // deficiency at v_r is exactly 1. Either emits one of the three
    // printed exchanges or records the companion index in c.
    std::optional<Move> companion_moves(Case2Context& c) const {
        const int i = c.i;
        int k = st.deficient.first_from(r + 1);
        if (!k)
            throw InvariantViolation("parity: no deficient vertex beyond r at deficiency 1");
        if (!g.adjacent(r, k))
            throw InvariantViolation("Case1 should have fired before Case2");
        const int t = st.shape.block_of(k);
        if (t != c.q) {
            const int tb = st.shape.block_begin(t), te = st.shape.block_end(t);
            for (int j = tb; j <= te; ++j)
                if (g.adjacent(i, j))
                    return make(RuleId::C2_1a, {ordered(j, i)}, {ordered(i, r)},
                                {{"i", i}, {"k", k}, {"j", j}});
            for (int l = 1; l <= n; ++l) {
                if (!g.adjacent(i, l) || g.adjacent(k, l) || l == k || h_edge(i, l)) continue;
                if (l < r)
                    return make(RuleId::C2_1b, {ordered(l, i)}, {ordered(l, k), ordered(i, r)},
                                {{"i", i}, {"k", k}, {"l", l}});
                return make(RuleId::C2_1b, {ordered(l, i)}, {ordered(i, r)},
                            {{"i", i}, {"k", k}, {"l", l}});
            }
            throw InvariantViolation("C2.1: no transfer witness although one must exist");
        }
        for (int u = 1; u <= n; ++u)
            if (g.adjacent(k, u) && !g.adjacent(r, u) && u != r)
                return make(RuleId::C2_1c, {ordered(u, k)}, {ordered(u, r)},
                            {{"i", i}, {"k", k}, {"u", u}});
        c.companion = k;
        return std::nullopt;
    }

    // Violations of "every neighbor of v_i missed by v_r lies in V_p".
    std::optional<Move> f_escape(const Case2Context& c) const {
        const int i = c.i;
        for (int l = 1; l <= n; ++l) {
            if (!g.adjacent(i, l) || g.adjacent(r, l) || l == r) continue;
            if (l >= c.pb && l <= c.pe) continue;  // inside A, allowed
            if (c.deficiency >= 2)
                return make(RuleId::C2_2a, {ordered(l, i)}, {ordered(l, r), ordered(i, r)},
                            {{"i", i}, {"l", l}});
            const int k = c.companion;
            if (g.adjacent(i, k))
                return make(RuleId::C2_2b, {ordered(i, k)}, {ordered(i, r)},
                            {{"i", i}, {"k", k}, {"l", l}});
            return make(RuleId::C2_2c, {ordered(i, l)}, {ordered(l, r), ordered(i, k)},
                        {{"i", i}, {"k", k}, {"l", l}});
        }
        return std::nullopt;
    }

    // Violations of "A has no neighbor among the post-critical block-mates
    // of v_r".
    std::optional<Move> ad_purge(const Case2Context& c) const {
        for (int u = r + 1; u <= c.qe; ++u) {
            for (int a = c.pb; a <= c.pe; ++a) {
                if (!in_A(c, a) || !g.adjacent(a, u)) continue;
                return make(RuleId::C2_3, {ordered(a, u)}, {ordered(a, r)},
                            {{"i", c.i}, {"a", a}, {"u", u}});
            }
        }
        return std::nullopt;
    }

    // Violations of "outside neighbors of A are neighbors of all of C".
    std::optional<Move> ac_coverage(const Case2Context& c) const {
        for (int a = c.pb; a <= c.pe; ++a) {
            if (!in_A(c, a)) continue;
            for (int u = 1; u <= n; ++u) {
                if (!g.adjacent(a, u) || in_pq(c, u)) continue;
                for (int j = c.qb; j <= r; ++j) {
                    if (g.adjacent(u, j) || u == j) continue;
                    return ac_move(c, a, u, j);
                }
            }
        }
        return std::nullopt;
    }

    Move ac_move(const Case2Context& c, int a, int u, int j) const {
        if (j == r) {
            if (c.deficiency >= 2)
                return make(RuleId::C2_4a, {ordered(u, a)}, {ordered(a, r), ordered(u, r)},
                            {{"a", a}, {"u", u}});
            const int k = c.companion;
            return make(RuleId::C2_4b, {ordered(a, u)}, {ordered(u, r), ordered(a, k)},
                        {{"a", a}, {"u", u}, {"k", k}});
        }
        if (c.deficiency >= 2) {
            const int x = pick_beyond_closed(j, a);
            return make(RuleId::C2_4c, {ordered(u, a), ordered(j, x)},
                        {ordered(u, j), ordered(a, r), ordered(x, r)},
                        {{"a", a}, {"u", u}, {"j", j}, {"x", x}});
        }
        const int k = c.companion;
        const int x = pick_beyond_closed(j, 0);
        if (x == a)
            return make(RuleId::C2_4d, {ordered(u, a), ordered(j, a)},
                        {ordered(u, j), ordered(a, r), ordered(a, k)},
                        {{"a", a}, {"u", u}, {"j", j}, {"x", x}, {"k", k}});
        return make(RuleId::C2_4d, {ordered(u, a), ordered(j, x)},
                    {ordered(u, j), ordered(x, r), ordered(a, k)},
                    {{"a", a}, {"u", u}, {"j", j}, {"x", x}, {"k", k}});
    }

    // Smallest x in N(v_j) \ N[v_r] with x != excluded (0 = no exclusion).
    int pick_beyond_closed(int j, int excluded) const {
        for (int x = 1; x <= n; ++x)
            if (x != excluded && x != r && g.adjacent(j, x) && !g.adjacent(r, x))
                return x;
        throw InvariantViolation("no neighbor outside N[v_r] although degrees force one");
    }

    int count_in_C(const Case2Context& c, int v) const {
        int cnt = 0;
        for (int j = c.qb; j <= r; ++j)
            if (g.adjacent(v, j)) ++cnt;
        return cnt;
    }
    int count_in_range(int v, int lo, int hi) const {
        int cnt = 0;
        for (int j = lo; j <= hi; ++j)
            if (g.adjacent(v, j)) ++cnt;
        return cnt;
    }

    // Violations of the cross-block degree balance between V_p and C.
    std::optional<Move> degree_balance(const Case2Context& c) const {
        for (int l = c.pb; l <= c.pe; ++l) {
            const int lc = count_in_C(c, l);
            for (int m = c.qb; m <= r; ++m) {
                if (lc >= count_in_range(m, c.pb, c.pe)) continue;
                if (in_A(c, l))
                    throw InvariantViolation(
                        "degree balance violated inside A; earlier claims should prevent this");
                return balance_move(c, l, m);
            }
        }
        return std::nullopt;
    }

    Move balance_move(const Case2Context& c, int l, int m) const {
        int t = 0;
        for (int cand = c.qb; cand <= r; ++cand)
            if (cand != r && cand != m && !g.adjacent(l, cand)) { t = cand; break; }
        if (!t) throw InvariantViolation("C2.6: no non-neighbor v_t in C although |B|<=|C|-2");

        int u = 0;
        bool u_outside = false;
        for (int cand = 1; cand <= n; ++cand) {
            if (!g.adjacent(l, cand) || in_pq(c, cand)) continue;
            if (!g.adjacent(m, cand)) { u = cand; u_outside = true; break; }
        }
        if (!u) {
            for (int cand = r + 1; cand <= c.qe; ++cand)
                if (g.adjacent(l, cand)) { u = cand; break; }
        }
        if (!u) throw InvariantViolation("C2.6: neither witness u exists");

        std::vector<std::pair<const char*, int>> wit{{"l", l}, {"m", m}, {"t", t}, {"u", u}};

        if (!u_outside) {
            const int v = pick_beyond_closed(t, 0);
            wit.push_back({"v", v});
            return make(m == r ? RuleId::C2_6d : RuleId::C2_6h,
                        {ordered(l, u), ordered(t, v)}, {ordered(t, l), ordered(v, r)}, wit);
        }

        if (m == r) {
            if (c.deficiency >= 2) {
                const int v = pick_beyond_closed(t, u);
                wit.push_back({"v", v});
                return make(RuleId::C2_6a, {ordered(l, u), ordered(t, v)},
                            {ordered(l, t), ordered(u, r), ordered(v, r)}, wit);
            }
            const int k = c.companion;
            const int v = pick_beyond_closed(t, 0);
            wit.push_back({"v", v});
            wit.push_back({"k", k});
            if (v < r)
                return make(RuleId::C2_6b, {ordered(l, u), ordered(t, v)},
                            {ordered(t, l), ordered(u, r), ordered(v, k)}, wit);
            return make(RuleId::C2_6c, {ordered(l, u), ordered(t, v)},
                        {ordered(t, l), ordered(u, r)}, wit);
        }

        if (c.deficiency >= 2) {
            const int v = pick_beyond_closed(t, u);
            const int w = pick_beyond_closed(m, v);
            wit.push_back({"v", v});
            wit.push_back({"w", w});
            return make(RuleId::C2_6e, {ordered(l, u), ordered(t, v), ordered(m, w)},
                        {ordered(l, t), ordered(u, m), ordered(v, r), ordered(w, r)}, wit);
        }
        const int k = c.companion;
        const int v = pick_beyond_closed(t, 0);
        const int w = pick_beyond_closed(m, 0);  // v = w is fine here
        wit.push_back({"v", v});
        wit.push_back({"w", w});
        wit.push_back({"k", k});
        if (v < r) {
            if (v == w)
                return make(RuleId::C2_6f, {ordered(l, u), ordered(t, v), ordered(m, v)},
                            {ordered(t, l), ordered(u, m), ordered(v, r), ordered(v, k)}, wit);
            return make(RuleId::C2_6f, {ordered(l, u), ordered(t, v), ordered(m, w)},
                        {ordered(t, l), ordered(u, m), ordered(w, r), ordered(v, k)}, wit);
        }
        if (v == w)
            return make(RuleId::C2_6g, {ordered(l, u), ordered(t, v), ordered(m, v)},
                        {ordered(t, l), ordered(u, m), ordered(v, r)}, wit);
        return make(RuleId::C2_6g, {ordered(l, u), ordered(t, v), ordered(m, w)},
                    {ordered(t, l), ordered(u, m), ordered(w, r)}, wit);
    }

    // The closing exchange of the second case: all claims hold, the blocks
    // V_p and C = V_q are balanced, and a four-edge exchange removes two
    // units of deficiency at once.
    Move terminal_exchange(const Case2Context& c) const {
        audit_terminal(c);
        for (int u = 1; u <= n; ++u) {
            if (in_pq(c, u)) continue;
            if (count_in_range(u, c.pb, c.pe) <= count_in_range(u, c.qb, c.qe)) continue;
            int l = 0;
            for (int cand = c.pb; cand <= c.pe; ++cand)
                if (g.adjacent(cand, u)) { l = cand; break; }
            if (!l) continue;
            if (in_A(c, l))
                throw InvariantViolation("C2.final: u adjacent to A although u is not in N(A)");
            for (int t = c.qb; t <= c.qe; ++t) {
                if (t == r || g.adjacent(l, t)) continue;
                for (int m = c.qb; m <= c.qe; ++m) {
                    if (m == r || m == t || g.adjacent(u, m) || u == m) continue;
                    for (int v = 1; v <= n; ++v) {
                        if (v == r || !g.adjacent(t, v) || g.adjacent(r, v)) continue;
                        for (int w = 1; w <= n; ++w) {
                            if (w == v || w == r || !g.adjacent(m, w) || g.adjacent(r, w))
                                continue;
                            return make(RuleId::C2_final,
                                        {ordered(l, u), ordered(t, v), ordered(m, w)},
                                        {ordered(l, t), ordered(u, m), ordered(v, r),
                                         ordered(w, r)},
                                        {{"i", c.i}, {"u", u}, {"l", l}, {"t", t},
                                         {"m", m}, {"v", v}, {"w", w}});
                        }
                    }
                }
            }
        }
        throw StuckWithDeficiency("C2.final: no terminal exchange found");
    }

    void audit_terminal(const Case2Context& c) const {
        const int h = st.shape.h();
        const int csize = r - c.qb + 1;
        if (csize != h + 1) throw InvariantViolation("C2.final: |C| != h+1");
        if (r % (h + 1) != 0) throw InvariantViolation("C2.final: r not block-final");
        if (c.deficiency < 2) throw InvariantViolation("C2.final: deficiency < 2");
        if (csize < 3) throw InvariantViolation("C2.final: |C| < 3");
        int b = 0;
        for (int v = c.pb; v <= c.pe; ++v)
            if (g.adjacent(r, v)) ++b;
        if (b > csize - 2) throw InvariantViolation("C2.final: |B| > |C|-2");
        for (int v = c.pb; v <= c.pe; ++v)
            if (count_in_range(v, c.qb, c.qe) > h)
                throw InvariantViolation("C2.final: some V_p vertex sees all of V_q");
    }

    // ---- Case 3: lift an undersaturated later vertex ---------------------

    // Saturation target of v_k toward {v_1..v_r}: the min-term of the
    // per-k bound evaluated at k = r.
    int saturation_target(int k) const {
        const int h = st.shape.h();
        const int s = r % (h + 1);
        const int d = st.targets.at(k);
        if (k <= r + 1 + h - s) return std::min(r, d - h + s);
        return std::min(r, d - h);
    }

    std::optional<Move> case3() const {
        for (int k = r + 1; k <= n; ++k) {
            const int have = g.row(k).count_prefix(r);
            const int want = saturation_target(k);
            if (have > want)
                throw InvariantViolation("Case3: saturation count above its ceiling");
            if (have == want) continue;
            if (!g.adjacent(k, r))
                throw InvariantViolation("Case3: undersaturated vertex not adjacent to v_r");
            int i = 0;
            for (int cand = 1; cand < r; ++cand)
                if (!g.adjacent(k, cand)) { i = cand; break; }
            if (!i) throw InvariantViolation("Case3: no prefix non-neighbor of v_k");
            const int j = pick_beyond_closed(i, 0);
            if (j <= r) throw InvariantViolation("Case3: witness v_j not beyond r");
            return make(RuleId::Case3, {ordered(j, i)}, {ordered(j, r), ordered(i, k)},
                        {{"k", k}, {"i", i}, {"j", j}});
        }
        return std::nullopt;
    }

    // ---- Case 4: close a missing prefix pair -----------------------------

    std::optional<Move> case4() const {
        for (int i = 1; i < r; ++i) {
            for (int j = i + 1; j < r; ++j) {
                if (g.adjacent(i, j)) continue;
                const int vl = pick_beyond_closed(i, 0);
                const int vm = pick_beyond_closed(j, 0);
                if (vl <= r || vm <= r)
                    throw InvariantViolation("Case4: witnesses must lie beyond r");
                if (vl == vm)
                    return make(RuleId::Case4, {ordered(vl, i), ordered(vl, j)},
                                {ordered(i, j), ordered(vl, r)},
                                {{"i", i}, {"j", j}, {"l", vl}, {"m", vm}});
                return make(RuleId::Case4, {ordered(vl, i), ordered(vm, j)},
                            {ordered(i, j), ordered(vl, r)},
                            {{"i", i}, {"j", j}, {"l", vl}, {"m", vm}});
            }
        }
        return std::nullopt;
    }

    // ---- Saturation equalities at AdvanceR (M7) --------------------------

    void audit_saturation() const {
        std::int64_t lhs = 0;
        for (int i = 1; i <= r; ++i) lhs += g.degree(i);
        std::int64_t rhs = static_cast<std::int64_t>(r) * (r - 1);
        for (int k = r + 1; k <= n; ++k) rhs += saturation_target(k);
        if (st.deficiency(r) <= 0 && lhs > rhs)
            throw InvariantViolation("saturation equality exceeded at AdvanceR");
    }
};

}  // namespace detail

/// Either the highest-priority applicable exchange, or nothing (AdvanceR)
/// when v_r already meets its target. A deficient v_r with no applicable
/// rule means the bound itself fails at r: StuckWithDeficiency.
inline std::optional<Move> select_move(const Subrealization& state) {
    return detail::Selector(state).select();
}

namespace detail {

inline void audit_after(const Subrealization& state, const Move& m, int r_before,
                        const std::vector<int>& deg_before) {
    const auto& g = state.graph;
    // M5 + M1
    for (int i = 1; i <= state.n(); ++i) {
        if (g.degree(i) > state.targets.at(i))
            throw InvariantViolation(std::string("M5 broken by ") + rule_name(m.rule));
        if (i < r_before && g.degree(i) != deg_before[i])
            throw InvariantViolation(std::string("M1 broken by ") + rule_name(m.rule));
    }
    // M2
    const int gain = g.degree(r_before) - deg_before[r_before];
    if (gain != 1 && gain != 2)
        throw InvariantViolation(std::string("M2 broken by ") + rule_name(m.rule));
    // M3
    if (!is_h_spanning(g, state.shape))
        throw InvariantViolation(std::string("M3 broken by ") + rule_name(m.rule));
    // M4, with S from the post-move critical index
    const int r_now = critical_index(state);
    for (int u = r_now + 1; u <= state.n(); ++u)
        for (int v = u + 1; v <= state.n(); ++v)
            if (g.adjacent(u, v) != state.shape.h_edge(u, v))
                throw InvariantViolation(std::string("M4 broken by ") + rule_name(m.rule));
}

}  // namespace detail

/// Applies a move produced by select_move on exactly this state: removals
/// first, then additions, then the critical index is recomputed and the
/// move logged.
inline void apply_move(Subrealization& state, const Move& m, bool audit = false) {
    std::vector<int> deg_before;
    const int r_before = state.r;
    if (audit) {
        deg_before.resize(state.n() + 1);
        for (int i = 1; i <= state.n(); ++i) deg_before[i] = state.graph.degree(i);
    }
    for (auto [u, v] : m.removed) {
        if (state.shape.h_edge(u, v))
            throw InvariantViolation(std::string("move removes a block edge: ") + rule_name(m.rule));
        state.remove_edge(u, v);
    }
    for (auto [u, v] : m.added) state.add_edge(u, v);
    if (audit) detail::audit_after(state, m, r_before, deg_before);
    // the prefix is frozen, so the critical index can only move forward
    while (state.r <= state.n() && state.deficiency(state.r) <= 0) ++state.r;
    state.log.push_back(m);
}

/// One trace line per move: sequence number, rule, removed and added pairs,
/// then the critical index and the critical degree after the move.
inline std::string trace_line(std::int64_t seq_no, const Move& m, const Subrealization& state) {
    std::string out = std::to_string(seq_no);
    out += ' ';
    out += rule_name(m.rule);
    out += " -";
    for (std::size_t idx = 0; idx < m.removed.size(); ++idx) {
        if (idx) out += ',';
        out += std::to_string(m.removed[idx].first) + "-" + std::to_string(m.removed[idx].second);
    }
    out += " +";
    for (std::size_t idx = 0; idx < m.added.size(); ++idx) {
        if (idx) out += ',';
        out += std::to_string(m.added[idx].first) + "-" + std::to_string(m.added[idx].second);
    }
    out += " r=" + std::to_string(state.r);
    const int probe = std::min(state.r, state.n());
    out += " deg(v_r)=" + std::to_string(state.graph.degree(probe));
    return out;
}

/// Runs the engine to completion. Deterministic; throws Unrealizable on a
/// rejected sequence and never returns an unverified graph.
inline EngineReport realize(const DegreeSequence& seq, const EngineOptions& options = {}) {
    Subrealization state = initial_subrealization(seq);
    EngineReport report;
    const std::int64_t move_cap = seq.sum();  // M6
    while (state.r <= state.n()) {
        auto m = select_move(state);
        if (!m) {
            ++state.r;
            continue;
        }
        apply_move(state, *m, options.audit);
        ++report.moves;
        ++report.rule_counts[static_cast<int>(m->rule)];
        if (report.moves > move_cap)
            throw InvariantViolation("M6 broken: move count exceeded the degree sum");
    }
    auto verify = verify_realization(state.graph, seq, FactorShape(seq.h, seq.n()));
    if (!verify.pass())
        throw InvariantViolation("engine finished with an invalid realization");
    report.graph = std::move(state.graph);
    if (options.trace) report.log = std::move(state.log);
    return report;
}

}  // namespace realizer
}  // namespace hfactor

#endif
