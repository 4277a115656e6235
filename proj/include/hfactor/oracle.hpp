#ifndef HFACTOR_ORACLE_HPP
#define HFACTOR_ORACLE_HPP

#include <cstdint>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hfactor/checker.hpp"
#include "hfactor/core.hpp"

// Ground-truth brute force at small n: enumerate every labelled graph that
// spans H and meets the target degrees exactly, by backtracking over the
// non-H vertex pairs in lexicographic order.

namespace hfactor {
namespace oracle {

class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class RetryBudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

constexpr int kDefaultCap = 12;

struct EnumerateOptions {
    int cap = kDefaultCap;
    std::int64_t limit = -1;  // stop after this many realizations; -1 = all
    bool prune = true;        // completeness of pruning is itself under test
};

namespace detail {

struct Enumerator {
    const DegreeSequence& seq;
    const FactorShape& shape;
    const EnumerateOptions& opt;
    const std::function<bool(const LabelledGraph&)>& emit;

    std::vector<VertexPair> pairs;            // non-H pairs, lexicographic
    std::vector<std::vector<int>> suffix_inc; // suffix_inc[idx][v]: pairs >= idx touching v
    std::vector<int> rem;                     // residual demand per vertex
    LabelledGraph g;
    std::int64_t count = 0;
    bool stopped = false;

    Enumerator(const DegreeSequence& s, const FactorShape& sh, const EnumerateOptions& o,
               const std::function<bool(const LabelledGraph&)>& e)
        : seq(s), shape(sh), opt(o), emit(e), g(make_factor_graph(sh)) {
        const int n = seq.n();
        for (int u = 1; u <= n; ++u)
            for (int v = u + 1; v <= n; ++v)
                if (!shape.h_edge(u, v)) pairs.push_back({u, v});
        suffix_inc.assign(pairs.size() + 1, std::vector<int>(n + 1, 0));
        for (int idx = static_cast<int>(pairs.size()) - 1; idx >= 0; --idx) {
            suffix_inc[idx] = suffix_inc[idx + 1];
            ++suffix_inc[idx][pairs[idx].first];
            ++suffix_inc[idx][pairs[idx].second];
        }
        rem.assign(n + 1, 0);
        for (int v = 1; v <= n; ++v) rem[v] = seq.at(v) - shape.h();
    }

    bool feasible(int idx) const {
        if (!opt.prune) return true;
        auto [u, v] = pairs[idx];
        return rem[u] <= suffix_inc[idx][u] && rem[v] <= suffix_inc[idx][v];
    }

    void run() {
        for (int v = 1; v <= seq.n(); ++v)
            if (rem[v] < 0) return;
        rec(0);
    }

    void rec(int idx) {
        if (stopped) return;
        if (idx == static_cast<int>(pairs.size())) {
            for (int v = 1; v <= seq.n(); ++v)
                if (rem[v] != 0) return;
            ++count;
            if (!emit(g)) stopped = true;
            if (opt.limit >= 0 && count >= opt.limit) stopped = true;
            return;
        }
        auto [u, v] = pairs[idx];
        if (!feasible(idx)) return;
        if (rem[u] > 0 && rem[v] > 0) {
            g.add_edge(u, v);
            --rem[u];
            --rem[v];
            rec(idx + 1);
            ++rem[u];
            ++rem[v];
            g.remove_edge(u, v);
            if (stopped) return;
        }
        // exclude the pair; a vertex whose incident pairs are exhausted
        // must already be satisfied (checked by feasible at the next probe)
        rec(idx + 1);
    }
};

}  // namespace detail

/// Streams every realization of seq over its shape to the callback (return
/// false to stop early); returns how many were produced.
inline std::int64_t enumerate_realizations(const DegreeSequence& seq,
                                           const std::function<bool(const LabelledGraph&)>& emit,
                                           const EnumerateOptions& opt = {}) {
    if (seq.n() > opt.cap)
        throw CapExceeded("enumeration cap exceeded: n = " + std::to_string(seq.n()) +
                          " > " + std::to_string(opt.cap));
    if (!seq.sorted() || seq.n() % (seq.h + 1) != 0)
        throw ContractViolation("enumerate_realizations: malformed sequence");
    FactorShape shape(seq.h, seq.n());
    detail::Enumerator e(seq, shape, opt, emit);
    e.run();
    return e.count;
}

inline bool decide_exists(const DegreeSequence& seq, int cap = kDefaultCap) {
    EnumerateOptions opt;
    opt.cap = cap;
    opt.limit = 1;
    return enumerate_realizations(seq, [](const LabelledGraph&) { return false; }, opt) > 0;
}

/// G' = g minus the H edges whose endpoints both have index > k. The
/// degrees drop by h-s inside v_k's block beyond k and by h in every later
/// block.
inline LabelledGraph residual_graph(const LabelledGraph& g, const FactorShape& shape, int k) {
    if (!is_h_spanning(g, shape)) throw ContractViolation("residual_graph: g does not span H");
    if (k < 1 || k > shape.n()) throw ContractViolation("residual_graph: k out of range");
    LabelledGraph out = g;
    for (int u = k + 1; u <= shape.n(); ++u)
        for (int v = u + 1; v <= shape.n(); ++v)
            if (shape.h_edge(u, v)) out.remove_edge(u, v);
    return out;
}

struct SweepEntry {
    int h = 0;
    int n = 0;
    std::int64_t total = 0;
    std::int64_t accepted = 0;
    std::vector<DegreeSequence> disagreements;
};

struct SweepReport {
    std::vector<SweepEntry> entries;

    std::int64_t disagreement_count() const {
        std::int64_t c = 0;
        for (const auto& e : entries) c += static_cast<std::int64_t>(e.disagreements.size());
        return c;
    }

    std::string to_text() const {
        std::ostringstream os;
        for (const auto& e : entries) {
            os << "h=" << e.h << " n=" << e.n << " total=" << e.total
               << " accepted=" << e.accepted << " disagreements=" << e.disagreements.size()
               << "\n";
            for (const auto& seq : e.disagreements) {
                os << "  disagree h=" << seq.h << " seq=";
                for (int i = 1; i <= seq.n(); ++i) os << (i > 1 ? "," : "") << seq.at(i);
                os << "\n";
            }
        }
        return os.str();
    }
};

namespace detail {

template <typename F>
void for_each_sorted_sequence(int n, int lo, int hi, F&& f) {
    std::vector<int> d(n, hi);
    while (true) {
        f(d);
        int i = n - 1;
        while (i >= 0 && d[i] == lo) --i;
        if (i < 0) return;
        --d[i];
        for (int j = i + 1; j < n; ++j) d[j] = d[i];
    }
}

}  // namespace detail

/// Exhaustive biconditional test: for each h and each admissible n <= cap,
/// compare the checker against brute-force existence on every sorted
/// sequence with h <= d_i <= n-1. Disagreements should never occur.
inline SweepReport sweep_equivalence(const std::vector<int>& hs, int ncap,
                                     int enum_cap = kDefaultCap) {
    if (ncap > enum_cap) throw CapExceeded("sweep cap exceeds enumeration cap");
    SweepReport report;
    for (int h : hs) {
        for (int n = h + 1; n <= ncap; n += h + 1) {
            SweepEntry entry;
            entry.h = h;
            entry.n = n;
            detail::for_each_sorted_sequence(n, h, n - 1, [&](const std::vector<int>& d) {
                DegreeSequence seq{d, h};
                ++entry.total;
                const bool predicted = checker::check_h_realizable(seq).accepted;
                const bool actual = decide_exists(seq, enum_cap);
                if (predicted) ++entry.accepted;
                if (predicted != actual) entry.disagreements.push_back(seq);
            });
            report.entries.push_back(std::move(entry));
        }
    }
    return report;
}

/// Deterministic rejection sampler: sorted values in [h, n-1], redrawn
/// until the sum is even and the checker accepts.
inline DegreeSequence gen_sequence(int n, int h, std::uint64_t seed, int retry_budget = 10000) {
    if (h < 0 || n < 1 || n % (h + 1) != 0)
        throw ContractViolation("gen_sequence: n must be a positive multiple of h+1");
    std::mt19937_64 rng(seed);
    const std::uint64_t range = static_cast<std::uint64_t>(n - h);  // values h..n-1
    for (int attempt = 0; attempt < retry_budget; ++attempt) {
        std::vector<int> d(n);
        for (int i = 0; i < n; ++i) {
            // unbiased bounded draw; avoids distribution objects so output
            // is identical across standard library implementations
            std::uint64_t x;
            const std::uint64_t lim = ~std::uint64_t{0} - (~std::uint64_t{0} % range);
            do { x = rng(); } while (x >= lim);
            d[i] = h + static_cast<int>(x % range);
        }
        std::sort(d.begin(), d.end(), std::greater<>());
        DegreeSequence seq{d, h};
        if (seq.sum() % 2 != 0) continue;
        if (checker::check_h_realizable(seq).accepted) return seq;
    }
    throw RetryBudgetExceeded("gen_sequence: no accepted sequence within retry budget");
}

}  // namespace oracle
}  // namespace hfactor

#endif
