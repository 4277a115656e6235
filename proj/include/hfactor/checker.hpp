#ifndef HFACTOR_CHECKER_HPP
#define HFACTOR_CHECKER_HPP

#include <algorithm>
#include <cstdint>
#include <vector>

#include "hfactor/core.hpp"

// Exact evaluation of the realizability conditions: the classical graphic
// inequality, its clique-factor generalization, and the h = 1 special form.

namespace hfactor {
namespace checker {

/// s = k mod (h+1), the position of v_k within its block.
inline int residue(int k, int h) {
    if (k < 1 || h < 0) throw ContractViolation("residue: k >= 1 and h >= 0 required");
    return k % (h + 1);
}

/// The right side of the per-k bound, split into its three terms. Sum
/// limits truncate at n; an empty sum is 0 (reachable only at k = n).
struct BoundBreakdown {
    int k = 0;
    int s = 0;
    std::int64_t quadratic = 0;   // k(k-1)
    std::int64_t block_tail = 0;  // sum_{i=k+1}^{min(n,k+1+h-s)} min(d_i-h+s, k)
    std::int64_t remainder = 0;   // sum_{i=k+h-s+2}^{n} min(d_i-h, k)

    std::int64_t rhs() const { return quadratic + block_tail + remainder; }
};

inline BoundBreakdown rhs_bound(const DegreeSequence& seq, int k) {
    const int n = seq.n();
    const int h = seq.h;
    if (k < 1 || k > n) throw ContractViolation("rhs_bound: k out of range");
    BoundBreakdown b;
    b.k = k;
    b.s = residue(k, h);
    b.quadratic = static_cast<std::int64_t>(k) * (k - 1);
    const int tail_end = std::min(n, k + 1 + h - b.s);
    for (int i = k + 1; i <= tail_end; ++i)
        b.block_tail += std::min<std::int64_t>(seq.at(i) - h + b.s, k);
    for (int i = k + h - b.s + 2; i <= n; ++i)
        b.remainder += std::min<std::int64_t>(seq.at(i) - h, k);
    return b;
}

namespace detail {

// Structural screens shared by the three checkers, in fixed precedence:
// NotSorted, BelowH, NotMultiple, ParityOdd, DegreeCeiling.
inline std::optional<Verdict> structural(const DegreeSequence& seq, bool ceiling) {
    const int n = seq.n();
    if (n < 1) throw ContractViolation("checker: empty sequence");
    if (!seq.sorted()) return Verdict::fail(Failure::NotSorted);
    if (seq.at(n) < seq.h) return Verdict::fail(Failure::BelowH);
    if (n % (seq.h + 1) != 0) return Verdict::fail(Failure::NotMultiple);
    if (seq.sum() % 2 != 0) return Verdict::fail(Failure::ParityOdd);
    if (ceiling && seq.at(1) > n - 1) return Verdict::fail(Failure::DegreeCeiling);
    return std::nullopt;
}

// O(n^2) reference path: evaluate rhs_bound at every k directly.
inline Verdict inequality_naive(const DegreeSequence& seq) {
    std::int64_t lhs = 0;
    for (int k = 1; k <= seq.n(); ++k) {
        lhs += seq.at(k);
        const std::int64_t rhs = rhs_bound(seq, k).rhs();
        if (lhs > rhs) return Verdict::violated(k, lhs, rhs);
    }
    return Verdict::ok();
}

// O(n log n) path: the remainder sum splits at the first index with
// d_i - h < k (the sequence is non-increasing), found by binary search over
// a prefix-sum table; the block tail has at most h+1 terms.
inline Verdict inequality_fast(const DegreeSequence& seq) {
    const int n = seq.n();
    const int h = seq.h;
    std::vector<std::int64_t> pre(n + 1, 0);
    for (int i = 1; i <= n; ++i) pre[i] = pre[i - 1] + seq.at(i);

    std::int64_t lhs = 0;
    for (int k = 1; k <= n; ++k) {
        lhs += seq.at(k);
        const int s = k % (h + 1);
        std::int64_t rhs = static_cast<std::int64_t>(k) * (k - 1);
        const int tail_end = std::min(n, k + 1 + h - s);
        for (int i = k + 1; i <= tail_end; ++i)
            rhs += std::min<std::int64_t>(seq.at(i) - h + s, k);
        const int a = k + h - s + 2;
        if (a <= n) {
            // first index in [a, n] with d_i < k + h
            int lo = a, hi = n + 1;
            while (lo < hi) {
                int mid = (lo + hi) / 2;
                if (seq.at(mid) < k + h) hi = mid; else lo = mid + 1;
            }
            rhs += static_cast<std::int64_t>(lo - a) * k;
            rhs += (pre[n] - pre[lo - 1]) - static_cast<std::int64_t>(h) * (n - lo + 1);
        }
        if (lhs > rhs) return Verdict::violated(k, lhs, rhs);
    }
    return Verdict::ok();
}

}  // namespace detail

/// Full acceptance test: a sequence is accepted exactly when it is
/// H_h-realizable. Failure precedence is fixed so verdicts are stable:
/// NotSorted, BelowH, NotMultiple, ParityOdd, DegreeCeiling, then the
/// smallest violated k.
inline Verdict check_h_realizable(const DegreeSequence& seq) {
    if (auto v = detail::structural(seq, /*ceiling=*/true)) return *v;
    return detail::inequality_fast(seq);
}

/// Same contract through the O(n^2) reference path; tests compare the two.
inline Verdict check_h_realizable_naive(const DegreeSequence& seq) {
    if (auto v = detail::structural(seq, /*ceiling=*/true)) return *v;
    return detail::inequality_naive(seq);
}

/// Classical graphic-sequence test (h = 0): even sum plus the per-k bound
/// with no block corrections.
inline Verdict check_graphic(const DegreeSequence& seq) {
    if (seq.h != 0) throw ContractViolation("check_graphic: h must be 0");
    const int n = seq.n();
    if (n < 1) throw ContractViolation("checker: empty sequence");
    if (!seq.sorted()) return Verdict::fail(Failure::NotSorted);
    if (seq.sum() % 2 != 0) return Verdict::fail(Failure::ParityOdd);
    std::int64_t lhs = 0;
    for (int k = 1; k <= n; ++k) {
        lhs += seq.at(k);
        std::int64_t rhs = static_cast<std::int64_t>(k) * (k - 1);
        for (int i = k + 1; i <= n; ++i) rhs += std::min(seq.at(i), k);
        if (lhs > rhs) return Verdict::violated(k, lhs, rhs);
    }
    return Verdict::ok();
}

/// The h = 1 characterization in its original two-branch form, kept as an
/// independent cross-check of the general bound.
inline Verdict check_h1(const DegreeSequence& seq) {
    if (seq.h != 1) throw ContractViolation("check_h1: h must be 1");
    const int n = seq.n();
    if (n < 1) throw ContractViolation("checker: empty sequence");
    if (!seq.sorted()) return Verdict::fail(Failure::NotSorted);
    if (seq.at(n) < 1) return Verdict::fail(Failure::BelowH);
    if (n % 2 != 0) return Verdict::fail(Failure::NotMultiple);
    if (seq.sum() % 2 != 0) return Verdict::fail(Failure::ParityOdd);
    if (seq.at(1) > n - 1) return Verdict::fail(Failure::DegreeCeiling);
    std::int64_t lhs = 0;
    for (int k = 1; k <= n; ++k) {
        lhs += seq.at(k);
        std::int64_t rhs = static_cast<std::int64_t>(k) * (k - 1);
        if (k % 2 == 0) {
            for (int i = k + 1; i <= n; ++i) rhs += std::min(seq.at(i) - 1, k);
        } else {
            if (k + 1 <= n) rhs += std::min(seq.at(k + 1), k);
            for (int i = k + 2; i <= n; ++i) rhs += std::min(seq.at(i) - 1, k);
        }
        if (lhs > rhs) return Verdict::violated(k, lhs, rhs);
    }
    return Verdict::ok();
}

/// Per-k slack rhs - lhs of an accepted sequence; used by property tests.
inline std::vector<std::int64_t> slack_profile(const DegreeSequence& seq) {
    std::vector<std::int64_t> slack;
    slack.reserve(seq.n());
    std::int64_t lhs = 0;
    for (int k = 1; k <= seq.n(); ++k) {
        lhs += seq.at(k);
        slack.push_back(rhs_bound(seq, k).rhs() - lhs);
    }
    return slack;
}

}  // namespace checker
}  // namespace hfactor

#endif
