#ifndef HFACTOR_FACTORIZE_HPP
#define HFACTOR_FACTORIZE_HPP

#include <stdexcept>
#include <vector>

#include "hfactor/core.hpp"

// Splitting the clique factor of a realization into h pairwise-disjoint
// perfect matchings. Only odd h is supported: the blocks then have even
// size and each K_{h+1} factorizes on its own.

namespace hfactor {
namespace factorize {

class UnsupportedEvenH : public std::invalid_argument {
public:
    UnsupportedEvenH() : std::invalid_argument("1-factorization implemented for odd h only") {}
};

/// Circle-method 1-factorization of K_{h+1} on labels 0..h. Round t pairs
/// the fixed label h with t, and (t+j) mod h with (t-j) mod h for
/// j = 1..(h-1)/2. The h rounds partition all pairs.
inline std::vector<std::vector<VertexPair>> round_robin_block(int h) {
    if (h < 1 || h % 2 == 0) throw UnsupportedEvenH();
    std::vector<std::vector<VertexPair>> rounds(h);
    for (int t = 0; t < h; ++t) {
        rounds[t].push_back(ordered(h, t));
        for (int j = 1; j <= (h - 1) / 2; ++j)
            rounds[t].push_back(ordered((t + j) % h, (t - j + h) % h));
    }
    return rounds;
}

/// Matching t is the union over blocks of round t, translated to each
/// block's labels. Outputs are pairwise disjoint and union to E(H).
inline std::vector<std::vector<VertexPair>> extract_matchings(const LabelledGraph& g,
                                                              const FactorShape& shape) {
    const int h = shape.h();
    if (h < 1 || h % 2 == 0) throw UnsupportedEvenH();
    if (!is_h_spanning(g, shape))
        throw ContractViolation("extract_matchings: graph does not span the clique factor");
    auto rounds = round_robin_block(h);
    std::vector<std::vector<VertexPair>> matchings(h);
    for (int t = 0; t < h; ++t) {
        for (int b = 1; b <= shape.block_count(); ++b) {
            const int base = shape.block_begin(b);
            for (auto [x, y] : rounds[t]) matchings[t].push_back(ordered(base + x, base + y));
        }
    }
    return matchings;
}

}  // namespace factorize
}  // namespace hfactor

#endif
