#pragma once

#include "algebra.hpp"
#include "preorder.hpp"

#include <cstdint>
#include <random>

// Brute-force references and seeded instance generators. Nothing here shares
// closure code with the algebra module.
namespace beliefrev::oracle
{

inline constexpr int exhaustive_limit = 5;

struct sample_config
{
    int universe_size = 4;
    std::uint64_t seed = 0;
    int trials = 1;
};

// std::mt19937_64 with hand-rolled bounded draws, so sequences are identical
// across standard library implementations.
class rng
{
    std::mt19937_64 _engine;

public:
    explicit rng( std::uint64_t seed ) : _engine{ seed } {}

    // Uniform in [0, bound).
    std::uint64_t below( std::uint64_t bound );
    // Uniform in [lo, hi].
    int between( int lo, int hi );
    // True with probability numerator / denominator.
    bool chance( std::uint64_t numerator, std::uint64_t denominator );
};

// Round-based closure: every round applies A1, every A3 expansion (all
// supersets / subsets, literally) and A4 over all pairs of pairs, until no
// change. Then checks A2 and the empty-left exclusion.
[[nodiscard]] relation naive_gen( const relation& omega );

// Uniform surjection of the worlds onto 0..k for uniform k < universe_size.
[[nodiscard]] total_preorder sample_preorder( rng& r, int universe_size );
[[nodiscard]] total_preorder sample_preorder( const sample_config& cfg );

struct algebra_sample
{
    total_preorder preorder;
    relation omega;          // drawn from the complete algebra of preorder
    belief_algebra algebra;  // gen(omega)
};

[[nodiscard]] algebra_sample sample_belief_algebra( rng& r, int universe_size );
[[nodiscard]] algebra_sample sample_belief_algebra( const sample_config& cfg );

// A random algebra whose backbone is exactly the levels of p: Gen of the
// chain generators plus a random subset of the complete algebra of p.
[[nodiscard]] belief_algebra sample_with_backbone( rng& r, const total_preorder& p );

// Checks that candidate partitions the worlds, that disjoint subsets of one
// cell are never comparable, and that consecutive cells are ordered; then
// that no other ordered partition of the worlds passes the same checks.
[[nodiscard]] bool verify_backbone_exhaustive( const belief_algebra& g, const backbone& candidate );
[[nodiscard]] bool verify_backbone_exhaustive( const belief_algebra& g );

} // namespace beliefrev::oracle
