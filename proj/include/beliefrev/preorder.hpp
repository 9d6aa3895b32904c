#pragma once

#include "algebra.hpp"

#include <vector>

namespace beliefrev
{

// Total preorder on worlds as a rank per world; lower rank is strictly more
// plausible. Ranks are always normalized to the gap-free range 0..k.
class total_preorder
{
    std::vector< int > _rank;

public:
    explicit total_preorder( std::vector< int > ranks );

    // Levels most-plausible first; they must partition 0..universe_size-1.
    static total_preorder from_levels( const std::vector< std::vector< int > >& levels, int universe_size );

    [[nodiscard]] int universe_size() const { return static_cast< int >( _rank.size() ); }
    [[nodiscard]] int rank( int world ) const { return _rank.at( world ); }
    [[nodiscard]] const std::vector< int >& ranks() const { return _rank; }
    [[nodiscard]] int level_count() const;
    [[nodiscard]] std::vector< std::vector< int > > levels() const;
    [[nodiscard]] bool strictly_before( int a, int b ) const { return rank( a ) < rank( b ); }
    [[nodiscard]] bool equivalent( int a, int b ) const { return rank( a ) == rank( b ); }

    // The levels read as an ordered partition.
    [[nodiscard]] backbone as_backbone() const;

    friend bool operator==( const total_preorder&, const total_preorder& ) = default;
};

[[nodiscard]] std::string one_based_label( const total_preorder& p );

// (U, V) is kept iff some world of U is strictly below every world of V.
[[nodiscard]] belief_algebra cba_from_preorder( const total_preorder& p );

// Inverse of cba_from_preorder; throws not_cba_error for incomplete algebras.
[[nodiscard]] total_preorder preorder_from_cba( const belief_algebra& g );

// Lexicographic refinement: order by p2, break p2-ties by p1.
[[nodiscard]] total_preorder revise_preorder( const total_preorder& p1, const total_preorder& p2 );

} // namespace beliefrev
