#pragma once

#include "beliefrev/algebra.hpp"
#include "beliefrev/preorder.hpp"
#include "beliefrev/relation.hpp"

#include <functional>
#include <string>
#include <vector>

namespace beliefrev::test
{

// "(12,34),(1,-)" style listing, 1-based worlds.
inline relation listing( const std::string& text, int n = 4 )
{
    return parse_one_based_listing( text, n );
}

inline relation with_trivial( const relation& rel )
{
    return unite( rel, trivial_pairs( rel.universe_size() ) );
}

inline belief_algebra gen_of( const std::string& text, int n = 4 )
{
    return gen( listing( text, n ) );
}

// Backbone from 1-based cells.
inline backbone chain( std::initializer_list< std::initializer_list< int > > cells, int n = 4 )
{
    std::vector< world_set > out;
    for ( const auto& cell : cells )
    {
        world_set s( n );
        for ( int w : cell )
            s = s | world_set::singleton( w - 1, n );
        out.push_back( s );
    }
    return backbone( std::move( out ) );
}

// Every ordered partition of the n worlds, as cell masks.
inline void for_each_ordered_partition( int n, const std::function< void( const std::vector< world_mask >& ) >& fn )
{
    std::vector< world_mask > cells;
    std::function< void( world_mask ) > rec = [ & ]( world_mask remaining ) {
        if ( remaining == 0 )
        {
            fn( cells );
            return;
        }
        for ( world_mask c = remaining;; c = ( c - 1 ) & remaining )
        {
            if ( c == 0 )
                break;
            cells.push_back( c );
            rec( remaining & ~c );
            cells.pop_back();
        }
    };
    rec( full_mask( n ) );
}

// Complete algebra of an ordered partition, straight from the min-rank
// definition: (U,V) is in iff V is empty and U is not, or some world of U is
// ranked strictly before every world of V.
inline relation complete_by_definition( const std::vector< world_mask >& cells, int n )
{
    std::vector< int > rank( static_cast< std::size_t >( n ) );
    for ( std::size_t i = 0; i < cells.size(); ++i )
        for ( int w = 0; w < n; ++w )
            if ( cells[ i ] >> w & 1u )
                rank[ w ] = static_cast< int >( i );
    auto min_rank = [ & ]( world_mask s ) {
        int best = n + 1;
        for ( int w = 0; w < n; ++w )
            if ( s >> w & 1u )
                best = std::min( best, rank[ w ] );
        return best;
    };
    relation out( n );
    for ( const auto& p : all_disjoint_pairs( n ) )
    {
        const auto u = p.left().bits();
        const auto v = p.right().bits();
        if ( u != 0 && ( v == 0 || min_rank( u ) < min_rank( v ) ) )
            out.insert( p );
    }
    return out;
}

// The completion found by search: the unique complete algebra containing g
// whose backbone is the backbone of g.
inline relation completion_by_search( const belief_algebra& g )
{
    const int n = g.universe_size();
    std::vector< relation > found;
    for_each_ordered_partition( n, [ & ]( const std::vector< world_mask >& cells ) {
        auto candidate = complete_by_definition( cells, n );
        if ( !is_subset( g.pairs(), candidate ) )
            return;
        std::vector< world_set > sets;
        for ( auto c : cells )
            sets.emplace_back( c, n );
        if ( extract_backbone( candidate ) == backbone( sets ) && backbone( sets ) == g.chain() )
            found.push_back( std::move( candidate ) );
    } );
    if ( found.size() != 1 )
        throw internal_error( "completion search found " + std::to_string( found.size() ) + " candidates" );
    return found.front();
}

} // namespace beliefrev::test
