#include "beliefrev/oracle.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <set>
#include <utility>

namespace beliefrev::oracle
{

std::uint64_t rng::below( std::uint64_t bound )
{
    if ( bound == 0 )
        throw input_error( "empty sampling range" );
    const std::uint64_t max = std::numeric_limits< std::uint64_t >::max();
    const std::uint64_t limit = max - ( max % bound );
    std::uint64_t x;
    do
        x = _engine();
    while ( x >= limit );
    return x % bound;
}

int rng::between( int lo, int hi )
{
    return lo + static_cast< int >( below( static_cast< std::uint64_t >( hi - lo + 1 ) ) );
}

bool rng::chance( std::uint64_t numerator, std::uint64_t denominator )
{
    return below( denominator ) < numerator;
}

namespace
{

using raw_pair = std::pair< world_mask, world_mask >;

std::vector< world_mask > subsets_of( world_mask mask )
{
    std::vector< world_mask > out;
    for ( world_mask s = 0; s <= mask; ++s )
        if ( ( s & ~mask ) == 0 )
            out.push_back( s );
    return out;
}

} // namespace

relation naive_gen( const relation& omega )
{
    const int n = omega.universe_size();
    if ( n > exhaustive_limit )
        throw cap_exceeded( n, exhaustive_limit );
    const world_mask full = full_mask( n );

    std::set< raw_pair > current;
    for ( const auto& p : omega )
        current.emplace( p.left().bits(), p.right().bits() );

    while ( true )
    {
        std::set< raw_pair > next = current;
        // A1
        for ( world_mask u = 1; u <= full; ++u )
            next.emplace( u, 0 );
        // A3: U1 >= U, V1 <= V, U1 & V1 empty.
        for ( const auto& [ u, v ] : current )
            for ( world_mask v1 : subsets_of( v ) )
                for ( world_mask extra : subsets_of( full & ~u & ~v1 ) )
                    next.emplace( u | extra, v1 );
        // A4
        for ( const auto& [ u1, v1 ] : current )
            for ( const auto& [ u2, v2 ] : current )
                if ( ( u1 | v1 ) == ( u2 | v2 ) )
                    next.emplace( u1 & u2, v1 | v2 );
        if ( next.size() == current.size() )
            break;
        current = std::move( next );
    }

    for ( const auto& [ u, v ] : current )
    {
        if ( u == 0 )
            throw conflict_error( "closure contains an empty left side", world_pair( u, v, n ) );
        if ( current.contains( { v, u } ) )
            throw conflict_error( "closure contains a symmetric pair", world_pair( u, v, n ) );
    }

    std::vector< world_pair > pairs;
    for ( const auto& [ u, v ] : current )
        pairs.emplace_back( u, v, n );
    return { n, std::move( pairs ) };
}

total_preorder sample_preorder( rng& r, int universe_size )
{
    if ( universe_size < 1 )
        throw input_error( "cannot sample a preorder over no worlds" );
    const int top = static_cast< int >( r.below( static_cast< std::uint64_t >( universe_size ) ) );
    std::vector< int > ranks( static_cast< std::size_t >( universe_size ) );
    while ( true )
    {
        std::vector< bool > hit( static_cast< std::size_t >( top + 1 ), false );
        for ( auto& rank : ranks )
        {
            rank = r.between( 0, top );
            hit[ rank ] = true;
        }
        if ( std::find( hit.begin(), hit.end(), false ) == hit.end() )
            return total_preorder( ranks );
    }
}

total_preorder sample_preorder( const sample_config& cfg )
{
    rng r( cfg.seed );
    return sample_preorder( r, cfg.universe_size );
}

algebra_sample sample_belief_algebra( rng& r, int universe_size )
{
    auto preorder = sample_preorder( r, universe_size );
    const auto complete = cba_from_preorder( preorder ).pairs().strict_part();
    const auto density = r.below( 5 );
    relation omega( universe_size );
    for ( const auto& p : complete )
        if ( r.chance( density, 4 ) )
            omega.insert( p );
    auto algebra = gen( omega );
    return { std::move( preorder ), std::move( omega ), std::move( algebra ) };
}

algebra_sample sample_belief_algebra( const sample_config& cfg )
{
    rng r( cfg.seed );
    return sample_belief_algebra( r, cfg.universe_size );
}

belief_algebra sample_with_backbone( rng& r, const total_preorder& p )
{
    const auto complete = cba_from_preorder( p ).pairs().strict_part();
    const auto density = r.below( 5 );
    relation omega = chain_generators( p.as_backbone() );
    for ( const auto& pair : complete )
        if ( r.chance( density, 4 ) )
            omega.insert( pair );
    return gen( omega );
}

namespace
{

bool satisfies_chain( const relation& rel, const std::vector< world_mask >& cells )
{
    const int n = rel.universe_size();
    world_mask covered = 0;
    for ( world_mask c : cells )
    {
        if ( c == 0 || ( covered & c ) != 0 )
            return false;
        covered |= c;
    }
    if ( covered != full_mask( n ) )
        return false;

    for ( std::size_t i = 0; i + 1 < cells.size(); ++i )
        if ( !rel.contains( cells[ i ], cells[ i + 1 ] ) )
            return false;

    for ( world_mask c : cells )
        for ( world_mask v1 : subsets_of( c ) )
        {
            if ( v1 == 0 )
                continue;
            for ( world_mask v2 : subsets_of( c & ~v1 ) )
                if ( v2 != 0 && ( rel.contains( v1, v2 ) || rel.contains( v2, v1 ) ) )
                    return false;
        }
    return true;
}

} // namespace

bool verify_backbone_exhaustive( const belief_algebra& g, const backbone& candidate )
{
    const int n = g.universe_size();
    if ( n > exhaustive_limit )
        throw cap_exceeded( n, exhaustive_limit );
    if ( candidate.universe_size() != n )
        return false;

    std::vector< world_mask > wanted;
    for ( const auto& cell : candidate.cells() )
        wanted.push_back( cell.bits() );
    if ( !satisfies_chain( g.pairs(), wanted ) )
        return false;

    int matches = 0;
    std::vector< world_mask > cells;
    std::function< void( world_mask ) > extend = [ & ]( world_mask remaining ) {
        if ( remaining == 0 )
        {
            if ( satisfies_chain( g.pairs(), cells ) )
                ++matches;
            return;
        }
        for ( world_mask c : subsets_of( remaining ) )
        {
            if ( c == 0 )
                continue;
            cells.push_back( c );
            extend( remaining & ~c );
            cells.pop_back();
        }
    };
    extend( full_mask( n ) );
    return matches == 1;
}

bool verify_backbone_exhaustive( const belief_algebra& g )
{
    return verify_backbone_exhaustive( g, g.chain() );
}

} // namespace beliefrev::oracle
