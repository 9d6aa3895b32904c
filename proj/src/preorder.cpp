#include "beliefrev/preorder.hpp"

#include <algorithm>
#include <numeric>

namespace beliefrev
{

namespace
{

std::vector< int > normalize( const std::vector< int >& ranks )
{
    std::vector< int > used = ranks;
    std::sort( used.begin(), used.end() );
    used.erase( std::unique( used.begin(), used.end() ), used.end() );
    std::vector< int > out;
    out.reserve( ranks.size() );
    for ( int r : ranks )
        out.push_back( static_cast< int >( std::lower_bound( used.begin(), used.end(), r ) - used.begin() ) );
    return out;
}

} // namespace

total_preorder::total_preorder( std::vector< int > ranks )
{
    if ( ranks.empty() )
        throw input_error( "a preorder needs at least one world" );
    if ( static_cast< int >( ranks.size() ) > max_representable_worlds )
        throw cap_exceeded( static_cast< int >( ranks.size() ), max_representable_worlds );
    if ( std::any_of( ranks.begin(), ranks.end(), []( int r ) { return r < 0; } ) )
        throw input_error( "preorder ranks must be non-negative" );
    _rank = normalize( ranks );
}

total_preorder total_preorder::from_levels( const std::vector< std::vector< int > >& levels, int universe_size )
{
    if ( universe_size < 1 || universe_size > max_representable_worlds )
        throw input_error( "invalid preorder universe of " + std::to_string( universe_size ) + " worlds" );
    std::vector< int > ranks( static_cast< std::size_t >( universe_size ), -1 );
    for ( std::size_t level = 0; level < levels.size(); ++level )
    {
        if ( levels[ level ].empty() )
            throw input_error( "preorder level " + std::to_string( level ) + " is empty" );
        for ( int w : levels[ level ] )
        {
            if ( w < 0 || w >= universe_size )
                throw input_error( "world index " + std::to_string( w ) + " out of range" );
            if ( ranks[ w ] != -1 )
                throw input_error( "world " + std::to_string( w ) + " appears in two preorder levels" );
            ranks[ w ] = static_cast< int >( level );
        }
    }
    if ( std::find( ranks.begin(), ranks.end(), -1 ) != ranks.end() )
        throw input_error( "preorder levels do not cover every world" );
    return total_preorder( std::move( ranks ) );
}

int total_preorder::level_count() const
{
    return *std::max_element( _rank.begin(), _rank.end() ) + 1;
}

std::vector< std::vector< int > > total_preorder::levels() const
{
    std::vector< std::vector< int > > out( static_cast< std::size_t >( level_count() ) );
    for ( int w = 0; w < universe_size(); ++w )
        out[ _rank[ w ] ].push_back( w );
    return out;
}

backbone total_preorder::as_backbone() const
{
    std::vector< world_set > cells;
    for ( const auto& level : levels() )
        cells.push_back( world_set::of( level, universe_size() ) );
    return backbone( std::move( cells ) );
}

std::string one_based_label( const total_preorder& p )
{
    std::string out;
    for ( const auto& level : p.levels() )
    {
        if ( !out.empty() )
            out += " < ";
        for ( std::size_t i = 0; i < level.size(); ++i )
            out += ( i ? "~" : "" ) + std::string( "w" ) + std::to_string( level[ i ] + 1 );
    }
    return out;
}

belief_algebra cba_from_preorder( const total_preorder& p )
{
    const int n = p.universe_size();
    const world_mask full = full_mask( n );

    auto best_rank = [ & ]( world_mask m ) {
        int best = n;
        for ( int w = 0; w < n; ++w )
            if ( ( m >> w ) & 1u )
                best = std::min( best, p.rank( w ) );
        return best;
    };

    std::vector< world_pair > pairs;
    for ( world_mask u = 1; u <= full && u != 0; ++u )
    {
        const world_mask rest = full & ~u;
        const int u_best = best_rank( u );
        for ( world_mask v = 0; v <= rest; ++v )
        {
            if ( ( v & u ) != 0 )
                continue;
            // Some world of U beats every world of V; vacuous for V empty.
            if ( v == 0 || u_best < best_rank( v ) )
                pairs.emplace_back( u, v, n );
        }
    }
    return belief_algebra::from_closed_relation( relation( n, std::move( pairs ) ) );
}

total_preorder preorder_from_cba( const belief_algebra& g )
{
    if ( !is_cba( g ) )
        throw not_cba_error( "algebra with backbone " + one_based_label( g.chain() ) + " is not complete" );
    const int n = g.universe_size();
    std::vector< int > ranks( static_cast< std::size_t >( n ), 0 );
    for ( int w = 0; w < n; ++w )
        for ( int other = 0; other < n; ++other )
            if ( other != w && g.pairs().contains( world_mask{ 1 } << other, world_mask{ 1 } << w ) )
                ++ranks[ w ];
    return total_preorder( std::move( ranks ) );
}

total_preorder revise_preorder( const total_preorder& p1, const total_preorder& p2 )
{
    if ( p1.universe_size() != p2.universe_size() )
        throw universe_mismatch( p1.universe_size(), p2.universe_size() );
    const int n = p1.universe_size();
    std::vector< int > order( static_cast< std::size_t >( n ) );
    std::iota( order.begin(), order.end(), 0 );
    auto key = [ & ]( int w ) { return std::pair{ p2.rank( w ), p1.rank( w ) }; };
    std::sort( order.begin(), order.end(), [ & ]( int a, int b ) { return key( a ) < key( b ); } );

    std::vector< int > ranks( static_cast< std::size_t >( n ) );
    int level = 0;
    for ( std::size_t i = 0; i < order.size(); ++i )
    {
        if ( i > 0 && key( order[ i ] ) != key( order[ i - 1 ] ) )
            ++level;
        ranks[ order[ i ] ] = level;
    }
    return total_preorder( std::move( ranks ) );
}

} // namespace beliefrev
