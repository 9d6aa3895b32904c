#include "beliefrev/relation.hpp"
#include "beliefrev/errors.hpp"

#include <algorithm>
#include <iterator>

namespace beliefrev
{

world_pair::world_pair( world_set left, world_set right ) : _left{ left }, _right{ right }
{
    if ( left.universe_size() != right.universe_size() )
        throw universe_mismatch( left.universe_size(), right.universe_size() );
    if ( left.intersects( right ) )
        throw input_error( "pair components are not disjoint: " + zero_based_label( left ) + " and "
                           + zero_based_label( right ) );
}

world_pair::world_pair( world_mask left, world_mask right, int universe_size )
        : world_pair( world_set{ left, universe_size }, world_set{ right, universe_size } )
{}

std::string one_based_label( const world_pair& pair )
{
    auto digits = []( const world_set& s ) {
        std::string out;
        bool wide = s.universe_size() > 9;
        for ( int w : s.members() )
        {
            if ( wide && !out.empty() )
                out += ".";
            out += std::to_string( w + 1 );
        }
        return out.empty() ? std::string{ "-" } : out;
    };
    return "(" + digits( pair.left() ) + "," + digits( pair.right() ) + ")";
}

relation::relation( int universe_size ) : _universe{ universe_size }
{
    if ( universe_size < 0 || universe_size > max_representable_worlds )
        throw cap_exceeded( universe_size, max_representable_worlds );
}

relation::relation( int universe_size, std::vector< world_pair > pairs )
        : relation( universe_size )
{
    for ( const auto& p : pairs )
        if ( p.universe_size() != universe_size )
            throw universe_mismatch( universe_size, p.universe_size() );
    std::sort( pairs.begin(), pairs.end() );
    pairs.erase( std::unique( pairs.begin(), pairs.end() ), pairs.end() );
    _pairs = std::move( pairs );
}

bool relation::contains( const world_pair& pair ) const
{
    return std::binary_search( _pairs.begin(), _pairs.end(), pair );
}

bool relation::contains( world_mask left, world_mask right ) const
{
    auto it = std::lower_bound( _pairs.begin(), _pairs.end(), std::pair{ left, right },
                                []( const world_pair& p, const std::pair< world_mask, world_mask >& k ) {
                                    return std::pair{ p.left().bits(), p.right().bits() } < k;
                                } );
    return it != _pairs.end() && it->left().bits() == left && it->right().bits() == right;
}

bool relation::insert( const world_pair& pair )
{
    if ( pair.universe_size() != _universe )
        throw universe_mismatch( _universe, pair.universe_size() );
    auto it = std::lower_bound( _pairs.begin(), _pairs.end(), pair );
    if ( it != _pairs.end() && *it == pair )
        return false;
    _pairs.insert( it, pair );
    return true;
}

relation relation::strict_part() const
{
    relation out( _universe );
    std::copy_if( _pairs.begin(), _pairs.end(), std::back_inserter( out._pairs ),
                  []( const world_pair& p ) { return !p.right().empty(); } );
    return out;
}

relation all_disjoint_pairs( int universe_size, int closure_cap )
{
    if ( universe_size > closure_cap )
        throw cap_exceeded( universe_size, closure_cap );
    relation probe( universe_size );
    const world_mask full = full_mask( universe_size );
    std::vector< world_pair > pairs;
    for ( world_mask u = 0;; ++u )
    {
        const world_mask rest = full & ~u;
        for ( world_mask v = 0;; ++v )
        {
            if ( ( v & u ) == 0 )
                pairs.emplace_back( u, v, universe_size );
            if ( v == rest )
                break;
        }
        if ( u == full )
            break;
    }
    return { universe_size, std::move( pairs ) };
}

relation trivial_pairs( int universe_size )
{
    relation probe( universe_size );
    std::vector< world_pair > pairs;
    for ( world_mask u = 1; u <= full_mask( universe_size ) && u != 0; ++u )
        pairs.emplace_back( u, 0, universe_size );
    return { universe_size, std::move( pairs ) };
}

namespace
{

void check_same_universe( const relation& lhs, const relation& rhs )
{
    if ( lhs.universe_size() != rhs.universe_size() )
        throw universe_mismatch( lhs.universe_size(), rhs.universe_size() );
}

} // namespace

bool is_subset( const relation& lhs, const relation& rhs )
{
    check_same_universe( lhs, rhs );
    return std::includes( rhs.begin(), rhs.end(), lhs.begin(), lhs.end() );
}

relation unite( const relation& lhs, const relation& rhs )
{
    check_same_universe( lhs, rhs );
    std::vector< world_pair > out;
    std::set_union( lhs.begin(), lhs.end(), rhs.begin(), rhs.end(), std::back_inserter( out ) );
    return { lhs.universe_size(), std::move( out ) };
}

relation intersect( const relation& lhs, const relation& rhs )
{
    check_same_universe( lhs, rhs );
    std::vector< world_pair > out;
    std::set_intersection( lhs.begin(), lhs.end(), rhs.begin(), rhs.end(), std::back_inserter( out ) );
    return { lhs.universe_size(), std::move( out ) };
}

relation difference( const relation& lhs, const relation& rhs )
{
    check_same_universe( lhs, rhs );
    std::vector< world_pair > out;
    std::set_difference( lhs.begin(), lhs.end(), rhs.begin(), rhs.end(), std::back_inserter( out ) );
    return { lhs.universe_size(), std::move( out ) };
}

std::string one_based_label( const relation& rel )
{
    std::string out = "{";
    bool first = true;
    for ( const auto& p : rel )
    {
        if ( !first )
            out += ",";
        out += one_based_label( p );
        first = false;
    }
    return out + "}";
}

relation parse_one_based_listing( std::string_view text, int universe_size )
{
    relation out( universe_size );
    std::size_t pos = 0;
    auto skip = [ & ] {
        while ( pos < text.size() && ( text[ pos ] == ' ' || text[ pos ] == ',' || text[ pos ] == '\n' ) )
            ++pos;
    };
    auto side = [ & ]( char stop ) {
        world_mask bits = 0;
        while ( pos < text.size() && text[ pos ] != stop )
        {
            const char c = text[ pos++ ];
            if ( c == '-' || c == ' ' )
                continue;
            if ( c < '1' || c > '9' || c - '1' >= universe_size )
                throw parse_error( "bad world digit '" + std::string( 1, c ) + "'", pos - 1 );
            bits |= world_mask{ 1 } << ( c - '1' );
        }
        if ( pos >= text.size() )
            throw parse_error( std::string( "expected '" ) + stop + "'", pos );
        ++pos;
        return bits;
    };
    skip();
    while ( pos < text.size() )
    {
        if ( text[ pos ] != '(' )
            throw parse_error( "expected '('", pos );
        ++pos;
        const world_mask left = side( ',' );
        const world_mask right = side( ')' );
        out.insert( world_pair( left, right, universe_size ) );
        skip();
    }
    return out;
}

} // namespace beliefrev
