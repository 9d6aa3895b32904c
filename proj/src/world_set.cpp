#include "beliefrev/world_set.hpp"
#include "beliefrev/errors.hpp"

#include <bit>

namespace beliefrev
{

namespace
{

void check_universe( int universe_size )
{
    if ( universe_size < 0 || universe_size > max_representable_worlds )
        throw cap_exceeded( universe_size, max_representable_worlds );
}

void check_same_universe( const world_set& lhs, const world_set& rhs )
{
    if ( lhs.universe_size() != rhs.universe_size() )
        throw universe_mismatch( lhs.universe_size(), rhs.universe_size() );
}

} // namespace

world_set::world_set( int universe_size ) : _universe{ universe_size }
{
    check_universe( universe_size );
}

world_set::world_set( world_mask bits, int universe_size ) : _bits{ bits }, _universe{ universe_size }
{
    check_universe( universe_size );
    if ( ( bits & ~full_mask( universe_size ) ) != 0 )
        throw input_error( "world set has members outside a universe of " + std::to_string( universe_size )
                           + " worlds" );
}

world_set world_set::full( int universe_size )
{
    check_universe( universe_size );
    return { full_mask( universe_size ), universe_size };
}

world_set world_set::singleton( int world, int universe_size )
{
    return of( { world }, universe_size );
}

world_set world_set::of( std::initializer_list< int > worlds, int universe_size )
{
    return of( std::vector< int >( worlds ), universe_size );
}

world_set world_set::of( const std::vector< int >& worlds, int universe_size )
{
    check_universe( universe_size );
    world_mask bits = 0;
    for ( int w : worlds )
    {
        if ( w < 0 || w >= universe_size )
            throw input_error( "world index " + std::to_string( w ) + " out of range for "
                               + std::to_string( universe_size ) + " worlds" );
        bits |= world_mask{ 1 } << w;
    }
    return { bits, universe_size };
}

int world_set::size() const
{
    return std::popcount( _bits );
}

bool world_set::contains( int world ) const
{
    return world >= 0 && world < _universe && ( ( _bits >> world ) & 1u ) != 0;
}

bool world_set::subset_of( const world_set& other ) const
{
    check_same_universe( *this, other );
    return ( _bits & ~other._bits ) == 0;
}

std::vector< int > world_set::members() const
{
    std::vector< int > out;
    for ( int w = 0; w < _universe; ++w )
        if ( contains( w ) )
            out.push_back( w );
    return out;
}

world_set world_set::complement() const
{
    return { full_mask( _universe ) & ~_bits, _universe };
}

world_set operator|( const world_set& lhs, const world_set& rhs )
{
    check_same_universe( lhs, rhs );
    return { lhs._bits | rhs._bits, lhs._universe };
}

world_set operator&( const world_set& lhs, const world_set& rhs )
{
    check_same_universe( lhs, rhs );
    return { lhs._bits & rhs._bits, lhs._universe };
}

world_set operator-( const world_set& lhs, const world_set& rhs )
{
    check_same_universe( lhs, rhs );
    return { lhs._bits & ~rhs._bits, lhs._universe };
}

std::string one_based_label( const world_set& set )
{
    std::string out = "{";
    bool first = true;
    for ( int w : set.members() )
    {
        if ( !first )
            out += ",";
        out += std::to_string( w + 1 );
        first = false;
    }
    return out + "}";
}

std::string zero_based_label( const world_set& set )
{
    std::string out = "[";
    bool first = true;
    for ( int w : set.members() )
    {
        if ( !first )
            out += ",";
        out += std::to_string( w );
        first = false;
    }
    return out + "]";
}

} // namespace beliefrev
