#include "beliefrev/algebra.hpp"
#include "pair_index.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>

namespace beliefrev
{

namespace
{

// Iterates every subset of mask, including mask itself and 0.
template< typename Fn >
void for_each_subset( world_mask mask, Fn&& fn )
{
    world_mask s = mask;
    while ( true )
    {
        fn( s );
        if ( s == 0 )
            break;
        s = ( s - 1 ) & mask;
    }
}

void require_same_universe( const belief_algebra& lhs, const belief_algebra& rhs )
{
    if ( lhs.universe_size() != rhs.universe_size() )
        throw universe_mismatch( lhs.universe_size(), rhs.universe_size() );
}

} // namespace

bool axiom_report::all_passed() const
{
    return std::all_of( axioms.begin(), axioms.end(), []( const axiom_result& r ) { return r.passed; } );
}

std::string axiom_report::summary() const
{
    std::string out;
    for ( const auto& a : axioms )
    {
        if ( a.passed )
            continue;
        if ( !out.empty() )
            out += "; ";
        out += a.name + " fails: " + a.detail;
    }
    return out.empty() ? "all axioms hold" : out;
}

axiom_report check_axioms( const relation& rel )
{
    const int n = rel.universe_size();
    const world_mask full = full_mask( n );
    axiom_report report;
    for ( std::size_t i = 0; i < report.axioms.size(); ++i )
        report.axioms[ i ].name = "A" + std::to_string( i );

    auto fail = [ & ]( std::size_t axiom, const world_pair& witness, std::string detail ) {
        auto& r = report.axioms[ axiom ];
        if ( !r.passed )
            return;
        r.passed = false;
        r.witness = witness;
        r.detail = std::move( detail );
    };

    // A0 holds by construction of world_pair; re-checked for completeness.
    for ( const auto& p : rel )
        if ( p.left().intersects( p.right() ) )
            fail( 0, p, "components overlap in " + one_based_label( p ) );

    // A1: (U, {}) present iff U nonempty.
    if ( rel.contains( 0, 0 ) )
        fail( 1, world_pair( 0, 0, n ), "(-,-) is present but the empty set is not above itself" );
    for ( world_mask u = 1; u <= full && u != 0; ++u )
        if ( !rel.contains( u, 0 ) )
        {
            fail( 1, world_pair( u, 0, n ), "missing trivial pair " + one_based_label( world_pair( u, 0, n ) ) );
            break;
        }

    // A2: no symmetric pair.
    for ( const auto& p : rel )
        if ( rel.contains( p.right().bits(), p.left().bits() ) )
        {
            fail( 2, p, one_based_label( p ) + " and its mirror are both present" );
            break;
        }

    // A3: closure under single-world steps is equivalent to the full rule.
    for ( const auto& p : rel )
    {
        if ( !report.axioms[ 3 ].passed )
            break;
        const world_mask u = p.left().bits();
        const world_mask v = p.right().bits();
        for ( int w = 0; w < n && report.axioms[ 3 ].passed; ++w )
        {
            const world_mask bit = world_mask{ 1 } << w;
            auto need = [ & ]( world_mask nu, world_mask nv ) {
                if ( !rel.contains( nu, nv ) )
                    fail( 3, world_pair( nu, nv, n ),
                          "missing " + one_based_label( world_pair( nu, nv, n ) ) + " implied by "
                                  + one_based_label( p ) );
            };
            if ( v & bit )
            {
                need( u | bit, v & ~bit );
                need( u, v & ~bit );
            }
            else if ( !( u & bit ) )
                need( u | bit, v );
        }
    }

    // A4: combine pairs covering the same worlds.
    std::map< world_mask, std::vector< const world_pair* > > by_union;
    for ( const auto& p : rel )
        by_union[ p.left().bits() | p.right().bits() ].push_back( &p );
    for ( const auto& [ _, group ] : by_union )
    {
        for ( std::size_t i = 0; i < group.size() && report.axioms[ 4 ].passed; ++i )
            for ( std::size_t j = i + 1; j < group.size(); ++j )
            {
                const world_mask nu = group[ i ]->left().bits() & group[ j ]->left().bits();
                const world_mask nv = group[ i ]->right().bits() | group[ j ]->right().bits();
                if ( !rel.contains( nu, nv ) )
                {
                    fail( 4, world_pair( nu, nv, n ),
                          "missing " + one_based_label( world_pair( nu, nv, n ) ) + " combined from "
                                  + one_based_label( *group[ i ] ) + " and " + one_based_label( *group[ j ] ) );
                    break;
                }
            }
    }
    return report;
}

backbone::backbone( std::vector< world_set > cells ) : _cells{ std::move( cells ) }
{
    if ( _cells.empty() )
        throw input_error( "a backbone needs at least one cell" );
    const int n = _cells.front().universe_size();
    _cell_of.assign( static_cast< std::size_t >( n ), -1 );
    for ( std::size_t i = 0; i < _cells.size(); ++i )
    {
        const auto& cell = _cells[ i ];
        if ( cell.universe_size() != n )
            throw universe_mismatch( n, cell.universe_size() );
        if ( cell.empty() )
            throw input_error( "backbone cell " + std::to_string( i ) + " is empty" );
        for ( int w : cell.members() )
        {
            if ( _cell_of[ w ] != -1 )
                throw input_error( "world " + std::to_string( w ) + " appears in two backbone cells" );
            _cell_of[ w ] = static_cast< int >( i );
        }
    }
    if ( std::find( _cell_of.begin(), _cell_of.end(), -1 ) != _cell_of.end() )
        throw input_error( "backbone cells do not cover the universe" );
}

int backbone::support_index( const world_set& v ) const
{
    if ( v.universe_size() != universe_size() )
        throw universe_mismatch( universe_size(), v.universe_size() );
    if ( v.empty() )
        throw input_error( "the support of the empty set is undefined" );
    for ( std::size_t i = 0; i < _cells.size(); ++i )
        if ( _cells[ i ].intersects( v ) )
            return static_cast< int >( i );
    throw internal_error( "support search fell off the backbone" );
}

world_set support( const world_set& v, const backbone& b )
{
    return b.cells()[ static_cast< std::size_t >( b.support_index( v ) ) ];
}

std::string one_based_label( const backbone& b )
{
    std::string out;
    for ( const auto& cell : b.cells() )
    {
        if ( !out.empty() )
            out += " >> ";
        out += one_based_label( cell );
    }
    return out;
}

belief_algebra belief_algebra::from_relation( relation rel )
{
    if ( rel.universe_size() < 1 )
        throw invalid_algebra( "belief algebras need at least one world" );
    auto report = check_axioms( rel );
    if ( !report.all_passed() )
        throw invalid_algebra( "not a belief algebra: " + report.summary() );
    auto chain = extract_backbone( rel );
    return { std::move( rel ), std::move( chain ) };
}

belief_algebra belief_algebra::from_closed_relation( relation rel )
{
    if ( rel.universe_size() < 1 )
        throw invalid_algebra( "belief algebras need at least one world" );
    auto chain = extract_backbone( rel );
    return { std::move( rel ), std::move( chain ) };
}

belief_algebra belief_algebra::trivial( int universe_size )
{
    return from_closed_relation( trivial_pairs( universe_size ) );
}

belief_algebra gen( const relation& omega, int closure_cap )
{
    const int n = omega.universe_size();
    if ( n > closure_cap )
        throw cap_exceeded( n, closure_cap );
    if ( n < 1 )
        throw invalid_algebra( "belief algebras need at least one world" );
    const world_mask full = full_mask( n );

    detail::pair_index seen( n );
    std::vector< std::pair< world_mask, world_mask > > accepted;
    std::deque< std::pair< world_mask, world_mask > > queue;
    std::vector< std::vector< std::pair< world_mask, world_mask > > > by_union( std::size_t{ 1 } << n );

    auto add = [ & ]( world_mask u, world_mask v ) {
        if ( seen.contains( u, v ) )
            return;
        if ( u == 0 && v == 0 )
            throw conflict_error( "the empty set cannot be above itself", world_pair( u, v, n ) );
        if ( u == 0 )
            throw conflict_error( "derived a preference of the empty set over", world_pair( u, v, n ) );
        if ( seen.contains( v, u ) )
            throw conflict_error( "asymmetry violated by", world_pair( u, v, n ) );
        seen.insert( u, v );
        accepted.emplace_back( u, v );
        queue.emplace_back( u, v );
    };

    for ( world_mask u = 1; u <= full && u != 0; ++u )
        add( u, 0 );
    for ( const auto& p : omega )
        add( p.left().bits(), p.right().bits() );

    while ( !queue.empty() )
    {
        const auto [ u, v ] = queue.front();
        queue.pop_front();

        // A3 in single-world steps: drop a world from V, or grow U outside V.
        for ( int w = 0; w < n; ++w )
        {
            const world_mask bit = world_mask{ 1 } << w;
            if ( v & bit )
                add( u, v & ~bit );
            else if ( !( u & bit ) )
                add( u | bit, v );
        }

        // A4 against every earlier pair over the same worlds.
        auto& group = by_union[ u | v ];
        for ( std::size_t i = 0; i < group.size(); ++i )
        {
            const auto [ u2, v2 ] = group[ i ];
            add( u & u2, v | v2 );
        }
        group.emplace_back( u, v );
    }

    std::vector< world_pair > pairs;
    pairs.reserve( accepted.size() );
    for ( const auto& [ u, v ] : accepted )
        pairs.emplace_back( u, v, n );
    return belief_algebra::from_closed_relation( relation( n, std::move( pairs ) ) );
}

backbone extract_backbone( const relation& rel )
{
    const int n = rel.universe_size();
    if ( n < 1 )
        throw invalid_algebra( "belief algebras need at least one world" );
    std::vector< world_set > cells;
    world_mask remaining = full_mask( n );
    while ( remaining != 0 )
    {
        world_mask cell = remaining;
        for_each_subset( remaining, [ & ]( world_mask u ) {
            if ( rel.contains( u, remaining & ~u ) )
                cell &= u;
        } );
        if ( cell == 0 )
            throw invalid_algebra( "backbone extraction produced an empty cell within "
                                   + one_based_label( world_set( remaining, n ) ) );
        cells.emplace_back( cell, n );
        remaining &= ~cell;
    }
    backbone result( std::move( cells ) );

    // Sanity: consecutive cells are ordered, cells are internally
    // incomparable.
    const auto& cs = result.cells();
    for ( std::size_t i = 0; i + 1 < cs.size(); ++i )
        if ( !rel.contains( cs[ i ].bits(), cs[ i + 1 ].bits() ) )
            throw internal_error( "backbone cells " + one_based_label( cs[ i ] ) + " and "
                                  + one_based_label( cs[ i + 1 ] ) + " are not ordered" );
    for ( const auto& cell : cs )
    {
        const world_mask c = cell.bits();
        for_each_subset( c, [ & ]( world_mask v1 ) {
            if ( v1 == 0 )
                return;
            for_each_subset( c & ~v1, [ & ]( world_mask v2 ) {
                if ( v2 != 0 && rel.contains( v1, v2 ) )
                    throw internal_error( "backbone cell " + one_based_label( cell ) + " contains comparable "
                                          + one_based_label( world_pair( v1, v2, n ) ) );
            } );
        } );
    }
    return result;
}

relation chain_generators( const backbone& b )
{
    const int n = b.universe_size();
    relation out( n );
    world_mask tail = full_mask( n );
    for ( const auto& cell : b.cells() )
    {
        tail &= ~cell.bits();
        if ( tail != 0 )
            out.insert( world_pair( cell.bits(), tail, n ) );
    }
    return out;
}

belief_algebra complete_algebra( const backbone& b )
{
    const int n = b.universe_size();
    const world_mask full = full_mask( n );

    // support[m] = index of I(m) for nonempty m.
    std::vector< int > support_of( std::size_t{ full } + 1, -1 );
    for ( world_mask m = 1; m <= full && m != 0; ++m )
        support_of[ m ] = b.cell_of( std::countr_zero( m ) );
    for ( world_mask m = 1; m <= full && m != 0; ++m )
    {
        const world_mask rest = m & ( m - 1 );
        if ( rest != 0 )
            support_of[ m ] = std::min( support_of[ m ], support_of[ rest ] );
    }

    std::vector< world_pair > pairs;
    for ( world_mask u = 1; u <= full && u != 0; ++u )
        for_each_subset( full & ~u, [ & ]( world_mask v ) {
            if ( v == 0 || support_of[ u ] < support_of[ v ] )
                pairs.emplace_back( u, v, n );
        } );
    auto result = belief_algebra::from_closed_relation( relation( n, std::move( pairs ) ) );
    if ( !( result.chain() == b ) )
        throw internal_error( "completion changed the backbone: " + one_based_label( b ) + " became "
                              + one_based_label( result.chain() ) );
    return result;
}

belief_algebra com( const belief_algebra& g )
{
    return complete_algebra( g.chain() );
}

bool is_cba( const belief_algebra& g )
{
    return g == com( g );
}

belief_algebra meet( const belief_algebra& lhs, const belief_algebra& rhs )
{
    require_same_universe( lhs, rhs );
    return belief_algebra::from_closed_relation( intersect( lhs.pairs(), rhs.pairs() ) );
}

belief_algebra join( const belief_algebra& lhs, const belief_algebra& rhs )
{
    require_same_universe( lhs, rhs );
    if ( !( lhs.chain() == rhs.chain() ) )
        throw backbone_mismatch( "join needs equal backbones: " + one_based_label( lhs.chain() ) + " vs "
                                 + one_based_label( rhs.chain() ) );
    try
    {
        auto result = gen( unite( lhs.pairs(), rhs.pairs() ), max_representable_worlds );
        if ( !( result.chain() == lhs.chain() ) )
            throw internal_error( "join left the lattice of backbone " + one_based_label( lhs.chain() ) );
        return result;
    }
    catch ( const conflict_error& e )
    {
        throw internal_error( std::string( "join of equal-backbone algebras conflicted: " ) + e.what() );
    }
}

relation greedy_generators( const belief_algebra& g )
{
    auto current = g.pairs().strict_part();
    std::vector< world_pair > order( current.begin(), current.end() );
    std::stable_sort( order.begin(), order.end(), []( const world_pair& a, const world_pair& b ) {
        const int sa = a.left().size() + a.right().size();
        const int sb = b.left().size() + b.right().size();
        if ( sa != sb )
            return sa > sb;
        return b < a;
    } );
    for ( const auto& candidate : order )
    {
        auto trial = difference( current, relation( g.universe_size(), { candidate } ) );
        if ( gen( trial, max_representable_worlds ) == g )
            current = std::move( trial );
    }
    return current;
}

bool leq( const belief_algebra& lhs, const belief_algebra& rhs )
{
    require_same_universe( lhs, rhs );
    return lhs.chain() == rhs.chain() && is_subset( lhs.pairs(), rhs.pairs() );
}

} // namespace beliefrev
