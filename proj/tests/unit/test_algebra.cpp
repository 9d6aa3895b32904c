#include <doctest.h>

#include "../support.hpp"

#include "beliefrev/oracle.hpp"

using namespace beliefrev;
using namespace beliefrev::test;

TEST_CASE( "check_axioms" )
{
    SUBCASE( "trivial pairs form an algebra" )
    {
        for ( int n = 1; n <= 5; ++n )
            CHECK( check_axioms( trivial_pairs( n ) ).all_passed() );
    }
    SUBCASE( "the full pair set breaks A1 and A2" )
    {
        const auto report = check_axioms( all_disjoint_pairs( 3 ) );
        CHECK( report[ 0 ].passed );
        CHECK_FALSE( report[ 1 ].passed );
        CHECK_FALSE( report[ 2 ].passed );
    }
    SUBCASE( "a missing A3 consequence is reported" )
    {
        const auto report = check_axioms( with_trivial( listing( "(12,34)" ) ) );
        CHECK_FALSE( report[ 3 ].passed );
        REQUIRE( report[ 3 ].witness );
        CHECK( one_based_label( *report[ 3 ].witness ) == "(123,4)" );
        CHECK( report[ 1 ].passed );
        CHECK( report[ 2 ].passed );
    }
    SUBCASE( "three-pair closure of (12,34) is not closed under A3" )
    {
        // (12,34) with the right side shrunk gives (12,3) and (12,4).
        const auto report = check_axioms( with_trivial( listing( "(12,34),(123,4),(124,3)" ) ) );
        CHECK_FALSE( report[ 3 ].passed );
        REQUIRE( report[ 3 ].witness );
        const auto w = one_based_label( *report[ 3 ].witness );
        CHECK( ( w == "(12,3)" || w == "(12,4)" ) );
    }
    SUBCASE( "A4 failure" )
    {
        // Both sides cover {1,2,3}; combining gives (1,23).
        auto rel = gen( listing( "(12,3)" ) ).pairs();
        rel = unite( rel, gen( listing( "(13,2)" ) ).pairs() );
        const auto report = check_axioms( rel );
        CHECK_FALSE( report[ 4 ].passed );
        CHECK( one_based_label( *report[ 4 ].witness ) == "(1,23)" );
    }
    SUBCASE( "the empty pair breaks A1" )
    {
        auto rel = trivial_pairs( 2 );
        rel.insert( world_pair( 0, 0, 2 ) );
        CHECK_FALSE( check_axioms( rel )[ 1 ].passed );
    }
}

TEST_CASE( "gen on worked inputs" )
{
    SUBCASE( "(12,34)" )
    {
        const auto g = gen_of( "(12,34)" );
        CHECK( g.pairs().strict_part() == listing( "(12,34),(12,3),(12,4),(123,4),(124,3)" ) );
        CHECK( g.pairs() == oracle::naive_gen( listing( "(12,34)" ) ) );
        CHECK( check_axioms( g.pairs() ).all_passed() );
    }
    SUBCASE( "(14,23)" )
    {
        const auto g = gen_of( "(14,23)" );
        CHECK( g.pairs() == with_trivial( listing( "(14,23),(14,2),(14,3),(142,3),(143,2)" ) ) );
    }
    SUBCASE( "empty generator set" )
    {
        for ( int n = 1; n <= 4; ++n )
            CHECK( gen( relation( n ) ).pairs() == trivial_pairs( n ) );
    }
    SUBCASE( "trivial pairs as input" )
    {
        CHECK( gen( listing( "(1,-),(23,-)" ) ).pairs() == trivial_pairs( 4 ) );
    }
}

TEST_CASE( "gen conflicts" )
{
    auto witness_of = []( const relation& omega ) -> std::string {
        try
        {
            (void)gen( omega );
        }
        catch ( const conflict_error& e )
        {
            return one_based_label( e.witness() );
        }
        return "no conflict";
    };
    const auto mirrored = witness_of( listing( "(1,2),(2,1)" ) );
    CHECK( ( mirrored == "(1,2)" || mirrored == "(2,1)" ) );
    CHECK( witness_of( listing( "(-,-)" ) ) == "(-,-)" );
    CHECK( witness_of( listing( "(-,1)" ) ) != "no conflict" );
    // Derived conflict: (1,2) and (2,13) give (2,1) by A3.
    CHECK( witness_of( listing( "(1,2),(2,13)" ) ) != "no conflict" );
    // Mirror pair with larger sides.
    CHECK( witness_of( listing( "(12,3),(3,12)" ) ) != "no conflict" );
}

TEST_CASE( "gen respects the world cap" )
{
    CHECK_THROWS_AS( (void)gen( relation( 11 ) ), cap_exceeded );
    CHECK( gen( relation( 11 ), 11 ).pairs().size() == 2047 );
}

TEST_CASE( "backbone" )
{
    CHECK( gen_of( "(14,23)" ).chain() == chain( { { 1, 4 }, { 2, 3 } } ) );
    CHECK( gen_of( "(1,3),(1,4),(2,3),(2,4)" ).chain() == chain( { { 1, 2 }, { 3, 4 } } ) );
    CHECK( belief_algebra::trivial( 4 ).chain() == chain( { { 1, 2, 3, 4 } } ) );
    CHECK( gen_of( "(12,34)" ).chain() == chain( { { 1, 2 }, { 3, 4 } } ) );
    CHECK( one_based_label( gen_of( "(14,23)" ).chain() ) == "{1,4} >> {2,3}" );
    CHECK( oracle::verify_backbone_exhaustive( gen_of( "(14,23)" ) ) );
    CHECK_FALSE( oracle::verify_backbone_exhaustive( gen_of( "(14,23)" ), chain( { { 2, 3 }, { 1, 4 } } ) ) );
    CHECK_FALSE( oracle::verify_backbone_exhaustive( gen_of( "(14,23)" ), chain( { { 1 }, { 4 }, { 2, 3 } } ) ) );
}

TEST_CASE( "backbone validation" )
{
    CHECK_THROWS_AS( backbone( {} ), input_error );
    CHECK_THROWS_AS( backbone( { world_set::of( { 0 }, 2 ) } ), input_error );
    CHECK_THROWS_AS( backbone( { world_set::of( { 0, 1 }, 2 ), world_set::of( { 1 }, 2 ) } ), input_error );
    CHECK_THROWS_AS( backbone( { world_set::full( 2 ), world_set( 2 ) } ), input_error );
}

TEST_CASE( "support" )
{
    const auto b = chain( { { 1 }, { 2 }, { 3, 4 } } );
    CHECK( support( world_set::of( { 0, 2 }, 4 ), b ) == world_set::of( { 0 }, 4 ) );
    CHECK( support( world_set::of( { 1, 3 }, 4 ), b ) == world_set::of( { 1 }, 4 ) );
    CHECK( support( world_set::of( { 2 }, 4 ), b ) == world_set::of( { 2, 3 }, 4 ) );
    CHECK( support( world_set::of( { 3 }, 4 ), b ) == world_set::of( { 2, 3 }, 4 ) );
    CHECK( support( world_set::full( 4 ), b ) == world_set::of( { 0 }, 4 ) );
    for ( int w = 0; w < 4; ++w )
        CHECK( support( world_set::singleton( w, 4 ), b ).contains( w ) );
    CHECK_THROWS_AS( (void)support( world_set( 4 ), b ), input_error );
}

TEST_CASE( "completion" )
{
    const auto g = gen_of( "(14,23)" );
    CHECK( com( g ) == gen_of( "(1,2),(1,3),(4,2),(4,3)" ) );
    CHECK( com( g ).pairs() == completion_by_search( g ) );
    CHECK( com( com( g ) ) == com( g ) );
    CHECK( com( belief_algebra::trivial( 4 ) ) == belief_algebra::trivial( 4 ) );
    const auto cba = gen_of( "(1,3),(1,4),(2,3),(2,4)" );
    CHECK( com( cba ) == cba );
}

TEST_CASE( "is_cba" )
{
    CHECK( is_cba( gen_of( "(1,3),(1,4),(2,3),(2,4)" ) ) );
    CHECK_FALSE( is_cba( gen_of( "(14,23)" ) ) );
    CHECK_FALSE( is_cba( gen_of( "(12,34)" ) ) );
    CHECK( is_cba( belief_algebra::trivial( 3 ) ) );
}

TEST_CASE( "chain generators and complete algebras" )
{
    const auto b = chain( { { 2 }, { 1, 3 }, { 4 } } );
    CHECK( chain_generators( b ) == listing( "(2,134),(13,4)" ) );
    CHECK( gen( chain_generators( b ) ).chain() == b );
    std::vector< world_mask > cells;
    for ( const auto& c : b.cells() )
        cells.push_back( c.bits() );
    CHECK( complete_algebra( b ).pairs() == complete_by_definition( cells, 4 ) );
}

TEST_CASE( "from_relation" )
{
    CHECK( belief_algebra::from_relation( with_trivial( listing( "(123,4)" ) ) ) == gen_of( "(123,4)" ) );
    CHECK_THROWS_AS( (void)belief_algebra::from_relation( with_trivial( listing( "(12,34)" ) ) ), invalid_algebra );
    CHECK_THROWS_AS( (void)belief_algebra::from_relation( listing( "(1,2)" ) ), invalid_algebra );
}

namespace
{

belief_algebra lattice( const char* text )
{
    return belief_algebra::from_relation( with_trivial( listing( text ) ) );
}

} // namespace

TEST_CASE( "lattice of a fixed backbone" )
{
    const auto g1 = lattice( "(123,4)" );
    const auto g2 = lattice( "(123,4),(12,4)" );
    const auto g3 = lattice( "(123,4),(13,4)" );
    const auto g4 = lattice( "(123,4),(12,4),(13,4),(23,4),(1,4),(2,4),(3,4)" );
    const auto delta = chain( { { 1, 2, 3 }, { 4 } } );
    for ( const auto* g : { &g1, &g2, &g3, &g4 } )
        CHECK( g->chain() == delta );

    CHECK( is_cba( g4 ) );
    CHECK( com( g1 ) == g4 );
    CHECK( gen( chain_generators( delta ) ) == g1 );

    CHECK( leq( g1, g2 ) );
    CHECK( leq( g1, g3 ) );
    CHECK( leq( g2, g4 ) );
    CHECK( leq( g3, g4 ) );
    CHECK_FALSE( leq( g2, g3 ) );
    CHECK_FALSE( leq( g3, g2 ) );
    CHECK( leq( g2, g2 ) );
    // Same pairs under inclusion but a different backbone is not below.
    CHECK_FALSE( leq( belief_algebra::trivial( 4 ), g1 ) );

    CHECK( meet( g2, g3 ) == g1 );
    CHECK( meet( g2, g2 ) == g2 );
    CHECK( meet( g2, belief_algebra::trivial( 4 ) ).pairs() == trivial_pairs( 4 ) );

    const auto j = join( g2, g3 );
    CHECK( j.pairs().strict_part() == listing( "(12,4),(123,4),(13,4)" ) );
    CHECK( j.chain() == delta );
    CHECK( is_subset( j.pairs(), g4.pairs() ) );
    CHECK( join( g2, g2 ) == g2 );
    CHECK( join( g1, g4 ) == g4 );
    CHECK_THROWS_AS( (void)join( g1, gen_of( "(14,23)" ) ), backbone_mismatch );
}

TEST_CASE( "greedy generators" )
{
    const auto g = gen_of( "(1,4),(1,2),(1,3),(2,3)" );
    const auto small = greedy_generators( g );
    CHECK( gen( small ) == g );
    CHECK( small.size() <= 4 );
    for ( const auto& p : small )
        CHECK_FALSE( gen( difference( small, relation( 4, { p } ) ) ) == g );
    CHECK( greedy_generators( belief_algebra::trivial( 3 ) ).empty() );
}

TEST_CASE( "closure laws on sampled generator sets" )
{
    oracle::rng rng( 20240611 );
    for ( int trial = 0; trial < 200; ++trial )
    {
        const int n = rng.between( 1, 4 );
        const auto s = oracle::sample_belief_algebra( rng, n );
        const auto& g = s.algebra;
        CAPTURE( trial );

        CHECK( is_subset( s.omega, g.pairs() ) );
        CHECK( gen( g.pairs() ) == g );
        CHECK( g.pairs() == oracle::naive_gen( s.omega ) );
        CHECK( check_axioms( g.pairs() ).all_passed() );

        relation smaller( n );
        for ( const auto& p : s.omega )
            if ( rng.chance( 1, 2 ) )
                smaller.insert( p );
        CHECK( is_subset( gen( smaller ).pairs(), g.pairs() ) );

        CHECK( oracle::verify_backbone_exhaustive( g ) );
        const auto c = com( g );
        CHECK( c.pairs() == completion_by_search( g ) );
        CHECK( is_subset( g.pairs(), c.pairs() ) );
        CHECK( c.chain() == g.chain() );
        CHECK( is_cba( c ) );
        CHECK( leq( g, c ) );
        CHECK( gen( greedy_generators( g ) ) == g );
    }
}
