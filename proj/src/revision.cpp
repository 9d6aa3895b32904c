#include "beliefrev/revision.hpp"

#include <algorithm>
#include <random>

namespace beliefrev
{

namespace
{

void require_cba( const belief_algebra& g, const char* which )
{
    if ( !is_cba( g ) )
        throw not_cba_error( std::string( which ) + " is not a complete belief algebra (backbone "
                             + one_based_label( g.chain() ) + ")" );
}

std::optional< world_pair > first_missing( const relation& needed, const relation& have )
{
    for ( const auto& p : needed )
        if ( !have.contains( p ) )
            return p;
    return std::nullopt;
}

} // namespace

relation lambda_set( const belief_algebra& g1, const belief_algebra& g2 )
{
    if ( g1.universe_size() != g2.universe_size() )
        throw universe_mismatch( g1.universe_size(), g2.universe_size() );
    require_cba( g1, "first argument" );
    require_cba( g2, "second argument" );
    const int n = g1.universe_size();
    relation out( n );
    for ( int a = 0; a < n; ++a )
        for ( int b = 0; b < n; ++b )
        {
            if ( a == b || g2.chain().cell_of( a ) != g2.chain().cell_of( b ) )
                continue;
            world_pair p( world_mask{ 1 } << a, world_mask{ 1 } << b, n );
            if ( g1.contains( p ) )
                out.insert( p );
        }
    return out;
}

belief_algebra revise_cba( const belief_algebra& g1, const belief_algebra& g2 )
{
    auto lambda = lambda_set( g1, g2 );
    try
    {
        auto result = gen( unite( lambda, g2.pairs() ), max_representable_worlds );
        if ( !is_cba( result ) )
            throw internal_error( "revision of complete algebras is not complete" );
        return result;
    }
    catch ( const conflict_error& e )
    {
        throw internal_error( std::string( "revision of complete algebras conflicted: " ) + e.what() );
    }
}

revision_trace revise( const belief_algebra& g1, const belief_algebra& g2 )
{
    if ( g1.universe_size() != g2.universe_size() )
        throw universe_mismatch( g1.universe_size(), g2.universe_size() );
    const int n = g1.universe_size();

    auto com_g1 = com( g1 );
    auto com_g2 = com( g2 );
    auto lambda = lambda_set( com_g1, com_g2 );
    auto g_star = revise_cba( com_g1, com_g2 );

    // Support test against the upper bound instead of materializing Com(g1).
    const auto& star_chain = g_star.chain();
    relation cap( n );
    for ( const auto& p : g1.pairs() )
        if ( p.right().empty() || star_chain.support_index( p.left() ) < star_chain.support_index( p.right() ) )
            cap.insert( p );

    auto result = gen( unite( cap, g2.pairs() ), max_representable_worlds );

    // Cross-check against Gen((g1 | g2) & g_star).
    auto direct = gen( intersect( unite( g1.pairs(), g2.pairs() ), g_star.pairs() ), max_representable_worlds );
    if ( !( direct == result ) )
        throw internal_error( "revision forms disagree" );

    return { std::move( com_g1 ), std::move( com_g2 ), std::move( lambda ), std::move( g_star ), std::move( cap ),
             std::move( result ) };
}

belief_algebra evidence_from_formula( const formula& mu, const vocabulary& vocab )
{
    const auto worlds = models( mu, vocab );
    if ( worlds.empty() )
        throw contradiction_error( "evidence formula " + mu.to_string( vocab ) + " has no models" );
    if ( worlds == world_set::full( vocab.universe_size() ) )
        return belief_algebra::trivial( vocab.universe_size() );
    return gen( relation( vocab.universe_size(), { world_pair( worlds, worlds.complement() ) } ) );
}

world_pair evidence_from_conditional( const formula& alpha, const formula& beta, const vocabulary& vocab )
{
    const auto a = models( alpha, vocab );
    const auto b = models( beta, vocab );
    const auto both = a & b;
    if ( both.empty() )
        throw contradiction_error( "conditional (" + beta.to_string( vocab ) + " | " + alpha.to_string( vocab )
                                   + ") has an unsatisfiable antecedent-consequent" );
    return { both, a - b };
}

belief_algebra evidence_combine( int universe_size, std::span< const world_pair > pairs )
{
    return gen( relation( universe_size, { pairs.begin(), pairs.end() } ) );
}

bool postulate_report::all_passed() const
{
    return std::all_of( postulates.begin(), postulates.end(),
                        []( const postulate_result& r ) { return !r.applicable || r.passed; } );
}

const postulate_result& postulate_report::get( const std::string& name ) const
{
    for ( const auto& p : postulates )
        if ( p.name == name )
            return p;
    throw input_error( "no postulate named " + name );
}

postulate_report check_postulates( const belief_algebra& g1, const belief_algebra& g2, const belief_algebra& g3,
                                   std::uint64_t seed, int ra6_samples )
{
    if ( g1.universe_size() != g2.universe_size() )
        throw universe_mismatch( g1.universe_size(), g2.universe_size() );
    if ( g1.universe_size() != g3.universe_size() )
        throw universe_mismatch( g1.universe_size(), g3.universe_size() );
    const int n = g1.universe_size();
    postulate_report report;

    {
        postulate_result r{ "RA1" };
        r.witness = first_missing( g2.pairs(), g3.pairs() );
        r.passed = !r.witness;
        if ( r.witness )
            r.detail = "evidence pair " + one_based_label( *r.witness ) + " is missing from the result";
        report.postulates.push_back( std::move( r ) );
    }

    const auto both = unite( g1.pairs(), g2.pairs() );

    {
        postulate_result r{ "RA2" };
        try
        {
            auto regenerated = gen( intersect( g3.pairs(), both ), max_representable_worlds );
            r.witness = first_missing( g3.pairs(), regenerated.pairs() );
            r.passed = !r.witness;
            if ( r.witness )
                r.detail = one_based_label( *r.witness ) + " is not generated by pairs of g1 | g2";
        }
        catch ( const conflict_error& e )
        {
            r.passed = false;
            r.witness = e.witness();
            r.detail = e.what();
        }
        report.postulates.push_back( std::move( r ) );
    }

    const bool both_complete = is_cba( g1 ) && is_cba( g2 );

    {
        postulate_result r{ "RA3" };
        r.applicable = both_complete;
        if ( both_complete )
        {
            r.passed = is_cba( g3 );
            if ( !r.passed )
                r.detail = "result is not complete";
        }
        report.postulates.push_back( std::move( r ) );
    }

    {
        postulate_result r{ "RA4" };
        r.applicable = both_complete;
        if ( both_complete )
        {
            for ( int a = 0; a < n && r.passed; ++a )
                for ( int b = 0; b < n; ++b )
                {
                    if ( a == b || g2.chain().cell_of( a ) != g2.chain().cell_of( b ) )
                        continue;
                    world_pair p( world_mask{ 1 } << a, world_mask{ 1 } << b, n );
                    if ( g3.contains( p ) != g1.contains( p ) )
                    {
                        r.passed = false;
                        r.witness = p;
                        r.detail = one_based_label( p ) + " differs between the result and g1";
                        break;
                    }
                }
        }
        report.postulates.push_back( std::move( r ) );
    }

    const auto g_star = revise_cba( com( g1 ), com( g2 ) );

    {
        postulate_result r{ "RA5" };
        r.witness = first_missing( g3.pairs(), g_star.pairs() );
        r.passed = !r.witness;
        if ( r.witness )
            r.detail = one_based_label( *r.witness ) + " exceeds the upper bound Com(g1) * Com(g2)";
        report.postulates.push_back( std::move( r ) );
    }

    {
        postulate_result r{ "RA6" };
        const auto candidates = intersect( both, g_star.pairs() );
        auto try_candidate = [ & ]( const relation& omega ) {
            auto generated = gen( omega, max_representable_worlds );
            if ( is_subset( g3.pairs(), generated.pairs() ) && !( generated == g3 ) )
            {
                r.passed = false;
                r.witness = first_missing( generated.pairs(), g3.pairs() );
                r.detail = "Gen of a subset of (g1 | g2) & upper bound strictly extends the result by "
                           + one_based_label( *r.witness );
            }
        };
        try_candidate( candidates );

        std::mt19937_64 engine( seed );
        for ( int s = 0; s < ra6_samples && r.passed; ++s )
        {
            relation omega( n );
            for ( const auto& p : candidates )
                if ( engine() & 1u )
                    omega.insert( p );
            try_candidate( omega );
        }
        report.postulates.push_back( std::move( r ) );
    }
    return report;
}

} // namespace beliefrev
