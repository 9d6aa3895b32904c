#include "commands.hpp"
#include "document.hpp"

#include "beliefrev/oracle.hpp"
#include "beliefrev/revision.hpp"

#include <map>
#include <sstream>

namespace beliefrev::cli
{

namespace
{

std::string zero_based_pair( const world_pair& p )
{
    return "(" + zero_based_label( p.left() ) + "," + zero_based_label( p.right() ) + ")";
}

template< typename Fn >
command_result guarded( Fn&& body )
{
    command_result r;
    try
    {
        body( r );
    }
    catch ( const conflict_error& e )
    {
        r = {};
        r.exit_code = exit_code::conflict;
        r.err = std::string( e.what() ) + "\nwitness: " + one_based_label( e.witness() ) + " (1-based), "
                + zero_based_pair( e.witness() ) + " (0-based)\n";
    }
    catch ( const input_error& e )
    {
        r = {};
        r.exit_code = exit_code::input;
        r.err = std::string( "error: " ) + e.what() + "\n";
    }
    catch ( const nlohmann::json::exception& e )
    {
        r = {};
        r.exit_code = exit_code::input;
        r.err = std::string( "error: " ) + e.what() + "\n";
    }
    catch ( const std::exception& e )
    {
        r = {};
        r.exit_code = exit_code::check_failed;
        r.err = std::string( "internal error: " ) + e.what() + "\n";
    }
    return r;
}

belief_document read_input( const options& opt )
{
    return parse_document_text( opt.input_text, opt.max_worlds );
}

std::pair< formula, formula > parse_conditional( const std::string& spec, const vocabulary& vocab )
{
    int depth = 0;
    std::size_t split = std::string::npos;
    for ( std::size_t i = 0; i < spec.size(); ++i )
    {
        if ( spec[ i ] == '(' )
            ++depth;
        else if ( spec[ i ] == ')' )
            --depth;
        else if ( spec[ i ] == '|' && depth == 0 )
            split = i;
    }
    if ( split == std::string::npos )
        throw input_error( "conditional \"" + spec + "\" needs the form \"beta|alpha\"" );
    auto beta = parse_formula( std::string_view( spec ).substr( 0, split ), vocab );
    auto alpha = parse_formula( std::string_view( spec ).substr( split + 1 ), vocab );
    return { std::move( alpha ), std::move( beta ) };
}

const vocabulary& require_vocab( const belief_document& doc, const char* what )
{
    if ( !doc.vocab )
        throw input_error( std::string( what ) + " evidence needs an \"atoms\" list in the input document" );
    return *doc.vocab;
}

relation collect_evidence( const options& opt, const belief_document& current )
{
    const int n = current.worlds;
    relation evidence( n );
    for ( const auto& text : opt.evidence_texts )
    {
        const auto doc = parse_document_text( text, opt.max_worlds );
        if ( doc.worlds != n )
            throw universe_mismatch( n, doc.worlds );
        evidence = unite( evidence, to_algebra( doc, opt.max_worlds ).pairs() );
    }
    for ( const auto& text : opt.formulas )
    {
        const auto& vocab = require_vocab( current, "formula" );
        const auto mu = parse_formula( text, vocab );
        const auto worlds = models( mu, vocab );
        if ( worlds.empty() )
            throw contradiction_error( "evidence formula " + mu.to_string( vocab ) + " has no models" );
        if ( !( worlds == world_set::full( n ) ) )
            evidence.insert( world_pair( worlds, worlds.complement() ) );
    }
    for ( const auto& text : opt.conditionals )
    {
        const auto& vocab = require_vocab( current, "conditional" );
        const auto [ alpha, beta ] = parse_conditional( text, vocab );
        evidence.insert( evidence_from_conditional( alpha, beta, vocab ) );
    }
    if ( opt.evidence_texts.empty() && opt.formulas.empty() && opt.conditionals.empty() )
        throw input_error( "no evidence given (use --evidence, --formula or --conditional)" );
    return evidence;
}

ordered_json pair_list_json( const relation& rel )
{
    auto out = ordered_json::array();
    for ( const auto& p : rel )
        out.push_back( pair_json( p ) );
    return out;
}

ordered_json result_json( const ordered_json& status, std::string_view name )
{
    ordered_json out;
    out[ "name" ] = name;
    out.update( status );
    return out;
}

} // namespace

command_result cmd_gen( const options& opt )
{
    return guarded( [ & ]( command_result& r ) {
        const auto doc = read_input( opt );
        if ( doc.kind != document_kind::relation )
            throw input_error( "gen expects a relation document" );
        r.out = dump( relation_json( gen( *doc.pairs, opt.max_worlds ).pairs(), doc.vocab ) );
    } );
}

command_result cmd_backbone( const options& opt )
{
    return guarded( [ & ]( command_result& r ) {
        const auto doc = read_input( opt );
        r.out = dump( backbone_json( to_algebra( doc, opt.max_worlds ).chain(), doc.vocab ) );
    } );
}

command_result cmd_com( const options& opt )
{
    return guarded( [ & ]( command_result& r ) {
        const auto doc = read_input( opt );
        r.out = dump( relation_json( com( to_algebra( doc, opt.max_worlds ) ).pairs(), doc.vocab ) );
    } );
}

command_result cmd_revise( const options& opt )
{
    return guarded( [ & ]( command_result& r ) {
        const auto doc = read_input( opt );
        const auto g1 = to_algebra( doc, opt.max_worlds );
        const auto g2 = gen( collect_evidence( opt, doc ), opt.max_worlds );
        const auto trace = revise( g1, g2 );

        auto result = opt.as_generators ? relation_json( greedy_generators( trace.result ), doc.vocab )
                                        : relation_json( trace.result.pairs(), doc.vocab );
        if ( !opt.trace )
        {
            r.out = dump( result );
            return;
        }
        ordered_json out;
        out[ "kind" ] = "revision";
        out[ "result" ] = std::move( result );
        out[ "result_backbone" ] = backbone_json( trace.result.chain(), doc.vocab )[ "cells" ];
        ordered_json steps;
        steps[ "evidence" ] = pair_list_json( g2.pairs() );
        steps[ "com_g1" ] = pair_list_json( trace.com_g1.pairs() );
        steps[ "com_g2" ] = pair_list_json( trace.com_g2.pairs() );
        steps[ "lambda" ] = pair_list_json( trace.lambda );
        steps[ "g_star" ] = pair_list_json( trace.g_star.pairs() );
        steps[ "g_star_backbone" ] = backbone_json( trace.g_star.chain(), doc.vocab )[ "cells" ];
        steps[ "g1_cap_g_star" ] = pair_list_json( trace.g1_cap_gstar );
        out[ "trace" ] = std::move( steps );
        r.out = dump( out );
    } );
}

command_result cmd_revise_preorder( const options& opt )
{
    return guarded( [ & ]( command_result& r ) {
        if ( opt.evidence_texts.size() != 1 || !opt.formulas.empty() || !opt.conditionals.empty() )
            throw input_error( "revise-preorder takes exactly one --evidence document" );
        auto as_preorder = [ & ]( const belief_document& d ) {
            if ( d.kind == document_kind::preorder )
                return *d.order;
            return preorder_from_cba( gen( *d.pairs, opt.max_worlds ) );
        };
        const auto current = read_input( opt );
        const auto evidence = parse_document_text( opt.evidence_texts.front(), opt.max_worlds );
        if ( evidence.worlds != current.worlds )
            throw universe_mismatch( current.worlds, evidence.worlds );
        r.out = dump( preorder_json( revise_preorder( as_preorder( current ), as_preorder( evidence ) ),
                                     current.vocab ) );
    } );
}

namespace
{

void run_fuzz( const options& opt, command_result& r )
{
    if ( opt.fuzz < 0 )
        throw input_error( "--fuzz needs a non-negative trial count" );
    oracle::rng rng( opt.seed );

    struct tally
    {
        int passed = 0;
        int failed = 0;
        int skipped = 0;
    };
    std::map< std::string, tally > postulates;
    tally naive;
    std::string first_failure;

    for ( int t = 0; t < opt.fuzz; ++t )
    {
        const int n = rng.between( 2, oracle::exhaustive_limit );
        const auto s1 = oracle::sample_belief_algebra( rng, n );
        const auto s2 = oracle::sample_belief_algebra( rng, n );

        for ( const auto* s : { &s1, &s2 } )
        {
            if ( oracle::naive_gen( s->omega ) == s->algebra.pairs() )
                ++naive.passed;
            else
            {
                ++naive.failed;
                if ( first_failure.empty() )
                    first_failure = "trial " + std::to_string( t ) + ": gen and naive_gen disagree";
            }
        }

        const auto result = revise( s1.algebra, s2.algebra ).result;
        const auto report = check_postulates( s1.algebra, s2.algebra, result, opt.seed + static_cast< unsigned >( t ) );
        for ( const auto& p : report.postulates )
        {
            auto& slot = postulates[ p.name ];
            if ( !p.applicable )
                ++slot.skipped;
            else if ( p.passed )
                ++slot.passed;
            else
            {
                ++slot.failed;
                if ( first_failure.empty() )
                    first_failure = "trial " + std::to_string( t ) + ": " + p.name + " " + p.detail;
            }
        }
    }

    auto tally_json = []( const tally& t ) {
        ordered_json j;
        j[ "passed" ] = t.passed;
        j[ "failed" ] = t.failed;
        j[ "skipped" ] = t.skipped;
        return j;
    };
    ordered_json out;
    out[ "kind" ] = "fuzz-report";
    out[ "trials" ] = opt.fuzz;
    out[ "seed" ] = opt.seed;
    ordered_json pj;
    bool ok = naive.failed == 0;
    for ( const auto& [ name, t ] : postulates )
    {
        pj[ name ] = tally_json( t );
        ok = ok && t.failed == 0;
    }
    out[ "postulates" ] = std::move( pj );
    out[ "gen_matches_naive_gen" ] = tally_json( naive );
    out[ "passed" ] = ok;
    r.out = dump( out );
    if ( !ok )
    {
        r.exit_code = exit_code::check_failed;
        r.err = "check failed: " + first_failure + "\n";
    }
}

} // namespace

command_result cmd_check( const options& opt )
{
    return guarded( [ & ]( command_result& r ) {
        if ( opt.fuzz > 0 )
        {
            run_fuzz( opt, r );
            return;
        }
        const auto doc = read_input( opt );
        const relation rel = doc.kind == document_kind::relation ? *doc.pairs
                                                                 : cba_from_preorder( *doc.order ).pairs();
        const auto report = check_axioms( rel );

        ordered_json out;
        out[ "kind" ] = "axiom-report";
        out[ "worlds" ] = doc.worlds;
        auto axioms = ordered_json::array();
        for ( const auto& a : report.axioms )
        {
            ordered_json status;
            status[ "passed" ] = a.passed;
            if ( a.witness )
            {
                status[ "witness" ] = pair_json( *a.witness );
                status[ "detail" ] = a.detail;
            }
            axioms.push_back( result_json( status, a.name ) );
        }
        out[ "axioms" ] = std::move( axioms );
        out[ "passed" ] = report.all_passed();
        r.out = dump( out );
        if ( !report.all_passed() )
        {
            r.exit_code = exit_code::check_failed;
            r.err = "check failed: " + report.summary() + "\n";
        }
    } );
}

} // namespace beliefrev::cli
