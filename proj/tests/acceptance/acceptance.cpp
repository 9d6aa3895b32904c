// Acceptance criteria, one per invocation: `acceptance <n> [cli-path]`.
// Prints one PASS/FAIL line per criterion; exit status 0 iff it passed.

#include "../support.hpp"

#include "beliefrev/oracle.hpp"
#include "beliefrev/revision.hpp"

#include "commands.hpp"

#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <sys/wait.h>

using namespace beliefrev;
using namespace beliefrev::test;

namespace
{

// Collects named sub-checks; the criterion passes iff all of them do.
class checks
{
    bool _ok = true;

public:
    void expect( bool condition, const std::string& what )
    {
        _ok = _ok && condition;
        std::cout << "  [" << ( condition ? "ok" : "FAILED" ) << "] " << what << "\n";
    }

    void note( const std::string& text ) { std::cout << "  note: " << text << "\n"; }

    [[nodiscard]] bool ok() const { return _ok; }
};

std::string pairs_or_none( const relation& rel )
{
    return rel.empty() ? "none" : one_based_label( rel );
}

// Compares computed strict pairs with a reference listing and reports both
// directions of the difference.
void expect_listing( checks& c, const relation& computed, const std::string& reference, const std::string& what )
{
    const auto strict = computed.strict_part();
    const auto ref = listing( reference );
    c.expect( strict == ref, what );
    if ( !( strict == ref ) )
    {
        c.note( "derived but not listed: " + pairs_or_none( difference( strict, ref ) ) );
        c.note( "listed but not derived: " + pairs_or_none( difference( ref, strict ) ) );
        const auto report = check_axioms( with_trivial( ref ) );
        c.note( "listing plus Tr(W) under the axioms: " + report.summary() );
    }
}

belief_algebra current_belief()
{
    return cba_from_preorder( total_preorder::from_levels( { { 0, 1 }, { 2, 3 } }, 4 ) );
}

belief_algebra strict_chain( std::initializer_list< std::initializer_list< int > > cells )
{
    return gen( chain_generators( chain( cells ) ) );
}

// --- 1 ---------------------------------------------------------------------
bool closure_of_one_pair( checks& c )
{
    const auto g = gen_of( "(12,34)" );
    expect_listing( c, g.pairs(), "(12,34),(123,4),(124,3)", "Gen({(12,34)}) equals {(12,34),(123,4),(124,3)} + Tr(W)" );
    c.expect( is_subset( trivial_pairs( 4 ), g.pairs() ), "Tr(W) is contained" );
    return c.ok();
}

// --- 2 ---------------------------------------------------------------------
bool preorder_to_algebra( checks& c )
{
    const auto p = total_preorder::from_levels( { { 0, 1 }, { 2, 3 } }, 4 );
    const auto g = cba_from_preorder( p );
    expect_listing( c, g.pairs(), "(1,3),(1,4),(2,3),(2,4),(1,34),(2,34),(12,3),(12,4),(12,34),(123,4),(124,3)",
                    "complete algebra of w1~w2 < w3~w4 equals the 11 listed pairs + Tr(W)" );
    c.expect( preorder_from_cba( g ) == p, "round-trip back to w1~w2 < w3~w4" );
    return c.ok();
}

// --- 3 ---------------------------------------------------------------------
bool evidence_algebra( checks& c )
{
    const auto g = gen_of( "(14,23)" );
    expect_listing( c, g.pairs(), "(14,23),(14,2),(14,3),(142,3),(143,2)", "Gen({(14,23)}) equals the 5 listed pairs + Tr(W)" );
    c.expect( g.chain() == chain( { { 1, 4 }, { 2, 3 } } ), "backbone {1,4} >> {2,3}" );
    c.expect( com( g ) == gen_of( "(1,2),(1,3),(4,2),(4,3)" ), "Com equals Gen({(1,2),(1,3),(4,2),(4,3)})" );
    return c.ok();
}

// --- 4 ---------------------------------------------------------------------
bool worked_revision( checks& c )
{
    const auto g1 = current_belief();
    const auto g2 = gen_of( "(14,23)" );
    const auto t = revise( g1, g2 );

    expect_listing( c, t.com_g2.pairs(),
                    "(1,2),(1,3),(4,2),(4,3),(14,23),(14,2),(14,3),(12,3),(13,2),(24,3),(34,2),(142,3),(143,2)",
                    "(a) Com(G2) equals the 13 listed pairs" );
    c.expect( t.lambda == listing( "(1,4),(2,3)" ), "(b) Lambda = {(1,4),(2,3)}" );
    expect_listing( c, t.g_star.pairs(),
                    "(1,4),(1,2),(1,3),(4,2),(4,3),(2,3),(1,24),(1,23),(1,34),(1,234),(4,23),(14,2),(14,3),(14,23),"
                    "(13,4),(13,2),(13,24),(12,3),(12,4),(12,34),(42,3),(43,2),(123,4),(124,3),(134,2)",
                    "(c) G* equals the 25 listed pairs" );
    c.expect( t.g_star.chain() == chain( { { 1 }, { 4 }, { 2 }, { 3 } } ), "(c) backbone of G* is {1} >> {4} >> {2} >> {3}" );
    expect_listing( c, intersect( g1.pairs(), t.g_star.pairs() ),
                    "(1,3),(1,4),(2,3),(12,3),(12,4),(12,34),(13,4),(14,3),(24,3),(123,4),(124,3)",
                    "(d) G1 & G* equals the 11 listed pairs" );
    expect_listing( c, t.result.pairs(),
                    "(1,2),(1,3),(1,4),(2,3),(1,23),(1,24),(1,34),(1,234),(12,3),(12,4),(12,34),(13,2),(13,4),(13,24),"
                    "(14,2),(14,3),(14,23),(24,3),(123,4),(124,3)",
                    "(e) G1 * G2 equals the 20 listed pairs" );
    c.expect( t.result.chain() == chain( { { 1 }, { 2, 4 }, { 3 } } ), "(e) backbone {1} >> {2,4} >> {3}" );
    c.expect( t.result == gen_of( "(1,4),(1,2),(1,3),(2,3)" ), "(e) G1 * G2 = Gen({(1,4),(1,2),(1,3),(2,3)})" );
    return c.ok();
}

// --- 5 ---------------------------------------------------------------------
bool preorder_revision( checks& c )
{
    auto lv = []( std::vector< std::vector< int > > one_based ) {
        for ( auto& l : one_based )
            for ( auto& w : l )
                --w;
        return total_preorder::from_levels( one_based, 4 );
    };
    const auto p1 = lv( { { 1, 2 }, { 3, 4 } } );
    c.expect( revise_preorder( p1, lv( { { 1, 2, 3, 4 } } ) ) == p1, "flat evidence keeps w1~w2 < w3~w4" );
    c.expect( revise_preorder( p1, lv( { { 4 }, { 3 }, { 2 }, { 1 } } ) ) == lv( { { 4 }, { 3 }, { 2 }, { 1 } } ),
              "strict evidence w4 < w3 < w2 < w1 wins outright" );
    c.expect( revise_preorder( p1, lv( { { 2, 4 }, { 1, 3 } } ) ) == lv( { { 2 }, { 4 }, { 1 }, { 3 } } ),
              "w2~w4 < w1~w3 refines to w2 < w4 < w1 < w3" );
    return c.ok();
}

// --- 6 ---------------------------------------------------------------------
bool complete_revision( checks& c )
{
    const auto g1 = strict_chain( { { 1 }, { 2 }, { 3 }, { 4 } } );
    const auto g2 = gen( unite( chain_generators( chain( { { 2 }, { 1, 3 }, { 4 } } ) ), listing( "(1,4),(3,4)" ) ) );
    c.expect( is_cba( g1 ) && is_cba( g2 ), "both inputs are complete" );
    c.expect( lambda_set( g1, g2 ) == listing( "(1,3)" ), "Lambda = {(1,3)}" );
    const auto r = revise_cba( g1, g2 );
    c.expect( r.chain() == chain( { { 2 }, { 1 }, { 3 }, { 4 } } ), "backbone {2} >> {1} >> {3} >> {4}" );
    c.expect( r == strict_chain( { { 2 }, { 1 }, { 3 }, { 4 } } ), "result = Gen({2} >> {1} >> {3} >> {4})" );
    c.expect( is_cba( r ), "result is complete" );
    return c.ok();
}

// --- 7 ---------------------------------------------------------------------
bool conditional_evidence( checks& c )
{
    const vocabulary bf( { "b", "f" } );
    const auto mu = evidence_from_formula( parse_formula( "(b & f) | (!b & !f)", bf ), bf );
    const auto cond = evidence_from_conditional( parse_formula( "!f", bf ), parse_formula( "!b", bf ), bf );
    c.expect( one_based_label( cond ) == "(4,2)", "(!b | !f) induces (4,2)" );
    auto pairs = mu.pairs();
    pairs.insert( cond );
    const auto result = revise( current_belief(), gen( pairs ) ).result;
    c.expect( result == strict_chain( { { 1 }, { 4 }, { 2 }, { 3 } } ), "result = Gen({1} >> {4} >> {2} >> {3})" );
    return c.ok();
}

// --- 8 ---------------------------------------------------------------------
bool closure_matches_oracle( checks& c )
{
    int agree = 0;
    int total = 0;
    std::string first;
    for ( std::uint64_t seed = 0; seed < 1000; ++seed )
    {
        oracle::rng rng( seed );
        const int n = 2 + static_cast< int >( seed % 4 );
        const auto s = oracle::sample_belief_algebra( rng, n );
        ++total;
        if ( oracle::naive_gen( s.omega ) == s.algebra.pairs() )
            ++agree;
        else if ( first.empty() )
            first = "seed " + std::to_string( seed ) + ", omega " + pairs_or_none( s.omega );
    }
    c.expect( agree == total, std::to_string( agree ) + "/" + std::to_string( total ) + " seeds agree" );
    if ( !first.empty() )
        c.note( "first disagreement: " + first );
    return c.ok();
}

// A random algebra between g and com(g), so g <= result.
belief_algebra enlarge( oracle::rng& rng, const belief_algebra& g )
{
    relation omega = g.pairs();
    const auto top = com( g );
    for ( const auto& p : top.pairs() )
        if ( rng.chance( 1, 3 ) )
            omega.insert( p );
    return gen( omega );
}

struct tally
{
    int passed = 0;
    int total = 0;
    std::string first;

    void record( bool ok, const std::string& context )
    {
        ++total;
        if ( ok )
            ++passed;
        else if ( first.empty() )
            first = context;
    }

    void report( checks& c, const std::string& what ) const
    {
        c.expect( passed == total, what + ": " + std::to_string( passed ) + "/" + std::to_string( total ) );
        if ( !first.empty() )
            c.note( "first failure at " + first );
    }
};

// --- 9 ---------------------------------------------------------------------
bool postulate_suite( checks& c )
{
    tally ra1, bound, monotone, forms, postulates, preorder_agree, identity;
    for ( std::uint64_t seed = 0; seed < 500; ++seed )
    {
        oracle::rng rng( 0x9e3779b97f4a7c15ULL ^ seed );
        const int n = rng.between( 2, oracle::exhaustive_limit );
        const auto g1 = oracle::sample_belief_algebra( rng, n ).algebra;
        const auto g2 = oracle::sample_belief_algebra( rng, n ).algebra;
        const std::string at = "seed " + std::to_string( seed );

        const auto t = revise( g1, g2 );
        ra1.record( is_subset( g2.pairs(), t.result.pairs() ), at );

        const auto upper = revise_cba( com( g1 ), com( g2 ) );
        bound.record( is_subset( t.result.pairs(), upper.pairs() ), at );

        const auto g1b = enlarge( rng, g1 );
        const auto g2b = enlarge( rng, g2 );
        const bool chained = leq( g1, g1b ) && leq( g2, g2b );
        monotone.record( chained && is_subset( t.result.pairs(), revise( g1b, g2b ).result.pairs() ), at );

        relation cap( n );
        for ( const auto& p : g1.pairs() )
            if ( upper.contains( p ) )
                cap.insert( p );
        const auto via_cap = gen( unite( cap, g2.pairs() ) );
        const auto via_union = gen( intersect( unite( g1.pairs(), g2.pairs() ), upper.pairs() ) );
        forms.record( via_cap == via_union && via_cap == t.result, at );

        postulates.record( check_postulates( g1, g2, t.result, seed ).all_passed(), at );

        const auto tr = belief_algebra::trivial( n );
        identity.record( revise( g1, tr ).result == g1 && revise( tr, g1 ).result == g1, at );

        const auto p1 = oracle::sample_preorder( rng, n );
        const auto p2 = oracle::sample_preorder( rng, n );
        const auto c1 = cba_from_preorder( p1 );
        const auto c2 = cba_from_preorder( p2 );
        const auto expected = cba_from_preorder( revise_preorder( p1, p2 ) );
        preorder_agree.record( revise_cba( c1, c2 ) == expected && revise( c1, c2 ).result == expected, at );
    }
    ra1.report( c, "RA1 (evidence kept)" );
    bound.report( c, "result within the upper bound" );
    monotone.report( c, "RA5 monotonicity on g1 <= g1', g2 <= g2'" );
    forms.report( c, "the two computation forms agree" );
    postulates.report( c, "full postulate check (RA1-RA6)" );
    preorder_agree.report( c, "complete revision matches preorder revision" );
    identity.report( c, "revise(g, Tr) = g and revise(Tr, g) = g" );
    return c.ok();
}

bool chain_conditions_hold( const belief_algebra& g )
{
    const auto& b = g.chain();
    const int n = g.universe_size();
    world_mask covered = 0;
    for ( const auto& cell : b.cells() )
    {
        if ( cell.empty() || ( covered & cell.bits() ) != 0 )
            return false;
        covered |= cell.bits();
    }
    if ( covered != full_mask( n ) )
        return false;
    for ( const auto& cell : b.cells() )
    {
        const world_mask m = cell.bits();
        for ( world_mask v1 = m; v1 != 0; v1 = ( v1 - 1 ) & m )
        {
            const world_mask rest = m & ~v1;
            for ( world_mask v2 = rest; v2 != 0; v2 = ( v2 - 1 ) & rest )
                if ( g.pairs().contains( v1, v2 ) )
                    return false;
        }
    }
    return true;
}

// --- 10 --------------------------------------------------------------------
bool structure_suite( checks& c )
{
    tally exhaustive, chain_ok, inside, same_chain, supports, meets, joins;
    for ( std::uint64_t seed = 0; seed < 1000; ++seed )
    {
        oracle::rng rng( 0xc0ffee + seed );
        const int n = rng.between( 2, oracle::exhaustive_limit );
        const auto g = oracle::sample_belief_algebra( rng, n ).algebra;
        const std::string at = "seed " + std::to_string( seed );

        if ( n <= 4 )
            exhaustive.record( oracle::verify_backbone_exhaustive( g ), at );
        chain_ok.record( chain_conditions_hold( g ), at );
        const auto cg = com( g );
        inside.record( is_subset( g.pairs(), cg.pairs() ), at );
        same_chain.record( cg.chain() == g.chain(), at );

        bool consistent = true;
        for ( const auto& p : g.pairs() )
            if ( !p.right().empty() )
                consistent = consistent && g.chain().support_index( p.left() ) < g.chain().support_index( p.right() );
        supports.record( consistent, at );

        const auto p = oracle::sample_preorder( rng, n );
        const auto a = oracle::sample_with_backbone( rng, p );
        const auto b = oracle::sample_with_backbone( rng, p );
        const auto both = intersect( a.pairs(), b.pairs() );
        meets.record( check_axioms( both ).all_passed() && meet( a, b ).chain() == p.as_backbone(), at );
        bool joined = false;
        try
        {
            const auto raw = oracle::naive_gen( unite( a.pairs(), b.pairs() ) );
            joined = check_axioms( raw ).all_passed() && join( a, b ).pairs() == raw
                     && join( a, b ).chain() == p.as_backbone();
        }
        catch ( const conflict_error& )
        {
            joined = false;
        }
        joins.record( joined, at );
    }
    exhaustive.report( c, "backbone unique under exhaustive search (|W| <= 4)" );
    chain_ok.report( c, "backbone cells partition W and are internally incomparable" );
    inside.report( c, "g within com(g)" );
    same_chain.report( c, "com(g) keeps the backbone" );
    supports.report( c, "every strict pair has ordered supports" );
    meets.report( c, "meet of equal-backbone algebras stays in the class" );
    joins.report( c, "join of equal-backbone algebras stays in the class" );
    return c.ok();
}

struct process_result
{
    int status = -1;
    std::string out;
    std::string err;
};

std::string read_file( const std::filesystem::path& p )
{
    std::ifstream in( p, std::ios::binary );
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

process_result run( const std::string& command, const std::filesystem::path& dir, const std::string& tag )
{
    const auto out = dir / ( tag + ".out" );
    const auto err = dir / ( tag + ".err" );
    const int raw = std::system( ( command + " >" + out.string() + " 2>" + err.string() ).c_str() );
    process_result r;
    r.status = WIFEXITED( raw ) ? WEXITSTATUS( raw ) : -1;
    r.out = read_file( out );
    r.err = read_file( err );
    return r;
}

// --- 11 --------------------------------------------------------------------
bool determinism( checks& c, const std::string& cli )
{
    if ( cli.empty() )
    {
        c.expect( false, "path to the command-line tool given" );
        return false;
    }
    const auto dir = std::filesystem::temp_directory_path() / ( "beliefrev_acceptance_" + std::to_string( ::getpid() ) );
    std::filesystem::create_directories( dir );

    const auto first = run( "\"" + cli + "\" demo", dir, "demo1" );
    const auto second = run( "\"" + cli + "\" demo", dir, "demo2" );
    c.expect( first.status == 0 && second.status == 0, "demo exits 0 twice" );
    c.expect( !first.out.empty() && first.out == second.out, "demo stdout is byte-identical across runs" );

    const auto input = dir / "conflict.json";
    std::ofstream( input ) << R"({"worlds":4,"pairs":[[[0],[1]],[[1],[0]]]})";
    const auto conflict = run( "\"" + cli + "\" gen -i " + input.string(), dir, "conflict" );
    c.expect( conflict.status == 2, "conflicting input exits with code 2" );
    c.expect( conflict.err.find( "witness" ) != std::string::npos, "conflict diagnostic names a witness" );
    c.expect( conflict.out.empty(), "no document on stdout for a conflict" );

    int rejected = 0;
    int total = 0;
    int cli_rejected = 0;
    int cli_total = 0;
    for ( int n = 1; n <= 4; ++n )
        for ( const auto& p : all_disjoint_pairs( n ) )
        {
            ++total;
            relation omega( n, { p, p.mirrored() } );
            try
            {
                (void)gen( omega );
            }
            catch ( const conflict_error& )
            {
                ++rejected;
            }
            if ( n <= 3 )
            {
                ++cli_total;
                cli::options opt;
                opt.input_text = R"({"worlds":)" + std::to_string( n ) + R"(,"pairs":[[)"
                                 + nlohmann::json( p.left().members() ).dump() + ","
                                 + nlohmann::json( p.right().members() ).dump() + "],["
                                 + nlohmann::json( p.right().members() ).dump() + ","
                                 + nlohmann::json( p.left().members() ).dump() + "]]}";
                const auto r = cli::cmd_gen( opt );
                if ( r.exit_code == cli::exit_code::conflict && r.err.find( "witness" ) != std::string::npos )
                    ++cli_rejected;
            }
        }
    c.expect( rejected == total, "every {(U,V),(V,U)} over 1-4 worlds is rejected: " + std::to_string( rejected ) + "/"
                                         + std::to_string( total ) );
    c.expect( cli_rejected == cli_total, "gen command rejects each with exit 2 (1-3 worlds): "
                                                 + std::to_string( cli_rejected ) + "/" + std::to_string( cli_total ) );
    std::filesystem::remove_all( dir );
    return c.ok();
}

struct criterion
{
    const char* title;
    double limit_seconds;
    std::function< bool( checks&, const std::string& ) > body;
};

template< typename Fn >
std::function< bool( checks&, const std::string& ) > plain( Fn fn )
{
    return [ fn ]( checks& c, const std::string& ) { return fn( c ); };
}

const std::vector< criterion >& criteria()
{
    static const std::vector< criterion > all{
            { "closure of {(12,34)} equals the three-pair reference listing", 0.1, plain( closure_of_one_pair ) },
            { "complete algebra of w1~w2 < w3~w4 equals the 11-pair reference listing", 0.1, plain( preorder_to_algebra ) },
            { "evidence algebra Gen({(14,23)}), its backbone and completion", 0.1, plain( evidence_algebra ) },
            { "worked revision reproduces every reference listing", 1.0, plain( worked_revision ) },
            { "preorder revision on three evidence orders", 0.1, plain( preorder_revision ) },
            { "revision of two complete algebras", 0.1, plain( complete_revision ) },
            { "formula plus conditional evidence yields a strict chain", 0.5, plain( conditional_evidence ) },
            { "gen agrees with the brute-force closure on 1000 seeds", 60.0, plain( closure_matches_oracle ) },
            { "postulate suite on 500 sampled pairs", 120.0, plain( postulate_suite ) },
            { "structure suite on 1000 sampled algebras", 120.0, plain( structure_suite ) },
            // No time limit is set for this one; 60 s only guards against a hang.
            { "deterministic demo, conflict exit codes, exhaustive mirror rejection", 60.0, determinism },
    };
    return all;
}

} // namespace

int main( int argc, char** argv )
{
    if ( argc < 2 )
    {
        std::cerr << "usage: acceptance <criterion 1-" << criteria().size() << "> [cli-path]\n";
        return 2;
    }
    const int index = std::atoi( argv[ 1 ] );
    if ( index < 1 || index > static_cast< int >( criteria().size() ) )
    {
        std::cerr << "no criterion " << argv[ 1 ] << "\n";
        return 2;
    }
    const auto& crit = criteria()[ static_cast< std::size_t >( index - 1 ) ];
    const std::string cli = argc > 2 ? argv[ 2 ] : "";

    checks c;
    bool passed = false;
    const auto start = std::chrono::steady_clock::now();
    try
    {
        passed = crit.body( c, cli );
    }
    catch ( const std::exception& e )
    {
        c.expect( false, std::string( "unexpected exception: " ) + e.what() );
    }
    const double seconds = std::chrono::duration< double >( std::chrono::steady_clock::now() - start ).count();
    const bool in_time = seconds < crit.limit_seconds;
    if ( !in_time )
        c.expect( false, "time limit exceeded" );
    passed = passed && in_time && c.ok();

    char timing[ 64 ];
    std::snprintf( timing, sizeof timing, "%.3f s, limit %.1f s", seconds, crit.limit_seconds );
    std::cout << "criterion " << index << ": " << ( passed ? "PASS" : "FAIL" ) << " - " << crit.title << " (" << timing
              << ")\n";
    return passed ? 0 : 1;
}
