#include "commands.hpp"

#include "beliefrev/preorder.hpp"
#include "beliefrev/revision.hpp"

#include <sstream>

namespace beliefrev::cli
{

namespace
{

constexpr int demo_worlds = 4;

// One stage of the scenario: the computed relation, the listing as printed in
// the source material, and the pairs that listing leaves out although the
// axioms force them. The check is computed == listed | omitted.
struct stage
{
    std::string name;
    relation computed;
    std::string listed;
    std::string omitted;
    bool strict_only = true;  // compare without the trivial pairs
};

std::string zero_based_pairs( const relation& rel )
{
    std::string out;
    for ( const auto& p : rel )
    {
        if ( !out.empty() )
            out += ",";
        out += "(" + zero_based_label( p.left() ) + "," + zero_based_label( p.right() ) + ")";
    }
    return out.empty() ? "none" : out;
}

std::string zero_based_chain( const backbone& b )
{
    std::string out;
    for ( const auto& c : b.cells() )
    {
        if ( !out.empty() )
            out += " >> ";
        out += zero_based_label( c );
    }
    return out;
}

std::string one_based_pairs( const relation& rel )
{
    return rel.empty() ? "none" : one_based_label( rel );
}

class report
{
    std::ostringstream _out;
    bool _ok = true;

public:
    void line( const std::string& s ) { _out << s << "\n"; }

    void check_stage( const stage& s )
    {
        const relation shown = s.strict_only ? s.computed.strict_part() : s.computed;
        const auto listed = parse_one_based_listing( s.listed, demo_worlds );
        const auto omitted = parse_one_based_listing( s.omitted, demo_worlds );
        const auto expected = unite( listed, omitted );
        const bool match = shown == expected;
        _ok = _ok && match;

        line( s.name + ( s.strict_only ? " (" + std::to_string( shown.size() ) + " pairs besides Tr(W))"
                                       : " (" + std::to_string( shown.size() ) + " pairs)" ) );
        line( "  1-based: " + one_based_pairs( shown ) );
        line( "  0-based: " + zero_based_pairs( shown ) );
        line( "  listed " + std::to_string( listed.size() ) + ", not in the listing but forced by the axioms: "
              + one_based_pairs( difference( shown, listed ) ) );
        const auto spurious = difference( listed, shown );
        if ( !spurious.empty() )
            line( "  listed but not derived: " + one_based_label( spurious ) );
        line( std::string( "  check: " ) + ( match ? "ok" : "MISMATCH" ) );
    }

    void check_chain( const std::string& name, const backbone& computed, const backbone& expected )
    {
        const bool match = computed == expected;
        _ok = _ok && match;
        line( name + ": " + one_based_label( computed ) + "  (0-based " + zero_based_chain( computed ) + ")  "
              + ( match ? "ok" : "MISMATCH, expected " + one_based_label( expected ) ) );
    }

    void check_equal( const std::string& name, bool match )
    {
        _ok = _ok && match;
        line( name + ": " + ( match ? "ok" : "MISMATCH" ) );
    }

    [[nodiscard]] bool ok() const { return _ok; }
    [[nodiscard]] std::string text() const { return _out.str(); }
};

backbone chain_of( std::initializer_list< std::initializer_list< int > > one_based )
{
    std::vector< world_set > cells;
    for ( const auto& cell : one_based )
    {
        world_set s( demo_worlds );
        for ( int w : cell )
            s = s | world_set::singleton( w - 1, demo_worlds );
        cells.push_back( s );
    }
    return backbone( std::move( cells ) );
}

belief_algebra gen_of( const std::string& listing )
{
    return gen( parse_one_based_listing( listing, demo_worlds ) );
}

} // namespace

command_result cmd_demo()
{
    report rep;
    const vocabulary vocab( { "b", "f" } );

    rep.line( "worlds over atoms b, f (1-based label = 0-based index + 1):" );
    for ( int w = 0; w < demo_worlds; ++w )
        rep.line( "  w" + std::to_string( w + 1 ) + " = index " + std::to_string( w ) + ": "
                  + characteristic_formula( w, vocab ).to_string( vocab ) );
    rep.line( "" );

    // Current belief: the preorder w1~w2 < w3~w4.
    const auto p1 = total_preorder::from_levels( { { 0, 1 }, { 2, 3 } }, demo_worlds );
    const auto g1 = cba_from_preorder( p1 );
    rep.line( "== scenario 1: revise by mu with [mu] = {w1,w4} ==" );
    rep.line( "current belief " + one_based_label( p1 ) );
    rep.check_stage( { "G1", g1.pairs(),
                       "(1,3),(1,4),(2,3),(2,4),(12,3),(12,4),(12,34),(13,4),(14,3),(23,4),(24,3),(123,4),(124,3)",
                       "(1,34),(2,34)" } );

    const auto mu = parse_formula( "b <-> f", vocab );
    const auto g2 = evidence_from_formula( mu, vocab );
    rep.line( "evidence mu = " + mu.to_string( vocab ) + ", [mu] = " + one_based_label( models( mu, vocab ) ) );
    rep.check_stage( { "G2 = Gen({([mu],[!mu])})", g2.pairs(), "(14,23),(14,2),(14,3),(142,3),(143,2)", "" } );
    rep.check_chain( "backbone of G2", g2.chain(), chain_of( { { 1, 4 }, { 2, 3 } } ) );
    rep.check_equal( "G2 is not complete", !is_cba( g2 ) );

    const auto trace = revise( g1, g2 );
    rep.check_stage( { "Com(G2)", trace.com_g2.pairs(),
                       "(1,2),(1,3),(4,2),(4,3),(14,23),(14,2),(14,3),(12,3),(13,2),(24,3),(34,2),(142,3),(143,2)",
                       "(1,23),(4,23)" } );
    rep.check_equal( "Com(G2) = Gen({(1,2),(1,3),(4,2),(4,3)})", trace.com_g2 == gen_of( "(1,2),(1,3),(4,2),(4,3)" ) );
    rep.check_stage( { "Lambda(G1, Com(G2))", trace.lambda, "(1,4),(2,3)", "" } );
    rep.check_stage( { "G* = Com(G1) * Com(G2)", trace.g_star.pairs(),
                       "(1,4),(1,2),(1,3),(4,2),(4,3),(2,3),(1,24),(1,23),(1,34),(1,234),(4,23),(14,2),(14,3),"
                       "(14,23),(13,4),(13,2),(13,24),(12,3),(12,4),(12,34),(42,3),(43,2),(123,4),(124,3),(134,2)",
                       "" } );
    rep.check_chain( "backbone of G*", trace.g_star.chain(), chain_of( { { 1 }, { 4 }, { 2 }, { 3 } } ) );
    rep.check_stage( { "G1 restricted to G*", trace.g1_cap_gstar.strict_part(),
                       "(1,3),(1,4),(2,3),(12,3),(12,4),(12,34),(13,4),(14,3),(24,3),(123,4),(124,3)", "(1,34)" } );
    rep.check_stage( { "G1 * G2", trace.result.pairs(),
                       "(1,2),(1,3),(1,4),(2,3),(1,23),(1,24),(1,34),(1,234),(12,3),(12,4),(12,34),(13,2),(13,4),"
                       "(13,24),(14,2),(14,3),(14,23),(24,3),(123,4),(124,3)",
                       "(134,2)" } );
    rep.check_chain( "backbone of G1 * G2", trace.result.chain(), chain_of( { { 1 }, { 2, 4 }, { 3 } } ) );
    rep.check_equal( "G1 * G2 = Gen({(1,4),(1,2),(1,3),(2,3)})",
                     trace.result == gen_of( "(1,4),(1,2),(1,3),(2,3)" ) );
    rep.check_equal( "G1 * G2 = Gen(backbone + {(2,3)})",
                     trace.result
                             == gen( unite( chain_generators( trace.result.chain() ),
                                            parse_one_based_listing( "(2,3)", demo_worlds ) ) ) );
    rep.line( "" );

    rep.line( "== scenario 2: revise by {mu, (!b | !f)} ==" );
    const auto conditional = evidence_from_conditional( parse_formula( "!f", vocab ), parse_formula( "!b", vocab ),
                                                        vocab );
    rep.line( "conditional (!b | !f) gives " + one_based_label( conditional ) );
    relation evidence = g2.pairs();
    evidence.insert( conditional );
    const auto variant = revise( g1, gen( evidence ) ).result;
    const auto strict_chain = chain_of( { { 1 }, { 4 }, { 2 }, { 3 } } );
    rep.check_chain( "backbone of the result", variant.chain(), strict_chain );
    rep.check_equal( "result = Gen({w1} >> {w4} >> {w2} >> {w3})", variant == gen( chain_generators( strict_chain ) ) );
    rep.check_equal( "result is complete", is_cba( variant ) );
    rep.line( "" );
    rep.line( rep.ok() ? "demo: all checks ok" : "demo: MISMATCH" );

    command_result r;
    r.out = rep.text();
    if ( !rep.ok() )
    {
        r.exit_code = exit_code::check_failed;
        r.err = "demo: computed sets differ from the expected ones\n";
    }
    return r;
}

} // namespace beliefrev::cli
