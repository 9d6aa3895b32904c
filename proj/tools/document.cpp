#include "document.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace beliefrev::cli
{

namespace
{

int atom_cap( int max_worlds )
{
    return static_cast< int >( std::bit_width( static_cast< unsigned >( max_worlds ) ) ) - 1;
}

int world_index( const nlohmann::json& j, int worlds, const std::string& where )
{
    if ( !j.is_number_integer() )
        throw input_error( where + ": world indices must be integers" );
    const auto value = j.get< long long >();
    if ( value < 0 || value >= worlds )
        throw input_error( where + ": world index " + std::to_string( value ) + " is outside 0.."
                           + std::to_string( worlds - 1 ) );
    return static_cast< int >( value );
}

world_set parse_side( const nlohmann::json& j, const belief_document& doc, const std::string& where )
{
    if ( j.is_string() )
    {
        if ( !doc.vocab )
            throw input_error( where + ": formula sides need an \"atoms\" list" );
        return models( parse_formula( j.get< std::string >(), *doc.vocab ), *doc.vocab );
    }
    if ( !j.is_array() )
        throw input_error( where + ": a pair side must be an index array or a formula string" );
    world_set out( doc.worlds );
    for ( const auto& item : j )
    {
        const int w = world_index( item, doc.worlds, where );
        if ( out.contains( w ) )
            throw input_error( where + ": world " + std::to_string( w ) + " is listed twice" );
        out = out | world_set::singleton( w, doc.worlds );
    }
    return out;
}

std::vector< int > index_array( const world_set& s )
{
    return s.members();
}

void put_header( ordered_json& out, const char* kind, int worlds, const std::optional< vocabulary >& vocab )
{
    out[ "kind" ] = kind;
    if ( vocab )
        out[ "atoms" ] = vocab->atoms();
    out[ "worlds" ] = worlds;
}

} // namespace

belief_document parse_document( const nlohmann::json& j, int max_worlds )
{
    if ( !j.is_object() )
        throw input_error( "a belief document must be a JSON object" );
    static const std::set< std::string > known{ "kind", "atoms", "worlds", "pairs", "levels" };
    for ( const auto& [ key, _ ] : j.items() )
        if ( !known.contains( key ) )
            throw input_error( "unknown document field \"" + key + "\"" );

    belief_document doc;

    if ( j.contains( "atoms" ) )
    {
        const auto& atoms = j.at( "atoms" );
        if ( !atoms.is_array() )
            throw input_error( "\"atoms\" must be an array of strings" );
        std::vector< std::string > names;
        for ( const auto& a : atoms )
        {
            if ( !a.is_string() )
                throw input_error( "\"atoms\" must be an array of strings" );
            names.push_back( a.get< std::string >() );
        }
        if ( static_cast< int >( names.size() ) > atom_cap( max_worlds ) )
            throw cap_exceeded( 1 << std::min< int >( static_cast< int >( names.size() ), 30 ), max_worlds );
        doc.vocab.emplace( std::move( names ), atom_cap( max_worlds ) );
        doc.worlds = doc.vocab->universe_size();
        if ( j.contains( "worlds" ) && j.at( "worlds" ) != doc.worlds )
            throw input_error( "\"worlds\" disagrees with the number of atoms (expected "
                               + std::to_string( doc.worlds ) + ")" );
    }
    else
    {
        if ( !j.contains( "worlds" ) )
            throw input_error( "a document needs \"atoms\" or \"worlds\"" );
        const auto& w = j.at( "worlds" );
        if ( !w.is_number_integer() || w.get< long long >() < 1 )
            throw input_error( "\"worlds\" must be a positive integer" );
        if ( w.get< long long >() > max_worlds )
            throw cap_exceeded( static_cast< int >( std::min< long long >( w.get< long long >(), 1 << 30 ) ),
                                max_worlds );
        doc.worlds = static_cast< int >( w.get< long long >() );
    }

    const bool has_pairs = j.contains( "pairs" );
    const bool has_levels = j.contains( "levels" );
    if ( has_pairs == has_levels )
        throw input_error( "a document needs exactly one of \"pairs\" and \"levels\"" );

    if ( j.contains( "kind" ) )
    {
        const auto& k = j.at( "kind" );
        if ( k == "relation" )
            doc.kind = document_kind::relation;
        else if ( k == "preorder" )
            doc.kind = document_kind::preorder;
        else
            throw input_error( "\"kind\" must be \"relation\" or \"preorder\"" );
        if ( ( doc.kind == document_kind::relation ) != has_pairs )
            throw input_error( "\"kind\" does not match the document body" );
    }
    else
        doc.kind = has_pairs ? document_kind::relation : document_kind::preorder;

    if ( has_pairs )
    {
        const auto& pairs = j.at( "pairs" );
        if ( !pairs.is_array() )
            throw input_error( "\"pairs\" must be an array" );
        relation rel( doc.worlds );
        for ( std::size_t i = 0; i < pairs.size(); ++i )
        {
            const std::string where = "pair " + std::to_string( i );
            const auto& p = pairs[ i ];
            if ( !p.is_array() || p.size() != 2 )
                throw input_error( where + ": expected [U, V]" );
            const auto u = parse_side( p[ 0 ], doc, where );
            const auto v = parse_side( p[ 1 ], doc, where );
            if ( u.intersects( v ) )
                throw input_error( where + ": sides overlap in " + zero_based_label( u & v ) );
            rel.insert( world_pair( u, v ) );
        }
        doc.pairs = std::move( rel );
    }
    else
    {
        const auto& levels = j.at( "levels" );
        if ( !levels.is_array() )
            throw input_error( "\"levels\" must be an array of index arrays" );
        std::vector< std::vector< int > > cells;
        for ( std::size_t i = 0; i < levels.size(); ++i )
        {
            const std::string where = "level " + std::to_string( i );
            if ( !levels[ i ].is_array() )
                throw input_error( where + ": expected an index array" );
            auto& cell = cells.emplace_back();
            for ( const auto& item : levels[ i ] )
                cell.push_back( world_index( item, doc.worlds, where ) );
        }
        doc.order = total_preorder::from_levels( cells, doc.worlds );
    }
    return doc;
}

belief_document parse_document_text( const std::string& text, int max_worlds )
{
    nlohmann::json j;
    try
    {
        j = nlohmann::json::parse( text );
    }
    catch ( const nlohmann::json::parse_error& e )
    {
        throw parse_error( std::string( "malformed JSON: " ) + e.what(), e.byte );
    }
    return parse_document( j, max_worlds );
}

belief_algebra to_algebra( const belief_document& doc, int max_worlds )
{
    if ( doc.kind == document_kind::preorder )
        return cba_from_preorder( *doc.order );
    return gen( *doc.pairs, max_worlds );
}

ordered_json pair_json( const world_pair& p )
{
    return ordered_json::array( { index_array( p.left() ), index_array( p.right() ) } );
}

ordered_json relation_json( const relation& rel, const std::optional< vocabulary >& vocab )
{
    ordered_json out;
    put_header( out, "relation", rel.universe_size(), vocab );
    auto pairs = ordered_json::array();
    for ( const auto& p : rel )
        pairs.push_back( pair_json( p ) );
    out[ "pairs" ] = std::move( pairs );
    return out;
}

ordered_json preorder_json( const total_preorder& p, const std::optional< vocabulary >& vocab )
{
    ordered_json out;
    put_header( out, "preorder", p.universe_size(), vocab );
    out[ "levels" ] = p.levels();
    return out;
}

ordered_json backbone_json( const backbone& b, const std::optional< vocabulary >& vocab )
{
    ordered_json out;
    put_header( out, "backbone", b.universe_size(), vocab );
    auto cells = ordered_json::array();
    for ( const auto& c : b.cells() )
        cells.push_back( index_array( c ) );
    out[ "cells" ] = std::move( cells );
    return out;
}

namespace
{

// Objects are expanded, arrays of arrays get one element per line, anything
// else is printed compactly.
void write( std::string& out, const ordered_json& j, int depth )
{
    const std::string pad( static_cast< std::size_t >( 2 * ( depth + 1 ) ), ' ' );
    const std::string close_pad( static_cast< std::size_t >( 2 * depth ), ' ' );
    if ( j.is_object() && !j.empty() )
    {
        out += "{\n";
        std::size_t i = 0;
        for ( const auto& [ key, value ] : j.items() )
        {
            out += pad + ordered_json( key ).dump() + ": ";
            write( out, value, depth + 1 );
            out += ++i < j.size() ? ",\n" : "\n";
        }
        out += close_pad + "}";
        return;
    }
    const bool nested = j.is_array() && !j.empty()
                        && std::all_of( j.begin(), j.end(), []( const ordered_json& e ) {
                               return e.is_array() && !e.empty() && e.front().is_array();
                           } );
    if ( !nested )
    {
        out += j.dump();
        return;
    }
    out += "[\n";
    for ( std::size_t i = 0; i < j.size(); ++i )
        out += pad + j[ i ].dump() + ( i + 1 < j.size() ? ",\n" : "\n" );
    out += close_pad + "]";
}

} // namespace

std::string dump( const ordered_json& j )
{
    std::string out;
    write( out, j, 0 );
    return out + "\n";
}

} // namespace beliefrev::cli
