#include "beliefrev/logic.hpp"
#include "beliefrev/errors.hpp"

#include <algorithm>
#include <cctype>

namespace beliefrev
{

namespace
{

bool is_identifier( std::string_view name )
{
    if ( name.empty() )
        return false;
    auto head = static_cast< unsigned char >( name.front() );
    if ( !std::isalpha( head ) && head != '_' )
        return false;
    return std::all_of( name.begin() + 1, name.end(), []( char c ) {
        auto u = static_cast< unsigned char >( c );
        return std::isalnum( u ) || u == '_';
    } );
}

} // namespace

vocabulary::vocabulary( std::vector< std::string > atoms, int max_atoms ) : _atoms{ std::move( atoms ) }
{
    if ( size() > max_atoms )
        throw cap_exceeded( 1 << std::min( size(), 30 ), 1 << std::min( max_atoms, 30 ) );
    for ( std::size_t i = 0; i < _atoms.size(); ++i )
    {
        const auto& name = _atoms[ i ];
        if ( !is_identifier( name ) )
            throw input_error( "invalid atom name '" + name + "'" );
        if ( name == "T" || name == "F" )
            throw input_error( "atom name '" + name + "' is reserved for a constant" );
        if ( std::find( _atoms.begin(), _atoms.begin() + static_cast< std::ptrdiff_t >( i ), name )
             != _atoms.begin() + static_cast< std::ptrdiff_t >( i ) )
            throw input_error( "duplicate atom '" + name + "'" );
    }
}

std::optional< int > vocabulary::index_of( std::string_view name ) const
{
    auto it = std::find( _atoms.begin(), _atoms.end(), name );
    if ( it == _atoms.end() )
        return std::nullopt;
    return static_cast< int >( it - _atoms.begin() );
}

bool vocabulary::holds( int atom_index, int world ) const
{
    return ( ( world >> ( size() - 1 - atom_index ) ) & 1 ) == 0;
}

struct formula::node
{
    op kind;
    int atom = -1;
    std::optional< formula > lhs{};
    std::optional< formula > rhs{};
};

formula formula::top()
{
    return formula{ std::make_shared< const node >( node{ op::top } ) };
}

formula formula::bottom()
{
    return formula{ std::make_shared< const node >( node{ op::bottom } ) };
}

formula formula::atom( int index )
{
    return formula{ std::make_shared< const node >( node{ op::atom, index } ) };
}

formula formula::negation( formula operand )
{
    return formula{ std::make_shared< const node >( node{ op::negation, -1, std::move( operand ) } ) };
}

formula formula::conjunction( formula lhs, formula rhs )
{
    return formula{ std::make_shared< const node >( node{ op::conjunction, -1, std::move( lhs ), std::move( rhs ) } ) };
}

formula formula::disjunction( formula lhs, formula rhs )
{
    return formula{ std::make_shared< const node >( node{ op::disjunction, -1, std::move( lhs ), std::move( rhs ) } ) };
}

formula formula::implication( formula lhs, formula rhs )
{
    return formula{ std::make_shared< const node >( node{ op::implication, -1, std::move( lhs ), std::move( rhs ) } ) };
}

formula formula::biconditional( formula lhs, formula rhs )
{
    return formula{
        std::make_shared< const node >( node{ op::biconditional, -1, std::move( lhs ), std::move( rhs ) } ) };
}

formula::op formula::kind() const
{
    return _node->kind;
}

int formula::atom_index() const
{
    return _node->atom;
}

const formula& formula::operand() const
{
    return *_node->lhs;
}

const formula& formula::lhs() const
{
    return *_node->lhs;
}

const formula& formula::rhs() const
{
    return *_node->rhs;
}

bool formula::evaluate( int world, const vocabulary& vocab ) const
{
    switch ( kind() )
    {
    case op::top: return true;
    case op::bottom: return false;
    case op::atom: return vocab.holds( atom_index(), world );
    case op::negation: return !operand().evaluate( world, vocab );
    case op::conjunction: return lhs().evaluate( world, vocab ) && rhs().evaluate( world, vocab );
    case op::disjunction: return lhs().evaluate( world, vocab ) || rhs().evaluate( world, vocab );
    case op::implication: return !lhs().evaluate( world, vocab ) || rhs().evaluate( world, vocab );
    case op::biconditional: return lhs().evaluate( world, vocab ) == rhs().evaluate( world, vocab );
    }
    return false;
}

std::string formula::to_string( const vocabulary& vocab ) const
{
    auto binary = [ & ]( const char* sym ) {
        return "(" + lhs().to_string( vocab ) + " " + sym + " " + rhs().to_string( vocab ) + ")";
    };
    switch ( kind() )
    {
    case op::top: return "T";
    case op::bottom: return "F";
    case op::atom: return vocab.atom( atom_index() );
    case op::negation: return "!" + operand().to_string( vocab );
    case op::conjunction: return binary( "&" );
    case op::disjunction: return binary( "|" );
    case op::implication: return binary( "->" );
    case op::biconditional: return binary( "<->" );
    }
    return {};
}

bool operator==( const formula& lhs, const formula& rhs )
{
    if ( lhs._node == rhs._node )
        return true;
    const auto& a = *lhs._node;
    const auto& b = *rhs._node;
    return a.kind == b.kind && a.atom == b.atom && a.lhs == b.lhs && a.rhs == b.rhs;
}

namespace
{

class parser
{
    std::string_view _text;
    const vocabulary& _vocab;
    std::size_t _pos = 0;

public:
    parser( std::string_view text, const vocabulary& vocab ) : _text{ text }, _vocab{ vocab } {}

    formula parse()
    {
        auto f = parse_iff();
        skip_space();
        if ( _pos != _text.size() )
            throw parse_error( "unexpected '" + std::string( 1, _text[ _pos ] ) + "'", _pos );
        return f;
    }

private:
    void skip_space()
    {
        while ( _pos < _text.size() && std::isspace( static_cast< unsigned char >( _text[ _pos ] ) ) )
            ++_pos;
    }

    bool accept( std::string_view token )
    {
        skip_space();
        if ( _text.substr( _pos, token.size() ) != token )
            return false;
        _pos += token.size();
        return true;
    }

    formula parse_iff()
    {
        auto f = parse_imp();
        while ( accept( "<->" ) )
            f = formula::biconditional( std::move( f ), parse_imp() );
        return f;
    }

    formula parse_imp()
    {
        auto f = parse_or();
        if ( accept( "->" ) )
            return formula::implication( std::move( f ), parse_imp() );
        return f;
    }

    formula parse_or()
    {
        auto f = parse_and();
        while ( accept( "|" ) )
            f = formula::disjunction( std::move( f ), parse_and() );
        return f;
    }

    formula parse_and()
    {
        auto f = parse_unary();
        while ( accept( "&" ) )
            f = formula::conjunction( std::move( f ), parse_unary() );
        return f;
    }

    formula parse_unary()
    {
        if ( accept( "!" ) || accept( "~" ) )
            return formula::negation( parse_unary() );
        if ( accept( "(" ) )
        {
            auto f = parse_iff();
            if ( !accept( ")" ) )
                throw parse_error( "expected ')'", _pos );
            return f;
        }
        skip_space();
        if ( _pos >= _text.size() )
            throw parse_error( "unexpected end of formula", _pos );

        const std::size_t start = _pos;
        auto ident = [ & ]( char c ) {
            auto u = static_cast< unsigned char >( c );
            return std::isalnum( u ) || u == '_';
        };
        if ( !std::isalpha( static_cast< unsigned char >( _text[ _pos ] ) ) && _text[ _pos ] != '_' )
            throw parse_error( "unexpected '" + std::string( 1, _text[ _pos ] ) + "'", _pos );
        while ( _pos < _text.size() && ident( _text[ _pos ] ) )
            ++_pos;
        auto name = _text.substr( start, _pos - start );
        if ( name == "T" )
            return formula::top();
        if ( name == "F" )
            return formula::bottom();
        auto index = _vocab.index_of( name );
        if ( !index )
            throw unknown_atom_error( std::string( name ) );
        return formula::atom( *index );
    }
};

} // namespace

formula parse_formula( std::string_view text, const vocabulary& vocab )
{
    return parser{ text, vocab }.parse();
}

world_set models( const formula& f, const vocabulary& vocab )
{
    std::vector< int > worlds;
    for ( int w = 0; w < vocab.universe_size(); ++w )
        if ( f.evaluate( w, vocab ) )
            worlds.push_back( w );
    return world_set::of( worlds, vocab.universe_size() );
}

formula characteristic_formula( int world, const vocabulary& vocab )
{
    if ( world < 0 || world >= vocab.universe_size() )
        throw input_error( "world index " + std::to_string( world ) + " out of range" );
    if ( vocab.size() == 0 )
        return formula::top();
    auto literal = [ & ]( int j ) {
        auto a = formula::atom( j );
        return vocab.holds( j, world ) ? a : formula::negation( a );
    };
    auto f = literal( 0 );
    for ( int j = 1; j < vocab.size(); ++j )
        f = formula::conjunction( std::move( f ), literal( j ) );
    return f;
}

} // namespace beliefrev
