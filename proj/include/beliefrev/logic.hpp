#pragma once

#include "world_set.hpp"

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace beliefrev
{

inline constexpr int default_max_atoms = 3;

// Ordered list of distinct propositional atoms. World index w assigns atom j
// (0-based) the value true iff bit (n - 1 - j) of w is clear, so for atoms
// (b, f) the worlds 0..3 are b&f, b&!f, !b&f, !b&!f.
class vocabulary
{
    std::vector< std::string > _atoms;

public:
    explicit vocabulary( std::vector< std::string > atoms, int max_atoms = default_max_atoms );

    [[nodiscard]] int size() const { return static_cast< int >( _atoms.size() ); }
    [[nodiscard]] int universe_size() const { return 1 << size(); }
    [[nodiscard]] const std::string& atom( int index ) const { return _atoms.at( index ); }
    [[nodiscard]] const std::vector< std::string >& atoms() const { return _atoms; }
    [[nodiscard]] std::optional< int > index_of( std::string_view name ) const;
    [[nodiscard]] bool holds( int atom_index, int world ) const;

    friend bool operator==( const vocabulary&, const vocabulary& ) = default;
};

// Immutable propositional formula; copies share structure.
class formula
{
public:
    enum class op
    {
        top,
        bottom,
        atom,
        negation,
        conjunction,
        disjunction,
        implication,
        biconditional,
    };

private:
    struct node;
    std::shared_ptr< const node > _node;

    explicit formula( std::shared_ptr< const node > n ) : _node{ std::move( n ) } {}

public:
    static formula top();
    static formula bottom();
    static formula atom( int index );
    static formula negation( formula operand );
    static formula conjunction( formula lhs, formula rhs );
    static formula disjunction( formula lhs, formula rhs );
    static formula implication( formula lhs, formula rhs );
    static formula biconditional( formula lhs, formula rhs );

    [[nodiscard]] op kind() const;
    [[nodiscard]] int atom_index() const;
    [[nodiscard]] const formula& operand() const;
    [[nodiscard]] const formula& lhs() const;
    [[nodiscard]] const formula& rhs() const;

    [[nodiscard]] bool evaluate( int world, const vocabulary& vocab ) const;
    [[nodiscard]] std::string to_string( const vocabulary& vocab ) const;

    friend bool operator==( const formula& lhs, const formula& rhs );
};

// Grammar, loosest binding first:
//   iff   := imp ( "<->" imp )*          left-associative
//   imp   := or ( "->" imp )?            right-associative
//   or    := and ( "|" and )*
//   and   := unary ( "&" unary )*
//   unary := ( "!" | "~" ) unary | "T" | "F" | atom | "(" iff ")"
[[nodiscard]] formula parse_formula( std::string_view text, const vocabulary& vocab );

// [f]: the set of worlds satisfying f, by exhaustive evaluation.
[[nodiscard]] world_set models( const formula& f, const vocabulary& vocab );

// Conjunction of literals true exactly at the given world.
[[nodiscard]] formula characteristic_formula( int world, const vocabulary& vocab );

} // namespace beliefrev
