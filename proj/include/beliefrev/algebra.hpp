#pragma once

#include "errors.hpp"
#include "relation.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace beliefrev
{

struct axiom_result
{
    std::string name;
    bool passed = true;
    // For A3/A4 the witness is the missing consequence; otherwise the
    // offending pair.
    std::optional< world_pair > witness{};
    std::string detail{};
};

struct axiom_report
{
    std::array< axiom_result, 5 > axioms;

    [[nodiscard]] bool all_passed() const;
    [[nodiscard]] const axiom_result& operator[]( std::size_t i ) const { return axioms.at( i ); }
    [[nodiscard]] std::string summary() const;
};

// Checks A0-A4 of a belief algebra on the relation exactly as given.
[[nodiscard]] axiom_report check_axioms( const relation& rel );

// Ordered partition U_1 >> ... >> U_n of the universe, most plausible first.
class backbone
{
    std::vector< world_set > _cells;
    std::vector< int > _cell_of;

public:
    // Throws input_error unless the cells are nonempty, pairwise disjoint and
    // cover the universe.
    explicit backbone( std::vector< world_set > cells );

    [[nodiscard]] const std::vector< world_set >& cells() const { return _cells; }
    [[nodiscard]] std::size_t size() const { return _cells.size(); }
    [[nodiscard]] int universe_size() const { return _cells.front().universe_size(); }
    [[nodiscard]] int cell_of( int world ) const { return _cell_of.at( world ); }

    // Index of I(v), the first cell meeting v.
    [[nodiscard]] int support_index( const world_set& v ) const;

    friend bool operator==( const backbone& lhs, const backbone& rhs ) { return lhs._cells == rhs._cells; }
};

// I(v): the most plausible cell of b that meets v.
[[nodiscard]] world_set support( const world_set& v, const backbone& b );

[[nodiscard]] std::string one_based_label( const backbone& b );

class belief_algebra
{
    relation _relation;
    std::optional< backbone > _chain;

    belief_algebra( relation rel, backbone chain ) : _relation{ std::move( rel ) }, _chain{ std::move( chain ) } {}

public:
    // Validates A0-A4; throws invalid_algebra with the failing axioms.
    static belief_algebra from_relation( relation rel );

    // For relations that are belief algebras by construction (closures,
    // completions, intersections). The backbone is still extracted and
    // re-verified.
    static belief_algebra from_closed_relation( relation rel );

    // (2^W, Tr(W)), the least belief algebra.
    static belief_algebra trivial( int universe_size );

    [[nodiscard]] const relation& pairs() const { return _relation; }
    [[nodiscard]] const backbone& chain() const { return *_chain; }
    [[nodiscard]] int universe_size() const { return _relation.universe_size(); }
    [[nodiscard]] bool contains( const world_pair& p ) const { return _relation.contains( p ); }

    friend bool operator==( const belief_algebra& lhs, const belief_algebra& rhs )
    {
        return lhs._relation == rhs._relation;
    }
};

class conflict_error : public error
{
    world_pair _witness;

public:
    conflict_error( const std::string& reason, world_pair witness )
            : error( "conflicting information: " + reason + " " + one_based_label( witness ) ),
              _witness{ std::move( witness ) }
    {}

    [[nodiscard]] const world_pair& witness() const { return _witness; }
};

// Gen(omega): least superset of omega closed under A1, A3 and A4. Throws
// conflict_error when the closure breaks A2 or contains a pair with an empty
// left side.
[[nodiscard]] belief_algebra gen( const relation& omega, int closure_cap = default_closure_cap );

// Backbone extraction: U_i is the intersection of every U within the
// remaining worlds W_i with (U, W_i \ U) in the relation.
[[nodiscard]] backbone extract_backbone( const relation& rel );

// Tail pairs (U_i, U_{i+1} | ... | U_n); Gen of these is the least algebra
// with this backbone.
[[nodiscard]] relation chain_generators( const backbone& b );

// The complete belief algebra over a backbone: Tr(W) plus every disjoint
// (U, V), U and V nonempty, whose supports are strictly ordered.
[[nodiscard]] belief_algebra complete_algebra( const backbone& b );

[[nodiscard]] belief_algebra com( const belief_algebra& g );
[[nodiscard]] bool is_cba( const belief_algebra& g );

[[nodiscard]] belief_algebra meet( const belief_algebra& lhs, const belief_algebra& rhs );

// Gen(lhs | rhs); both operands must share a backbone.
[[nodiscard]] belief_algebra join( const belief_algebra& lhs, const belief_algebra& rhs );

// A small generating set for g, found greedily: strict pairs are dropped,
// larger ones first, while Gen of the rest still equals g. Minimal with
// respect to single removals, not necessarily globally smallest.
[[nodiscard]] relation greedy_generators( const belief_algebra& g );

// Same backbone and relation inclusion.
[[nodiscard]] bool leq( const belief_algebra& lhs, const belief_algebra& rhs );

} // namespace beliefrev
