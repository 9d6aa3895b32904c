#pragma once

#include "world_set.hpp"

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace beliefrev
{

// An ordered pair (U, V) of disjoint world sets, read "U is strictly more
// believable than V".
class world_pair
{
    world_set _left;
    world_set _right;

public:
    world_pair( world_set left, world_set right );
    world_pair( world_mask left, world_mask right, int universe_size );

    [[nodiscard]] const world_set& left() const { return _left; }
    [[nodiscard]] const world_set& right() const { return _right; }
    [[nodiscard]] int universe_size() const { return _left.universe_size(); }
    [[nodiscard]] world_set worlds() const { return _left | _right; }
    [[nodiscard]] world_pair mirrored() const { return { _right, _left }; }
    [[nodiscard]] std::uint64_t key() const
    {
        return ( std::uint64_t{ _left.bits() } << 32 ) | _right.bits();
    }

    friend bool operator==( const world_pair& lhs, const world_pair& rhs ) = default;
    friend std::strong_ordering operator<=>( const world_pair& lhs, const world_pair& rhs )
    {
        if ( auto c = lhs._left <=> rhs._left; c != 0 )
            return c;
        return lhs._right <=> rhs._right;
    }
};

// "(14,23)" with 1-based worlds, the compact notation of the worked examples.
[[nodiscard]] std::string one_based_label( const world_pair& pair );

// A finite set of pairs over one universe, kept sorted by (left bits, right
// bits) with no duplicates.
class relation
{
    int _universe = 0;
    std::vector< world_pair > _pairs;

public:
    relation() = default;
    explicit relation( int universe_size );
    relation( int universe_size, std::vector< world_pair > pairs );

    [[nodiscard]] int universe_size() const { return _universe; }
    [[nodiscard]] std::size_t size() const { return _pairs.size(); }
    [[nodiscard]] bool empty() const { return _pairs.empty(); }
    [[nodiscard]] bool contains( const world_pair& pair ) const;
    [[nodiscard]] bool contains( world_mask left, world_mask right ) const;

    // Returns false when the pair was already present.
    bool insert( const world_pair& pair );

    [[nodiscard]] std::span< const world_pair > pairs() const { return _pairs; }
    [[nodiscard]] auto begin() const { return _pairs.begin(); }
    [[nodiscard]] auto end() const { return _pairs.end(); }

    // Pairs whose right component is nonempty, i.e. everything outside Tr(W).
    [[nodiscard]] relation strict_part() const;

    friend bool operator==( const relation& lhs, const relation& rhs ) = default;
};

// All 3^n disjoint pairs R_W, including those with empty components.
[[nodiscard]] relation all_disjoint_pairs( int universe_size, int closure_cap = default_closure_cap );

// Tr(W) = {(U, {}) | U nonempty}.
[[nodiscard]] relation trivial_pairs( int universe_size );

[[nodiscard]] bool is_subset( const relation& lhs, const relation& rhs );
[[nodiscard]] relation unite( const relation& lhs, const relation& rhs );
[[nodiscard]] relation intersect( const relation& lhs, const relation& rhs );
[[nodiscard]] relation difference( const relation& lhs, const relation& rhs );

[[nodiscard]] std::string one_based_label( const relation& rel );

// Parses the compact 1-based notation "(1,3),(14,23),(12,-)": each digit is a
// world number (1..9); "-" or nothing stands for the empty set.
[[nodiscard]] relation parse_one_based_listing( std::string_view text, int universe_size );

} // namespace beliefrev
