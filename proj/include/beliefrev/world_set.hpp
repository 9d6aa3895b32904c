#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace beliefrev
{

using world_mask = std::uint32_t;

// Hard representation limit; the soft closure cap is default_closure_cap.
inline constexpr int max_representable_worlds = 16;
inline constexpr int default_closure_cap = 10;

[[nodiscard]] constexpr world_mask full_mask( int universe_size )
{
    return universe_size == 0 ? 0u : ( ~world_mask{ 0 } >> ( 32 - universe_size ) );
}

// A subset of the world universe {0, ..., universe_size - 1}, stored as a bit
// vector (bit i set iff world i is a member).
class world_set
{
    world_mask _bits = 0;
    int _universe = 0;

public:
    world_set() = default;
    explicit world_set( int universe_size );
    world_set( world_mask bits, int universe_size );

    static world_set full( int universe_size );
    static world_set singleton( int world, int universe_size );
    static world_set of( std::initializer_list< int > worlds, int universe_size );
    static world_set of( const std::vector< int >& worlds, int universe_size );

    [[nodiscard]] world_mask bits() const { return _bits; }
    [[nodiscard]] int universe_size() const { return _universe; }
    [[nodiscard]] int size() const;
    [[nodiscard]] bool empty() const { return _bits == 0; }
    [[nodiscard]] bool contains( int world ) const;
    [[nodiscard]] bool intersects( const world_set& other ) const { return ( _bits & other._bits ) != 0; }
    [[nodiscard]] bool subset_of( const world_set& other ) const;
    [[nodiscard]] std::vector< int > members() const;

    [[nodiscard]] world_set complement() const;

    friend world_set operator|( const world_set& lhs, const world_set& rhs );
    friend world_set operator&( const world_set& lhs, const world_set& rhs );
    friend world_set operator-( const world_set& lhs, const world_set& rhs );

    friend bool operator==( const world_set& lhs, const world_set& rhs ) = default;
    friend std::strong_ordering operator<=>( const world_set& lhs, const world_set& rhs )
    {
        if ( auto c = lhs._universe <=> rhs._universe; c != 0 )
            return c;
        return lhs._bits <=> rhs._bits;
    }
};

// "{1,4}"-style label with 1-based world numbers, matching the usual
// omega_1..omega_n presentation.
[[nodiscard]] std::string one_based_label( const world_set& set );

// "[0,3]"-style label with the 0-based indices used in documents.
[[nodiscard]] std::string zero_based_label( const world_set& set );

} // namespace beliefrev
