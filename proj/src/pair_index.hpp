#pragma once

#include "beliefrev/world_set.hpp"

#include <cstdint>
#include <unordered_set>
#include <vector>

namespace beliefrev::detail
{

// Membership set over pairs (U, V) of one universe: a dense byte table for
// small universes, hashing beyond that.
class pair_index
{
    static constexpr int dense_limit = 12;

    int _universe;
    std::vector< std::uint8_t > _dense;
    std::unordered_set< std::uint64_t > _sparse;

    [[nodiscard]] std::uint64_t slot( world_mask u, world_mask v ) const
    {
        return ( std::uint64_t{ u } << _universe ) | v;
    }

public:
    explicit pair_index( int universe_size ) : _universe{ universe_size }
    {
        if ( universe_size <= dense_limit )
            _dense.assign( std::size_t{ 1 } << ( 2 * universe_size ), 0 );
    }

    [[nodiscard]] bool contains( world_mask u, world_mask v ) const
    {
        if ( !_dense.empty() )
            return _dense[ slot( u, v ) ] != 0;
        return _sparse.contains( slot( u, v ) );
    }

    bool insert( world_mask u, world_mask v )
    {
        if ( !_dense.empty() )
        {
            auto& cell = _dense[ slot( u, v ) ];
            if ( cell )
                return false;
            cell = 1;
            return true;
        }
        return _sparse.insert( slot( u, v ) ).second;
    }
};

} // namespace beliefrev::detail
