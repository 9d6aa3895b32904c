#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace beliefrev
{

// Base of every error raised by the library. Input-level problems (bad
// syntax, unknown atoms, mismatched universes) derive from input_error;
// conflict_error signals an irrational generator set; internal_error means a
// structural guarantee was violated, i.e. a bug.

class error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

class input_error : public error
{
public:
    using error::error;
};

class parse_error : public input_error
{
    std::size_t _position;

public:
    parse_error( const std::string& message, std::size_t position )
            : input_error( message + " at position " + std::to_string( position ) ), _position{ position }
    {}

    [[nodiscard]] std::size_t position() const { return _position; }
};

class unknown_atom_error : public input_error
{
    std::string _atom;

public:
    explicit unknown_atom_error( std::string atom )
            : input_error( "unknown atom '" + atom + "'" ), _atom{ std::move( atom ) }
    {}

    [[nodiscard]] const std::string& atom() const { return _atom; }
};

class universe_mismatch : public input_error
{
public:
    universe_mismatch( int lhs, int rhs )
            : input_error( "universe mismatch: " + std::to_string( lhs ) + " vs " + std::to_string( rhs ) + " worlds" )
    {}
};

class cap_exceeded : public input_error
{
public:
    cap_exceeded( int requested, int cap )
            : input_error( "universe of " + std::to_string( requested ) + " worlds exceeds cap of "
                           + std::to_string( cap ) )
    {}
};

class invalid_algebra : public input_error
{
public:
    using input_error::input_error;
};

class not_cba_error : public input_error
{
public:
    using input_error::input_error;
};

class backbone_mismatch : public input_error
{
public:
    using input_error::input_error;
};

class contradiction_error : public input_error
{
public:
    using input_error::input_error;
};

class internal_error : public error
{
public:
    using error::error;
};

} // namespace beliefrev
