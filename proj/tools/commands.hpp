#pragma once

#include "beliefrev/world_set.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace beliefrev::cli
{

namespace exit_code
{
inline constexpr int ok = 0;
inline constexpr int input = 1;
inline constexpr int conflict = 2;
inline constexpr int check_failed = 3;
} // namespace exit_code

struct command_result
{
    int exit_code = exit_code::ok;
    std::string out;
    std::string err;
};

struct options
{
    std::string input_text;  // the current document
    std::vector< std::string > evidence_texts;
    std::vector< std::string > formulas;
    std::vector< std::string > conditionals;  // "beta|alpha"
    bool trace = false;
    bool as_generators = false;
    int fuzz = 0;
    std::uint64_t seed = 0;
    int max_worlds = default_closure_cap;
};

// Each command maps library exceptions to exit codes itself, so callers
// (main and the tests) see identical behaviour.
[[nodiscard]] command_result cmd_gen( const options& opt );
[[nodiscard]] command_result cmd_backbone( const options& opt );
[[nodiscard]] command_result cmd_com( const options& opt );
[[nodiscard]] command_result cmd_revise( const options& opt );
[[nodiscard]] command_result cmd_revise_preorder( const options& opt );
[[nodiscard]] command_result cmd_check( const options& opt );
[[nodiscard]] command_result cmd_demo();

} // namespace beliefrev::cli
