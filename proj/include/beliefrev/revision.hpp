#pragma once

#include "algebra.hpp"
#include "logic.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace beliefrev
{

// Intermediates of one revision, in the order they are computed.
struct revision_trace
{
    belief_algebra com_g1;
    belief_algebra com_g2;
    relation lambda;
    belief_algebra g_star;       // Com(g1) revised by Com(g2), the upper bound
    relation g1_cap_gstar;       // pairs of g1 whose supports are ordered in g_star
    belief_algebra result;
};

// Singleton preferences of g1 between worlds that share a backbone cell of g2.
// Both arguments must be complete.
[[nodiscard]] relation lambda_set( const belief_algebra& g1, const belief_algebra& g2 );

// Revision of a complete algebra by a complete algebra: Gen(lambda | g2).
[[nodiscard]] belief_algebra revise_cba( const belief_algebra& g1, const belief_algebra& g2 );

// Revision of arbitrary belief algebras. The evidence g2 always wins.
[[nodiscard]] revision_trace revise( const belief_algebra& g1, const belief_algebra& g2 );

// Evidence "mu is more believable than not mu". A tautology is vacuous
// evidence (the trivial algebra); a contradiction throws contradiction_error.
[[nodiscard]] belief_algebra evidence_from_formula( const formula& mu, const vocabulary& vocab );

// Conditional belief (beta | alpha) as the pair ([alpha & beta], [alpha & !beta]).
[[nodiscard]] world_pair evidence_from_conditional( const formula& alpha, const formula& beta,
                                                    const vocabulary& vocab );

[[nodiscard]] belief_algebra evidence_combine( int universe_size, std::span< const world_pair > pairs );

struct postulate_result
{
    std::string name;
    bool applicable = true;
    bool passed = true;
    std::optional< world_pair > witness{};
    std::string detail{};
};

struct postulate_report
{
    std::vector< postulate_result > postulates;

    [[nodiscard]] bool all_passed() const;
    [[nodiscard]] const postulate_result& get( const std::string& name ) const;
};

// Checks g3 as a candidate revision of g1 by g2 against RA1-RA4, the
// upper bound implied by RA5, and RA6 (maximal candidate plus
// ra6_samples seeded random sub-candidates).
[[nodiscard]] postulate_report check_postulates( const belief_algebra& g1, const belief_algebra& g2,
                                                 const belief_algebra& g3, std::uint64_t seed = 0,
                                                 int ra6_samples = 8 );

} // namespace beliefrev
