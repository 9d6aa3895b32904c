#pragma once

#include "beliefrev/algebra.hpp"
#include "beliefrev/logic.hpp"
#include "beliefrev/preorder.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace beliefrev::cli
{

using ordered_json = nlohmann::ordered_json;

enum class document_kind
{
    relation,
    preorder
};

// A parsed input document. World indices are 0-based.
struct belief_document
{
    document_kind kind = document_kind::relation;
    int worlds = 0;
    std::optional< vocabulary > vocab;
    std::optional< relation > pairs;        // kind == relation
    std::optional< total_preorder > order;  // kind == preorder
};

// Throws input_error (or a subclass) on any schema or validation problem.
[[nodiscard]] belief_document parse_document( const nlohmann::json& j, int max_worlds );
[[nodiscard]] belief_document parse_document_text( const std::string& text, int max_worlds );

// The belief algebra a document stands for: Gen of its pairs, or the
// complete algebra of its preorder.
[[nodiscard]] belief_algebra to_algebra( const belief_document& doc, int max_worlds );

// Canonical output: pairs sorted, trivial pairs included.
[[nodiscard]] ordered_json relation_json( const relation& rel, const std::optional< vocabulary >& vocab );
[[nodiscard]] ordered_json preorder_json( const total_preorder& p, const std::optional< vocabulary >& vocab );
[[nodiscard]] ordered_json backbone_json( const backbone& b, const std::optional< vocabulary >& vocab );
[[nodiscard]] ordered_json pair_json( const world_pair& p );

[[nodiscard]] std::string dump( const ordered_json& j );

} // namespace beliefrev::cli
