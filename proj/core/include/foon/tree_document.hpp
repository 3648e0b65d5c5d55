#pragma once

#include <string>
#include <string_view>

#include "foon/retrieval.hpp"

namespace foon::io {

/// Machine-readable JSON rendering of a task tree: goal spec, algorithm,
/// depth (IDS), units in execution order, and the stats block. Field order
/// is stable and the output ends with a newline.
std::string export_tree_document(const retrieval::TaskTree& tree);

/// Inverse of export_tree_document. Throws ParseError on malformed input.
retrieval::TaskTree parse_tree_document(std::string_view json_text);

}  // namespace foon::io
