#pragma once

#include <string>

#include "foon/network.hpp"
#include "foon/retrieval.hpp"

namespace foon::io {

/// Graphviz rendering: object nodes as green-filled ellipses labeled
/// "label\n[state names]", one red box per functional unit's motion
/// (vertex id suffixed with the unit index), edges input -> motion and
/// motion -> output. Emission follows unit order, so the bytes are
/// deterministic. An empty network renders as "digraph foon {\n}\n".
std::string export_dot(const Network& network);
std::string export_dot(const retrieval::TaskTree& tree);

}  // namespace foon::io
