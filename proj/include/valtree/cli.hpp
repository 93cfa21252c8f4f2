#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "valtree/valuation.hpp"

namespace valtree::cli {

// exit codes: 0 success, 2 parse or format error, 3 domain error
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Nodes are the chains closed under pairwise infimum, sorted by their JSON
// serialization; edges are the covering pairs of the partial order.
std::string tree_dot(const std::vector<MacLaneChain>& chains);

}  // namespace valtree::cli
