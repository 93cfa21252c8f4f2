#pragma once

#include <string>
#include <string_view>

#include "valtree/blowup.hpp"
#include "valtree/valuation.hpp"

namespace valtree {

// {"field":"Q","swap_xy":false,"chain":[{"Q":"y","beta":"3/2"}],"omega":null}
std::string chain_to_json(const MacLaneChain& nu);
MacLaneChain chain_from_json(std::string_view text);

// {"field":"Q","steps":[{"chart":"X","c":"0"},{"chart":"Y"}],"terminal":"divisor"}
std::string seq_to_json(const BlowupSeq& seq);
BlowupSeq seq_from_json(std::string_view text);

}  // namespace valtree

namespace valtree {

// compact human-readable form, e.g. [(y, 3/2), (y^2 - x^3, 4)]
std::string chain_to_text(const MacLaneChain& nu);

}  // namespace valtree
