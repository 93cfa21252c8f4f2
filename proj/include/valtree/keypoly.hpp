#pragma once

#include <set>
#include <vector>

#include "valtree/bivar.hpp"
#include "valtree/value.hpp"

namespace valtree {

class MacLaneChain;

struct QExpansion {
    BivarPoly base;
    // g_0, g_1, ..., g_s with deg_y g_j < deg_y base
    std::vector<BivarPoly> coeffs;

    BivarPoly reconstruct() const;
};

QExpansion q_expand(const BivarPoly& g, const BivarPoly& Q);

struct EpsilonData {
    Value epsilon;
    std::set<int> I;
    int b = 0;
};

// Derivatives are taken in the chain's working y, which is the ambient x
// when the chain carries the swap flag.
EpsilonData epsilon_data(const MacLaneChain& nu, const BivarPoly& P);

}  // namespace valtree
