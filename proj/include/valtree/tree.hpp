#pragma once

#include <optional>
#include <vector>

#include "valtree/valuation.hpp"

namespace valtree {

enum class Relation { Less, Equal, Greater, Incomparable };
const char* relation_name(Relation r);

struct CompareResult {
    Relation relation = Relation::Equal;
    // f with mu(f) > nu(f)
    std::optional<BivarPoly> mu_exceeds;
    // f with nu(f) > mu(f)
    std::optional<BivarPoly> nu_exceeds;
};

// mu <= nu holds iff nu reaches mu's value on each of mu's key polynomials.
// Returns nullopt when mu <= nu, else a key polynomial f with mu(f) > nu(f).
std::optional<BivarPoly> dominance_witness(const MacLaneChain& mu, const MacLaneChain& nu);

CompareResult compare(const MacLaneChain& mu, const MacLaneChain& nu);
MacLaneChain infimum(const MacLaneChain& mu, const MacLaneChain& nu);

// right end beta_l/d_l of the segment from the root to nu (inf with omega)
Value segment_end(const MacLaneChain& nu);
MacLaneChain segment_point(const MacLaneChain& nu, const Value& t);

MacLaneChain majorant(const std::vector<MacLaneChain>& chains);
// [prefix; Q, beta_bar]; beta_bar = inf yields the curve valuation of Q
MacLaneChain majorant_limit(const MacLaneChain& prefix, const BivarPoly& Q, const Value& beta_bar);

struct ChainInvariants {
    std::optional<int> N;  // nullopt stands for the omega index
    int D = 0;
    std::vector<int> d;
    std::vector<Value> beta;
};
ChainInvariants chain_invariants(const MacLaneChain& nu);

MacLaneChain root_valuation(const BaseField& field = BaseField());

}  // namespace valtree
