#pragma once

#include <functional>
#include <string>

#include "valtree/blowup.hpp"
#include "valtree/valuation.hpp"

namespace valtree {

// A valuation known only through evaluation. initial_form must accept
// polynomials and return the class of f in the graded piece of value
// value(f), as a sparse vector over k in some fixed basis.
struct ValuationOracle {
    std::function<Value(const BivarPoly&)> value;
    std::function<InitialForm(const BivarPoly&)> initial_form;
    std::string description;
};

// evaluates in the working coordinates of nu
ValuationOracle chain_oracle(const MacLaneChain& nu);
ValuationOracle divisorial_oracle(const BlowupSeq& seq);
// oracle composed with the exchange of x and y
ValuationOracle swapped(const ValuationOracle& oracle);

struct LiftResult {
    BivarPoly key;
    // the oracle already exceeds the chain on its last key polynomial
    bool raise_beta = false;
};

// Minimal-degree monic polynomial on which oracle exceeds chain; the oracle
// must dominate the chain and both must use the chain's working coordinates.
LiftResult lift_key_polynomial(const MacLaneChain& chain, const ValuationOracle& oracle, int max_degree = 64);

MacLaneChain blowups_to_chain(const BlowupSeq& seq);

struct ChainToBlowups {
    BlowupSeq seq;
    bool exact = false;
};
ChainToBlowups chain_to_blowups(const MacLaneChain& chain, int max_steps);

// Solves sum_j lambda_j * columns[j] = rhs over k; free unknowns are set to 0.
std::optional<std::vector<Scalar>> solve_linear(const std::vector<std::map<std::vector<int>, Scalar>>& columns,
                                                const std::map<std::vector<int>, Scalar>& rhs);

}  // namespace valtree
