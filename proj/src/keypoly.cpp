#include "valtree/keypoly.hpp"

#include "valtree/error.hpp"
#include "valtree/valuation.hpp"

namespace valtree {

BivarPoly QExpansion::reconstruct() const {
    BivarPoly acc;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * base + *it;
    return acc;
}

QExpansion q_expand(const BivarPoly& g, const BivarPoly& Q) {
    if (!Q.is_monic() || Q.degree() < 1) throw Error(Errc::NonMonicDivisor, "expansion base must be monic of positive degree");
    QExpansion e{Q, {}};
    BivarPoly rest = g;
    while (!rest.is_zero()) {
        if (rest.degree() < Q.degree()) {
            e.coeffs.push_back(rest);
            break;
        }
        DivRem d = euclid_divrem(rest, Q);
        e.coeffs.push_back(std::move(d.r));
        rest = std::move(d.q);
    }
    return e;
}

EpsilonData epsilon_data(const MacLaneChain& nu, const BivarPoly& ambient) {
    const BivarPoly P = to_working(nu, ambient);
    if (P.degree() < 1) throw Error(Errc::ConstantPolynomial, "epsilon data needs a polynomial of positive y-degree");
    const Value vp = evaluate_internal(nu, P);
    EpsilonData out;
    bool have = false;
    for (int b = 1; b <= P.degree(); ++b) {
        BivarPoly d = hasse_derivative(P, b);
        if (d.is_zero()) continue;
        Value vd = evaluate_internal(nu, d);
        if (vd.is_infinite()) continue;
        Value ratio = (vp - vd) / mpq_class(b);
        if (!have || ratio > out.epsilon) {
            out.epsilon = ratio;
            out.I = {b};
            have = true;
        } else if (ratio == out.epsilon) {
            out.I.insert(b);
        }
    }
    out.b = *out.I.begin();
    return out;
}

}  // namespace valtree
