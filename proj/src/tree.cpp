#include "valtree/tree.hpp"

namespace valtree {

namespace {

void require_same_field(const MacLaneChain& a, const MacLaneChain& b) {
    if (!(a.field() == b.field()))
        throw Error(Errc::FieldMismatch, a.field().to_string() + " vs " + b.field().to_string());
}

}  // namespace

const char* relation_name(Relation r) {
    switch (r) {
    case Relation::Less: return "less";
    case Relation::Equal: return "equal";
    case Relation::Greater: return "greater";
    case Relation::Incomparable: return "incomparable";
    }
    return "?";
}

MacLaneChain root_valuation(const BaseField& field) { return monomial_valuation(Value(1), field); }

std::optional<BivarPoly> dominance_witness(const MacLaneChain& mu, const MacLaneChain& nu) {
    for (int i = 1; i <= mu.size(); ++i) {
        BivarPoly p = to_ambient(mu, mu.key(i));
        if (evaluate(nu, p) < mu.beta(i)) return p;
    }
    if (mu.has_omega()) {
        BivarPoly p = to_ambient(mu, *mu.omega());
        if (evaluate(nu, p).is_finite()) return p;
    }
    return std::nullopt;
}

CompareResult compare(const MacLaneChain& mu, const MacLaneChain& nu) {
    require_same_field(mu, nu);
    CompareResult r;
    r.mu_exceeds = dominance_witness(mu, nu);
    r.nu_exceeds = dominance_witness(nu, mu);
    if (!r.mu_exceeds && !r.nu_exceeds) r.relation = Relation::Equal;
    else if (!r.mu_exceeds) r.relation = Relation::Less;
    else if (!r.nu_exceeds) r.relation = Relation::Greater;
    else r.relation = Relation::Incomparable;
    return r;
}

MacLaneChain infimum(const MacLaneChain& mu, const MacLaneChain& nu) {
    require_same_field(mu, nu);
    if (!dominance_witness(mu, nu)) return mu;
    if (!dominance_witness(nu, mu)) return nu;
    // the segment point nu_t lies below mu exactly while t*d_u <= mu(Q_u) at the
    // first key Q_u of nu on which mu falls short
    Value lower(1);
    for (int u = 1; u <= nu.size(); ++u) {
        const Value m = evaluate(mu, to_ambient(nu, nu.key(u)));
        if (m < nu.beta(u)) return segment_point(nu, max(lower, m / mpq_class(nu.degree(u))));
        lower = nu.beta(u) / mpq_class(nu.degree(u));
    }
    const Value m = evaluate(mu, to_ambient(nu, *nu.omega()));
    return segment_point(nu, max(lower, m / mpq_class(nu.omega()->degree())));
}

Value segment_end(const MacLaneChain& nu) {
    if (nu.has_omega()) return Value::infinity();
    return nu.beta(nu.size()) / mpq_class(nu.degree(nu.size()));
}

MacLaneChain segment_point(const MacLaneChain& nu, const Value& t) {
    const Value end = segment_end(nu);
    if (t < Value(1) || t > end)
        throw Error(Errc::OutOfSegment, "t = " + t.to_string() + " outside [1, " + end.to_string() + "]");
    if (t == Value(1)) return root_valuation(nu.field());
    if (t == end) return nu;
    for (int u = 1; u <= nu.size(); ++u) {
        const Value right = nu.beta(u) / mpq_class(nu.degree(u));
        if (t > right) continue;
        if (t == right) return truncate(nu, u);
        if (u == 1) return MacLaneChain(nu.field(), {{nu.key(1), t}}, std::nullopt, nu.swap_xy());
        return augment(truncate(nu, u - 1), nu.key(u), mpq_class(nu.degree(u)) * t);
    }
    return augment(truncate(nu, nu.size()), *nu.omega(), mpq_class(nu.omega()->degree()) * t);
}

MacLaneChain majorant(const std::vector<MacLaneChain>& chains) {
    if (chains.empty()) throw Error(Errc::InvalidArgument, "majorant of an empty family");
    std::size_t best = 0;
    for (std::size_t i = 0; i < chains.size(); ++i) {
        for (std::size_t j = i + 1; j < chains.size(); ++j)
            if (compare(chains[i], chains[j]).relation == Relation::Incomparable)
                throw Error(Errc::NotTotallyOrdered,
                            "members " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " are incomparable");
        if (i > 0 && !dominance_witness(chains[best], chains[i])) best = i;
    }
    return chains[best];
}

MacLaneChain majorant_limit(const MacLaneChain& prefix, const BivarPoly& Q, const Value& beta_bar) {
    return augment(prefix, Q, beta_bar);
}

ChainInvariants chain_invariants(const MacLaneChain& nu) {
    ChainInvariants out;
    for (int i = 1; i <= nu.size(); ++i) {
        out.d.push_back(nu.degree(i));
        out.beta.push_back(nu.beta(i));
        out.D = std::max(out.D, nu.degree(i));
    }
    if (nu.has_omega()) out.D = nu.omega()->degree();
    else out.N = nu.size();
    return out;
}

}  // namespace valtree
