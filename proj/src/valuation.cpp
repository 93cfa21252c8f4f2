#include "valtree/valuation.hpp"

#include <algorithm>

#include "valtree/keypoly.hpp"
#include "valtree/poly_io.hpp"

namespace valtree {

MacLaneChain::MacLaneChain(BaseField field, std::vector<ChainEntry> entries, std::optional<BivarPoly> omega,
                           bool swap_xy)
    : field_(field), entries_(std::move(entries)), omega_(std::move(omega)), swap_(swap_xy) {}

BivarPoly to_working(const MacLaneChain& nu, const BivarPoly& f) {
    return nu.swap_xy() ? swap_xy(f) : f;
}

BivarPoly to_ambient(const MacLaneChain& nu, const BivarPoly& f) {
    return nu.swap_xy() ? swap_xy(f) : f;
}

namespace {

int effective_level(const MacLaneChain& nu, int level, int deg) {
    while (level > 1 && nu.degree(level) > deg) --level;
    return level;
}

struct Term {
    std::vector<int> key;
    Scalar coeff;
    Value value;
};

Scalar lowest_coeff(const UPoly& p) { return p.coeff(p.ord()); }

void collect(const MacLaneChain& nu, int level, const BivarPoly& f, std::vector<int>& key, const Value& offset,
             std::vector<Term>& out) {
    if (f.is_zero()) return;
    const int lv = effective_level(nu, level, f.degree());
    if (lv == 1) {
        for (const auto& [j, a] : f.coeffs()) {
            const int alpha = a.num().ord() - a.den().ord();
            key[0] = alpha;
            key[1] = j;
            Value v = offset + Value(alpha) + mpq_class(j) * nu.beta(1);
            out.push_back({key, lowest_coeff(a.num()) / lowest_coeff(a.den()), v});
        }
        key[0] = key[1] = 0;
        return;
    }
    QExpansion e = q_expand(f, nu.key(lv));
    for (std::size_t j = 0; j < e.coeffs.size(); ++j) {
        key[lv] = static_cast<int>(j);
        collect(nu, lv - 1, e.coeffs[j], key, offset + mpq_class(static_cast<long>(j)) * nu.beta(lv), out);
    }
    key[lv] = 0;
}

BivarPoly reduce_omega(const MacLaneChain& nu, const BivarPoly& f) {
    if (!nu.has_omega() || f.degree() < nu.omega()->degree()) return f;
    return euclid_divrem(f, *nu.omega()).r;
}

// checks that Q may extend the first n entries of nu with value beta
std::optional<std::pair<Errc, std::string>> check_extension(const MacLaneChain& nu, int n, const BivarPoly& Q,
                                                            const Value& beta, bool omega) {
    const Errc monic_rule = omega ? Errc::OmegaInconsistent : Errc::NonMonic;
    const Errc degree_rule = omega ? Errc::OmegaInconsistent : Errc::BadDegree;
    const Errc shape_rule = omega ? Errc::OmegaInconsistent : Errc::ShapeViolation;
    if (!Q.is_monic()) return std::pair{monic_rule, "key polynomial " + to_string(Q) + " is not monic in y"};
    const int dn = nu.degree(n);
    if (Q.degree() < 1 || Q.degree() % dn != 0)
        return std::pair{degree_rule, "degree " + std::to_string(Q.degree()) + " is not a multiple of " + std::to_string(dn)};
    const Value v = evaluate_level(nu, n, Q);
    if (beta <= v)
        return std::pair{Errc::ValueNotIncreased,
                         "value " + beta.to_string() + " does not exceed the truncated value " + v.to_string()};
    const long s = Q.degree() / dn;
    const Value target = mpq_class(s) * nu.beta(n);
    QExpansion e = q_expand(Q, nu.key(n));
    const Value v0 = evaluate_level(nu, n, e.coeffs[0]);
    if (v != target || v0 != target)
        return std::pair{shape_rule, "expansion shape: truncated value " + v.to_string() + ", constant term value " +
                                         v0.to_string() + ", expected " + target.to_string()};
    return std::nullopt;
}

}  // namespace

Value evaluate_level(const MacLaneChain& nu, int level, const BivarPoly& f) {
    if (f.is_zero()) return Value::infinity();
    const int lv = effective_level(nu, level, f.degree());
    if (lv == 1) {
        Value best = Value::infinity();
        for (const auto& [j, a] : f.coeffs()) best = min(best, ord_x(a) + mpq_class(j) * nu.beta(1));
        return best;
    }
    QExpansion e = q_expand(f, nu.key(lv));
    Value best = Value::infinity();
    for (std::size_t j = 0; j < e.coeffs.size(); ++j) {
        if (e.coeffs[j].is_zero()) continue;
        best = min(best, evaluate_level(nu, lv - 1, e.coeffs[j]) + mpq_class(static_cast<long>(j)) * nu.beta(lv));
    }
    return best;
}

Value evaluate_internal(const MacLaneChain& nu, const BivarPoly& f) {
    BivarPoly r = reduce_omega(nu, f);
    if (r.is_zero()) return Value::infinity();
    return evaluate_level(nu, nu.size(), r);
}

Value evaluate(const MacLaneChain& nu, const BivarPoly& f) {
    if (f.is_zero()) return Value::infinity();
    if (!nu.swap_xy()) return evaluate_internal(nu, f);
    auto [num, den] = clear_denominators(f);
    Value v = evaluate_internal(nu, swap_xy(num));
    if (den.degree() == 0) return v;
    return v - evaluate_internal(nu, swap_xy(BivarPoly(RatFunc(den))));
}

InitialForm initial_form_internal(const MacLaneChain& nu, const BivarPoly& f) {
    InitialForm form;
    BivarPoly r = reduce_omega(nu, f);
    if (r.is_zero()) {
        form.value = Value::infinity();
        return form;
    }
    std::vector<Term> terms;
    std::vector<int> key(nu.size() + 1, 0);
    collect(nu, nu.size(), r, key, Value(0), terms);
    form.value = Value::infinity();
    for (const auto& t : terms) form.value = min(form.value, t.value);
    for (auto& t : terms)
        if (t.value == form.value) form.terms[t.key] += t.coeff;
    return form;
}

MacLaneChain augment(const MacLaneChain& nu, const BivarPoly& Q, const Value& beta) {
    if (nu.has_omega()) throw Error(Errc::InvalidArgument, "cannot augment past an omega entry");
    if (auto bad = check_extension(nu, nu.size(), Q, beta, beta.is_infinite())) throw Error(bad->first, bad->second);
    if (beta.is_infinite()) return MacLaneChain(nu.field(), nu.entries(), Q, nu.swap_xy());
    auto entries = nu.entries();
    entries.push_back({Q, beta});
    return MacLaneChain(nu.field(), std::move(entries), std::nullopt, nu.swap_xy());
}

MacLaneChain truncate(const MacLaneChain& nu, int i) {
    if (i < 1 || i > nu.length())
        throw Error(Errc::IndexOutOfRange, "truncation index " + std::to_string(i) + " outside 1.." + std::to_string(nu.length()));
    if (i == nu.length()) return nu;
    std::vector<ChainEntry> entries(nu.entries().begin(), nu.entries().begin() + i);
    return MacLaneChain(nu.field(), std::move(entries), std::nullopt, nu.swap_xy());
}

MacLaneChain monomial_valuation(const Value& e, const BaseField& field) {
    if (e.is_infinite() || e < Value(1))
        throw Error(Errc::NotNormalized, "monomial weight must be a finite value >= 1, got " + e.to_string());
    return MacLaneChain(field, {{BivarPoly::monomial(field.one(), 0, 1), e}});
}

std::vector<Value> value_group_generators(const MacLaneChain& nu) {
    std::vector<Value> out{Value(1)};
    for (const auto& e : nu.entries()) out.push_back(e.beta);
    return out;
}

KrullValue krull_value(const MacLaneChain& nu, const BivarPoly& f) {
    if (!nu.has_omega()) throw Error(Errc::OmegaAbsent, "chain has no omega entry");
    if (f.is_zero()) throw Error(Errc::InvalidArgument, "Krull value of zero");
    auto [num, den] = clear_denominators(f);
    BivarPoly g = to_working(nu, num);
    KrullValue out;
    while (true) {
        DivRem d = euclid_divrem(g, *nu.omega());
        if (!d.r.is_zero()) break;
        g = std::move(d.q);
        ++out.s;
    }
    out.v = evaluate_internal(nu, g);
    if (den.degree() > 0) out.v = out.v - evaluate_internal(nu, to_working(nu, BivarPoly(RatFunc(den))));
    return out;
}

std::vector<Violation> validate(const MacLaneChain& nu) {
    std::vector<Violation> out;
    if (nu.size() == 0) {
        out.push_back({1, Errc::NotNormalized, "chain has no entries"});
        return out;
    }
    bool usable = true;
    if (!(nu.key(1) == BivarPoly::y())) {
        out.push_back({1, Errc::NotNormalized, "first key polynomial must be y, got " + to_string(nu.key(1))});
        usable = false;
    }
    if (nu.beta(1).is_infinite() || nu.beta(1) < Value(1)) {
        out.push_back({1, Errc::NotNormalized, "first value must be finite and >= 1, got " + nu.beta(1).to_string()});
        usable = false;
    }
    for (int i = 2; i <= nu.size(); ++i) {
        if (nu.beta(i).is_infinite()) {
            out.push_back({i, Errc::OmegaInconsistent, "infinite value outside the omega entry"});
            usable = false;
            continue;
        }
        if (!usable) continue;
        if (auto bad = check_extension(nu, i - 1, nu.key(i), nu.beta(i), false)) {
            out.push_back({i, bad->first, bad->second});
            if (bad->first == Errc::NonMonic || bad->first == Errc::BadDegree) usable = false;
        }
    }
    if (nu.has_omega() && usable) {
        if (auto bad = check_extension(nu, nu.size(), *nu.omega(), Value::infinity(), true))
            out.push_back({nu.length(), bad->first, bad->second});
    }
    return out;
}

void require_valid(const MacLaneChain& nu) {
    auto v = validate(nu);
    if (!v.empty()) throw Error(v.front().rule, "entry " + std::to_string(v.front().index) + ": " + v.front().detail);
}

}  // namespace valtree
