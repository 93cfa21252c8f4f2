#include "valtree/correspondence.hpp"

#include <algorithm>

#include "valtree/error.hpp"
#include "valtree/poly_io.hpp"

namespace valtree {

namespace {

using Vec = std::map<std::vector<int>, Scalar>;

std::optional<LiftResult> try_lift(const MacLaneChain& chain, const ValuationOracle& oracle, int max_degree) {
    const int n = chain.size();
    const BivarPoly& qn = chain.key(n);
    const Value& bn = chain.beta(n);
    const int dn = qn.degree();
    const Value top = oracle.value(qn);
    if (top < bn) throw Error(Errc::InvalidArgument, "chain exceeds the oracle on " + to_string(qn));
    if (top > bn) return LiftResult{qn, true};

    // powers of the key polynomials below n, capped by the expansion ranges
    std::vector<std::vector<BivarPoly>> pw(n + 1);
    std::vector<int> range(n + 1, 0);
    for (int i = 1; i < n; ++i) {
        range[i] = chain.degree(i + 1) / chain.degree(i);
        pw[i].push_back(BivarPoly(1));
        for (int c = 1; c < range[i]; ++c) pw[i].push_back(pw[i].back() * chain.key(i));
    }
    const Scalar one = chain.field().one();

    for (int s = 1; s * dn <= max_degree; ++s) {
        const Value v = mpq_class(s) * bn;
        const BivarPoly target = qn.pow(s);
        const InitialForm tf = oracle.initial_form(target);
        if (tf.value != v) throw Error(Errc::InvalidArgument, "oracle disagrees with the chain on a power of its key");

        std::vector<BivarPoly> monomials;
        std::vector<Vec> columns;
        std::vector<int> c(n + 1, 0);  // c[n] is the exponent of Q_n
        BivarPoly qn_pow(1);
        for (int j = 0; j < s; ++j, qn_pow = qn_pow * qn) {
            c.assign(n + 1, 0);
            while (true) {
                Value used = mpq_class(j) * bn;
                for (int i = 1; i < n; ++i) used += mpq_class(c[i]) * chain.beta(i);
                Value rest = v - used;
                if (rest >= Value(0) && rest.q().get_den() == 1) {
                    BivarPoly t = BivarPoly::monomial(one, static_cast<int>(rest.q().get_num().get_si()), 0) * qn_pow;
                    for (int i = 1; i < n; ++i) t = t * pw[i][c[i]];
                    InitialForm f = oracle.initial_form(t);
                    if (f.value < v) throw Error(Errc::InvalidArgument, "chain exceeds the oracle on " + to_string(t));
                    if (f.value == v) {
                        monomials.push_back(std::move(t));
                        columns.push_back(std::move(f.terms));
                    }
                }
                int i = 1;
                while (i < n && ++c[i] == range[i]) c[i++] = 0;
                if (i >= n) break;
            }
        }
        Vec rhs;
        for (const auto& [k, val] : tf.terms) rhs[k] = -val;
        if (auto lambda = solve_linear(columns, rhs)) {
            BivarPoly q = target;
            for (std::size_t k = 0; k < monomials.size(); ++k)
                if (!(*lambda)[k].is_zero()) q += RatFunc((*lambda)[k]) * monomials[k];
            return LiftResult{q, false};
        }
    }
    return std::nullopt;
}

Value sum_value(const std::vector<long>& e, const std::vector<Value>& vals) {
    Value acc(0);
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (vals[i].is_infinite()) {
            if (e[i] < 0) throw Error(Errc::InvalidArgument, "coordinate with a pole along the valuation's curve");
            return Value::infinity();
        }
        acc += mpq_class(e[i]) * vals[i];
    }
    return acc;
}

BivarPoly product(const std::vector<long>& e, const std::vector<BivarPoly>& polys, int sign) {
    BivarPoly acc(1);
    for (std::size_t i = 0; i < e.size(); ++i) {
        long k = sign * e[i];
        if (k > 0) acc = acc * polys[i].pow(static_cast<unsigned>(k));
    }
    return acc;
}

std::optional<Scalar> proportional(const Vec& a, const Vec& b) {
    if (a.size() != b.size() || a.empty()) return std::nullopt;
    std::optional<Scalar> ratio;
    for (const auto& [k, va] : a) {
        auto it = b.find(k);
        if (it == b.end()) return std::nullopt;
        Scalar r = va / it->second;
        if (ratio && *ratio != r) return std::nullopt;
        ratio = r;
    }
    return ratio;
}

}  // namespace

std::optional<std::vector<Scalar>> solve_linear(const std::vector<Vec>& columns, const Vec& rhs) {
    std::map<std::vector<int>, int> row_of;
    for (const auto& col : columns)
        for (const auto& [k, v] : col) row_of.emplace(k, 0);
    for (const auto& [k, v] : rhs) row_of.emplace(k, 0);
    int rows = 0;
    for (auto& [k, r] : row_of) r = rows++;
    const int cols = static_cast<int>(columns.size());
    std::vector<std::vector<Scalar>> m(rows, std::vector<Scalar>(cols + 1));
    for (int j = 0; j < cols; ++j)
        for (const auto& [k, v] : columns[j]) m[row_of[k]][j] = v;
    for (const auto& [k, v] : rhs) m[row_of[k]][cols] = v;

    std::vector<int> pivot_col;
    int r = 0;
    for (int j = 0; j < cols && r < rows; ++j) {
        int p = r;
        while (p < rows && m[p][j].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        const Scalar inv = m[r][j].inverse();
        for (int k = j; k <= cols; ++k) m[r][k] *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || m[i][j].is_zero()) continue;
            const Scalar f = m[i][j];
            for (int k = j; k <= cols; ++k) m[i][k] -= f * m[r][k];
        }
        pivot_col.push_back(j);
        ++r;
    }
    for (int i = r; i < rows; ++i)
        if (!m[i][cols].is_zero()) return std::nullopt;
    std::vector<Scalar> x(cols);
    for (int i = 0; i < r; ++i) x[pivot_col[i]] = m[i][cols];
    return x;
}

ValuationOracle chain_oracle(const MacLaneChain& nu) {
    return {[nu](const BivarPoly& f) { return evaluate_internal(nu, f); },
            [nu](const BivarPoly& f) { return initial_form_internal(nu, f); }, "chain"};
}

ValuationOracle divisorial_oracle(const BlowupSeq& seq) {
    const DivisorialValue unit = divisorial_value_detail(seq, BivarPoly::x());
    const long m = std::min(unit.raw_x, unit.raw_y);
    auto value = [seq](const BivarPoly& f) { return divisorial_value(seq, f); };
    auto form = [seq, m](const BivarPoly& f) {
        InitialForm out;
        if (f.is_zero()) {
            out.value = Value::infinity();
            return out;
        }
        TotalTransformForm t = divisorial_initial_form(seq, f);
        out.value = Value(mpq_class(t.raw, m));
        for (const auto& [e, c] : t.terms) out.terms.emplace(std::vector<int>{e.first, e.second}, c);
        return out;
    };
    return {value, form, "divisorial"};
}

ValuationOracle swapped(const ValuationOracle& oracle) {
    auto value = oracle.value;
    auto form = oracle.initial_form;
    return {[value](const BivarPoly& f) {
                if (f.is_polynomial()) return value(swap_xy(f));
                auto [num, den] = clear_denominators(f);
                return value(swap_xy(num)) - value(swap_xy(BivarPoly(RatFunc(den))));
            },
            [form](const BivarPoly& f) { return form(swap_xy(f)); }, oracle.description + "(swapped)"};
}

LiftResult lift_key_polynomial(const MacLaneChain& chain, const ValuationOracle& oracle, int max_degree) {
    if (chain.has_omega()) throw Error(Errc::InvalidArgument, "cannot lift past an omega entry");
    if (auto r = try_lift(chain, oracle, max_degree)) return *r;
    throw Error(Errc::SearchExhausted, "no value jump up to degree " + std::to_string(max_degree));
}

MacLaneChain blowups_to_chain(const BlowupSeq& seq) {
    const DivisorialValue unit = divisorial_value_detail(seq, BivarPoly::x());
    const bool swap = unit.raw_x > unit.raw_y;
    const long bound = std::min(unit.raw_x, unit.raw_y);
    ValuationOracle oracle = divisorial_oracle(seq);
    if (swap) oracle = swapped(oracle);

    const BivarPoly y = BivarPoly::monomial(seq.field.one(), 0, 1);
    MacLaneChain chain(seq.field, {{y, oracle.value(y)}}, std::nullopt, swap);
    // every pass strictly raises a value of bounded denominator at bounded degree
    for (long guard = 0; guard < 64 * bound * bound + 64; ++guard) {
        auto r = try_lift(chain, oracle, static_cast<int>(bound));
        if (!r) return chain;
        if (r->raise_beta) {
            auto entries = chain.entries();
            entries.back().beta = oracle.value(r->key);
            chain = MacLaneChain(seq.field, std::move(entries), std::nullopt, swap);
        } else if (chain.size() >= 2 && r->key.degree() == chain.degree(chain.size())) {
            // same degree as the last key: it replaces that key with a larger value
            chain = augment(truncate(chain, chain.size() - 1), r->key, oracle.value(r->key));
        } else {
            chain = augment(chain, r->key, oracle.value(r->key));
        }
    }
    throw Error(Errc::SearchExhausted, "construction loop did not stabilize");
}

ChainToBlowups chain_to_blowups(const MacLaneChain& chain, int max_steps) {
    require_valid(chain);
    const BaseField k = chain.field();
    auto in = [&](const BivarPoly& f) { return initial_form_internal(chain, to_working(chain, f)); };
    int degree_bound = chain.degree(chain.size());
    if (chain.has_omega()) degree_bound = std::max(degree_bound, chain.omega()->degree());

    std::vector<BivarPoly> polys{BivarPoly::monomial(k.one(), 1, 0), BivarPoly::monomial(k.one(), 0, 1)};
    std::vector<Value> vals{evaluate(chain, polys[0]), evaluate(chain, polys[1])};
    std::vector<long> xk{1, 0}, yk{0, 1};
    ChainToBlowups out;
    out.seq.field = k;
    while (true) {
        const Value a = sum_value(xk, vals);
        const Value b = sum_value(yk, vals);
        BlowupStep step;
        std::vector<long> r(xk.size());
        BivarPoly num, den;
        std::optional<Scalar> c;
        if (a == b) {
            for (std::size_t i = 0; i < r.size(); ++i) r[i] = yk[i] - xk[i];
            num = product(r, polys, 1);
            den = product(r, polys, -1);
            const InitialForm fn = in(num), fd = in(den);
            c = proportional(fn.terms, fd.terms);
            if (!c) {
                // the residue of y_k/x_k is transcendental unless it satisfies
                // a relation of degree at most D
                for (int m = 2; m <= degree_bound; ++m) {
                    std::vector<Vec> cols;
                    for (int i = 0; i <= m; ++i)
                        cols.push_back(in(num.pow(i) * den.pow(m - i)).terms);
                    std::vector<Vec> head(cols.begin(), cols.end() - 1);
                    if (solve_linear(head, cols.back()))
                        throw Error(Errc::NonRationalCenter, "center is not rational over " + k.to_string());
                }
                out.exact = true;
                return out;
            }
        }
        if (static_cast<int>(out.seq.steps.size()) >= max_steps) return out;
        if (a < b) {
            step = {Chart::X, k.zero()};
            for (std::size_t i = 0; i < yk.size(); ++i) yk[i] -= xk[i];
        } else if (b < a) {
            step = {Chart::Y, Scalar()};
            for (std::size_t i = 0; i < xk.size(); ++i) xk[i] -= yk[i];
        } else {
            step = {Chart::X, *c};
            BivarPoly p = num - RatFunc(*c) * den;
            polys.push_back(p);
            vals.push_back(evaluate(chain, p));
            xk.push_back(0);
            yk.assign(polys.size(), 0);
            for (std::size_t i = 0; i < r.size(); ++i) yk[i] = r[i] < 0 ? r[i] : 0;
            yk.back() = 1;
        }
        out.seq.steps.push_back(step);
    }
}

}  // namespace valtree
