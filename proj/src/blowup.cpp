#include "valtree/blowup.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "valtree/error.hpp"

namespace valtree {

namespace {

// f = N / D with D(0) != 0; returns N and D(0)
std::pair<BivarPoly, Scalar> local_numerator(const BivarPoly& f) {
    if (f.is_zero()) throw Error(Errc::InvalidArgument, "zero polynomial");
    auto [num, den] = clear_denominators(f);
    if (den.coeff(0).is_zero()) throw Error(Errc::PoleAtOrigin, "coefficient denominator vanishes at x = 0");
    return {num, den.coeff(0)};
}

int min_total_degree(const BivarPoly::Terms& terms) {
    int mu = -1;
    for (const auto& [e, c] : terms)
        if (mu < 0 || e.first + e.second < mu) mu = e.first + e.second;
    return mu;
}

Scalar binomial(long n, long k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Scalar(mpq_class(b), 0);
}

void drop_zeros(BivarPoly::Terms& t) {
    std::erase_if(t, [](const auto& kv) { return kv.second.is_zero(); });
}

// c with terms == a*(y - c*x^e)^mu, where a is the y^mu coefficient
std::optional<Scalar> perfect_power_root(const BivarPoly::Terms& terms, long mu, long e, std::uint32_t p) {
    auto lead = terms.find({0, static_cast<int>(mu)});
    if (lead == terms.end()) return std::nullopt;
    const Scalar a = lead->second;
    if (p != 0 && mu % p == 0) {
        // Frobenius root: exponents divide by p, coefficients of F_p are fixed
        BivarPoly::Terms root;
        for (const auto& [ex, c] : terms) {
            if (ex.first % p != 0 || ex.second % p != 0) return std::nullopt;
            root.emplace(std::make_pair(ex.first / static_cast<int>(p), ex.second / static_cast<int>(p)), c);
        }
        return perfect_power_root(root, mu / p, e, p);
    }
    Scalar b;
    if (auto it = terms.find({static_cast<int>(e), static_cast<int>(mu - 1)}); it != terms.end()) b = it->second;
    const Scalar c = -b / (Scalar(mu) * a);
    BivarPoly::Terms expected;
    for (long k = 0; k <= mu; ++k) {
        Scalar coef = a * binomial(mu, k) * (-c).pow(k);
        if (!coef.is_zero()) expected.emplace(std::make_pair(static_cast<int>(e * k), static_cast<int>(mu - k)), coef);
    }
    BivarPoly::Terms have = terms;
    drop_zeros(have);
    if (have.size() != expected.size()) return std::nullopt;
    for (const auto& [ex, coef] : expected) {
        auto it = have.find(ex);
        if (it == have.end() || it->second != coef) return std::nullopt;
    }
    return c;
}

struct Pulled {
    long a = 0;
    long b = 0;
    Scalar unit{1};
    BivarPoly g;
};

// f∘φ = x^a y^b · U · g with U a unit, U(0) = unit
Pulled pull_back(const BlowupSeq& seq, const BivarPoly& poly) {
    Pulled p{0, 0, seq.field.one(), poly};
    const long n = static_cast<long>(seq.steps.size());
    for (long k = 0; k < n; ++k) {
        const auto& step = seq.steps[k];
        // a blowup lowers total degree by at most the multiplicity, which never
        // grows, so terms this high never reach the final lowest form
        const long mu = multiplicity(p.g);
        const long cap = mu * (n - k + 1);
        BivarPoly::Terms kept;
        bool dropped = false;
        for (const auto& [e, c] : local_numerator(p.g).first.terms()) {
            if (e.first + e.second > cap)
                dropped = true;
            else
                kept.emplace(e, c);
        }
        if (dropped) p.g = BivarPoly::from_terms(kept);
        Transform t = transform(p.g, step);
        p.g = std::move(t.strict);
        if (step.chart == Chart::X) {
            long na = p.a + p.b + t.m;
            long nb = p.b;
            if (!step.c.is_zero()) {
                p.unit *= step.c.pow(p.b);
                nb = 0;
            }
            p.a = na;
            p.b = nb;
        } else {
            p.b = p.a + p.b + t.m;
        }
    }
    return p;
}

long raw_value(const BlowupSeq& seq, const BivarPoly& poly) {
    Pulled p = pull_back(seq, poly);
    return p.a + p.b + multiplicity(p.g);
}

BivarPoly lowest_form_poly(const BivarPoly& g, int mu) {
    BivarPoly::Terms low;
    for (const auto& [e, c] : g.terms())
        if (e.first + e.second == mu) low.emplace(e, c);
    return BivarPoly::from_terms(low);
}

std::vector<std::pair<Scalar, int>> rational_roots(const UPoly& poly) {
    std::vector<std::pair<Scalar, int>> out;
    if (poly.degree() < 1) return out;
    const Scalar lead = poly.leading();
    const std::uint32_t p = lead.characteristic();
    auto multiplicity_at = [](UPoly q, const Scalar& r) {
        int m = 0;
        UPoly lin(std::vector<Scalar>{-r, Scalar(1)});
        while (!q.is_zero() && q.eval(r).is_zero()) {
            q = divrem(q, lin).first;
            ++m;
        }
        return m;
    };
    if (p != 0) {
        if (p > (1u << 20)) throw Error(Errc::InvalidArgument, "root search over F_p is limited to p <= 2^20");
        for (std::uint32_t r = 0; r < p; ++r) {
            Scalar s(mpq_class(r), p);
            if (int m = multiplicity_at(poly, s); m > 0) out.emplace_back(s, m);
        }
        return out;
    }
    // integer-coefficient model, then the rational root theorem
    mpz_class l = 1;
    for (const auto& c : poly.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.value().get_den_mpz_t());
    std::vector<mpz_class> z;
    for (const auto& c : poly.coeffs()) z.push_back(mpz_class(c.value() * l));
    std::size_t low = 0;
    while (z[low] == 0) ++low;
    if (low > 0) out.emplace_back(Scalar(0), static_cast<int>(low));
    if (low + 1 == z.size()) return out;
    auto divisors = [](mpz_class n) {
        n = abs(n);
        if (n > mpz_class("1000000000000")) throw Error(Errc::InvalidArgument, "coefficients too large for root search");
        std::vector<mpz_class> d;
        for (mpz_class k = 1; k * k <= n; ++k) {
            if (n % k == 0) {
                d.push_back(k);
                if (k * k != n) d.push_back(n / k);
            }
        }
        return d;
    };
    std::vector<mpq_class> seen;
    for (const auto& u : divisors(z[low])) {
        for (const auto& v : divisors(z.back())) {
            for (int sign : {1, -1}) {
                mpq_class r(sign * u, v);
                r.canonicalize();
                if (std::find(seen.begin(), seen.end(), r) != seen.end()) continue;
                seen.push_back(r);
                if (int m = multiplicity_at(poly, Scalar(r, 0)); m > 0) out.emplace_back(Scalar(r, 0), m);
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first.value() < b.first.value(); });
    return out;
}

// coordinates in which the pure y^mu term is present
BivarPoly adapted(const BivarPoly& g) {
    auto t = g.terms();
    const int mu = min_total_degree(t);
    if (t.count({0, mu})) return g;
    if (t.count({mu, 0})) return swap_xy(g);
    BivarPoly s = swap_xy(g);
    for (int k = 1; k <= 16; ++k) {
        BivarPoly h = swap_xy(substitute_y(s, BivarPoly::y() + BivarPoly::monomial(Scalar(k), 1, 0)));
        if (h.terms().count({0, mu})) return h;
    }
    throw Error(Errc::DegenerateDirection, "no shear gives a pure y^mu term");
}

}  // namespace

Transform transform(const BivarPoly& f, const BlowupStep& step) {
    const auto terms = local_numerator(f).first.terms();
    const int m = min_total_degree(terms);
    Transform out;
    out.m = m;
    BivarPoly::Terms st;
    if (step.chart == Chart::X) {
        // x^i y^j -> x^(i+j-m) (y + c)^j
        std::vector<Scalar> cpow{Scalar(1)};
        for (const auto& [e, a] : terms) {
            const auto [i, j] = e;
            while (static_cast<int>(cpow.size()) <= j) cpow.push_back(cpow.back() * step.c);
            for (int k = 0; k <= j; ++k) {
                if (k < j && step.c.is_zero()) continue;
                st[{i + j - m, k}] += a * binomial(j, k) * cpow[j - k];
            }
        }
        drop_zeros(st);
    } else {
        for (const auto& [e, c] : terms) st.emplace(std::make_pair(e.first, e.first + e.second - m), c);
    }
    out.strict = BivarPoly::from_terms(st);
    return out;
}

int multiplicity(const BivarPoly& f) {
    return min_total_degree(local_numerator(f).first.terms());
}

Value e_exponent(const BivarPoly& f) {
    const auto terms = local_numerator(f).first.terms();
    const int mu = min_total_degree(terms);
    if (mu == 0) throw Error(Errc::InvalidArgument, "e-exponent of a unit");
    if (!terms.count({0, mu}))
        throw Error(Errc::DegenerateDirection, "pure y^" + std::to_string(mu) + " term absent");
    Value e = Value::infinity();
    for (const auto& [ex, c] : terms)
        if (ex.second < mu) e = min(e, Value(mpq_class(ex.first, mu - ex.second)));
    return e;
}

WeightedInitialForm weighted_initial_form(const BivarPoly& f, const Value& e) {
    if (e.is_infinite()) throw Error(Errc::InvalidArgument, "weighted initial form needs a finite weight");
    auto [n, d0] = local_numerator(f);
    const auto terms = n.terms();
    WeightedInitialForm out;
    out.e = e;
    out.mu = min_total_degree(terms);
    out.weight = Value::infinity();
    for (const auto& [ex, c] : terms) out.weight = min(out.weight, Value(ex.first) + mpq_class(ex.second) * e);
    const Scalar inv = d0.inverse();
    for (const auto& [ex, c] : terms)
        if (Value(ex.first) + mpq_class(ex.second) * e == out.weight) out.terms.emplace(ex, c * inv);
    return out;
}

int default_max_iter() {
    if (const char* env = std::getenv("VALTREE_MAX_ITER")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0 && v < 1000000) return static_cast<int>(v);
    }
    return 64;
}

Value first_char_exponent(const BivarPoly& f, int max_iter) {
    BivarPoly n = local_numerator(f).first;
    Value e = e_exponent(n);
    const int mu = multiplicity(n);
    // a smooth germ is itself a coordinate
    if (mu == 1) return Value::infinity();
    const std::uint32_t p = n.field().characteristic();
    for (int it = 0; it < max_iter; ++it) {
        if (e.is_infinite() || e.q().get_den() != 1) return e;
        const long ei = e.q().get_num().get_si();
        auto c = perfect_power_root(weighted_initial_form(n, e).terms, mu, ei, p);
        if (!c) return e;
        n = substitute_y(n, BivarPoly::y() + BivarPoly::monomial(*c, static_cast<int>(ei), 0));
        e = e_exponent(n);
    }
    throw Error(Errc::IterationLimit, "no stable exponent after " + std::to_string(max_iter) + " substitutions");
}

DivisorialValue divisorial_value_detail(const BlowupSeq& seq, const BivarPoly& f) {
    if (f.is_zero()) throw Error(Errc::InvalidArgument, "divisorial value of zero");
    auto [num, den] = clear_denominators(f);
    DivisorialValue out;
    out.raw = raw_value(seq, num);
    if (den.degree() > 0) out.raw -= raw_value(seq, BivarPoly(RatFunc(den)));
    out.raw_x = raw_value(seq, BivarPoly::x());
    out.raw_y = raw_value(seq, BivarPoly::y());
    out.value = Value(mpq_class(out.raw, std::min(out.raw_x, out.raw_y)));
    return out;
}

Value divisorial_value(const BlowupSeq& seq, const BivarPoly& f) {
    if (f.is_zero()) return Value::infinity();
    return divisorial_value_detail(seq, f).value;
}

TotalTransformForm divisorial_initial_form(const BlowupSeq& seq, const BivarPoly& f) {
    auto [num, d0] = local_numerator(f);
    Pulled p = pull_back(seq, num);
    const auto terms = p.g.terms();
    const int mu = min_total_degree(terms);
    const Scalar scale = p.unit / d0;
    TotalTransformForm out;
    out.raw = p.a + p.b + mu;
    for (const auto& [e, c] : terms)
        if (e.first + e.second == mu)
            out.terms.emplace(std::make_pair(e.first + static_cast<int>(p.a), e.second + static_cast<int>(p.b)), c * scale);
    return out;
}

std::optional<BlowupStep> tangent_center(const BivarPoly& f) {
    const BivarPoly n = local_numerator(f).first;
    const int mu = multiplicity(n);
    if (mu == 0) return std::nullopt;
    // L(1, t) from the tangent cone L(x, y)
    std::vector<Scalar> cone(mu + 1);
    for (const auto& [e, c] : lowest_form_poly(n, mu).terms()) cone[e.second] = c;
    UPoly l(cone);
    const int at_infinity = mu - l.degree();
    std::optional<BlowupStep> best;
    int best_mult = 0;
    for (const auto& [r, m] : rational_roots(l)) {
        if (m > best_mult) {
            best_mult = m;
            best = BlowupStep{Chart::X, r};
        }
    }
    if (at_infinity > best_mult) best = BlowupStep{Chart::Y, Scalar()};
    return best;
}

Descent descent(const BivarPoly& f, int max_steps) {
    Descent out;
    BivarPoly g = local_numerator(f).first;
    while (true) {
        const int mu = multiplicity(g);
        if (mu == 0) break;
        Value e = first_char_exponent(adapted(g));
        out.rows.push_back({mu, e});
        if (e.is_infinite() || static_cast<int>(out.centers.size()) >= max_steps) break;
        auto center = tangent_center(g);
        if (!center) throw Error(Errc::NonRationalCenter, "tangent cone has no rational direction");
        g = transform(g, *center).strict;
        out.centers.push_back(*center);
    }
    return out;
}

}  // namespace valtree
