#pragma once

#include <fstream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "valtree/blowup.hpp"
#include "valtree/correspondence.hpp"
#include "valtree/poly_io.hpp"
#include "valtree/serialize.hpp"
#include "valtree/tree.hpp"
#include "valtree/valuation.hpp"

namespace testing {

using namespace valtree;

inline std::string data_path(const std::string& rel) { return std::string(VALTREE_DATA_DIR) + "/" + rel; }

inline std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline const std::vector<std::string>& chain_names() {
    static const std::vector<std::string> names{
        "01_root", "02_monomial", "03_cusp", "04_line", "05_equal_degree",
        "06_quintic", "07_two_pairs", "08_curve", "09_prime_field", "10_swapped"};
    return names;
}

inline MacLaneChain bundled_chain(const std::string& name) {
    return chain_from_json(slurp(data_path("chains/" + name + ".json")));
}

inline std::vector<MacLaneChain> bundled_chains() {
    std::vector<MacLaneChain> out;
    for (const auto& n : chain_names()) out.push_back(bundled_chain(n));
    return out;
}

inline std::vector<BlowupSeq> bundled_seqs() {
    std::vector<BlowupSeq> out;
    for (int i = 1; i <= 12; ++i) {
        std::string n = (i < 10 ? "0" : "") + std::to_string(i);
        out.push_back(seq_from_json(slurp(data_path("seqs/" + n + ".json"))));
    }
    return out;
}

inline MacLaneChain chain(const std::string& json) { return chain_from_json(json); }

inline BivarPoly P(const std::string& s, const BaseField& f = BaseField()) { return parse_poly(s, f); }

class Rng {
public:
    explicit Rng(std::uint64_t seed) : g_(seed) {}
    long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(g_); }
    bool chance(double p) { return std::bernoulli_distribution(p)(g_); }

private:
    std::mt19937_64 g_;
};

// random polynomial with deg_y <= dy, deg_x <= dx, integer coefficients in [-h, h]
inline BivarPoly random_poly(Rng& rng, const BaseField& field, int dy, int dx, long h, double density = 0.3) {
    BivarPoly::Terms t;
    for (int j = 0; j <= dy; ++j)
        for (int i = 0; i <= dx; ++i)
            if (rng.chance(density)) {
                long c = rng.uniform(-h, h);
                if (c != 0) t[{i, j}] = field.from_int(c);
            }
    BivarPoly f = BivarPoly::from_terms(t);
    if (f.is_zero()) f = BivarPoly::monomial(field.from_int(rng.uniform(1, h)), rng.uniform(0, dx), rng.uniform(0, dy));
    return f;
}

inline BlowupSeq random_seq(Rng& rng, const BaseField& field, int max_len) {
    BlowupSeq s{field, {}};
    const long n = rng.uniform(0, max_len);
    for (long i = 0; i < n; ++i) {
        if (rng.chance(0.3))
            s.steps.push_back({Chart::Y, field.zero()});
        else
            s.steps.push_back({Chart::X, field.from_int(rng.uniform(-2, 2))});
    }
    return s;
}

// a rational point of the segment from the root to nu, strictly above the root
inline Value random_segment_parameter(Rng& rng, const MacLaneChain& nu) {
    const Value end = segment_end(nu);
    const long m = 12;
    return Value(1) + Value((end.q() - 1) * mpq_class(rng.uniform(1, m), m));
}

// valid chain built from a random divisorial valuation, optionally cut back
// to a random point of its segment
inline MacLaneChain random_chain(Rng& rng, const BaseField& field = BaseField(), int max_len = 4) {
    MacLaneChain nu = blowups_to_chain(random_seq(rng, field, max_len));
    if (rng.chance(0.5)) nu = segment_point(nu, random_segment_parameter(rng, nu));
    return nu;
}

// two chains built from blowup sequences with a shared random prefix, so
// that their infimum is usually not the root
inline std::pair<MacLaneChain, MacLaneChain> random_related_pair(Rng& rng, const BaseField& field = BaseField()) {
    BlowupSeq base = random_seq(rng, field, 3);
    BlowupSeq a = base, b = base;
    for (const auto& s : random_seq(rng, field, 3).steps) a.steps.push_back(s);
    for (const auto& s : random_seq(rng, field, 3).steps) b.steps.push_back(s);
    MacLaneChain mu = blowups_to_chain(a), nu = blowups_to_chain(b);
    if (rng.chance(0.3)) mu = segment_point(mu, random_segment_parameter(rng, mu));
    if (rng.chance(0.3)) nu = segment_point(nu, random_segment_parameter(rng, nu));
    return {mu, nu};
}

// ---- dense reference arithmetic over Q, independent of the library ----

using Dense = std::map<std::pair<int, int>, mpq_class>;

inline Dense dense(const BivarPoly& f) {
    Dense d;
    for (const auto& [e, c] : f.terms()) d[e] = c.value();
    return d;
}

inline void dense_clean(Dense& d) {
    for (auto it = d.begin(); it != d.end();) it = it->second == 0 ? d.erase(it) : std::next(it);
}

inline Dense dense_add(const Dense& a, const Dense& b, int sign = 1) {
    Dense r = a;
    for (const auto& [e, c] : b) r[e] += sign * c;
    dense_clean(r);
    return r;
}

inline Dense dense_mul(const Dense& a, const Dense& b) {
    Dense r;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) r[{ea.first + eb.first, ea.second + eb.second}] += ca * cb;
    dense_clean(r);
    return r;
}

inline int dense_ydeg(const Dense& a) {
    int d = -1;
    for (const auto& [e, c] : a) d = std::max(d, e.second);
    return d;
}

// quotient and remainder by q, monic in y with polynomial coefficients
inline std::pair<Dense, Dense> dense_divmod(Dense f, const Dense& q) {
    const int dq = dense_ydeg(q);
    Dense quo;
    while (dense_ydeg(f) >= dq) {
        const int top = dense_ydeg(f);
        Dense lead;
        for (const auto& [e, c] : f)
            if (e.second == top) lead[{e.first, top - dq}] = c;
        quo = dense_add(quo, lead);
        f = dense_add(f, dense_mul(lead, q), -1);
    }
    return {quo, f};
}

// value of a dense polynomial under a chain over Q without swap, by
// literal recursive expansion; nullopt stands for infinity
inline std::optional<mpq_class> naive_level(const std::vector<std::pair<Dense, mpq_class>>& keys, int level,
                                            const Dense& f) {
    if (f.empty()) return std::nullopt;
    std::optional<mpq_class> best;
    auto take = [&best](const mpq_class& v) {
        if (!best || v < *best) best = v;
    };
    if (level == 1) {
        for (const auto& [e, c] : f) take(mpq_class(e.first) + e.second * keys[0].second);
        return best;
    }
    Dense rest = f;
    int j = 0;
    while (!rest.empty()) {
        auto [q, r] = dense_divmod(rest, keys[level - 1].first);
        if (auto v = naive_level(keys, level - 1, r)) take(*v + j * keys[level - 1].second);
        rest = q;
        ++j;
    }
    return best;
}

inline Dense dense_swap(const Dense& f) {
    Dense r;
    for (const auto& [e, c] : f) r[{e.second, e.first}] = c;
    return r;
}

// g is given in the chain's working coordinates
inline std::optional<mpq_class> naive_evaluate_working(const MacLaneChain& nu, Dense g) {
    std::vector<std::pair<Dense, mpq_class>> keys;
    for (const auto& e : nu.entries()) keys.emplace_back(dense(e.key), e.beta.q());
    if (nu.has_omega()) g = dense_divmod(g, dense(*nu.omega())).second;
    return naive_level(keys, nu.size(), g);
}

inline std::optional<mpq_class> naive_evaluate(const MacLaneChain& nu, const BivarPoly& f) {
    return naive_evaluate_working(nu, nu.swap_xy() ? dense_swap(dense(f)) : dense(f));
}

inline Value to_value(const std::optional<mpq_class>& v) { return v ? Value(*v) : Value::infinity(); }

// b-th derivative in y divided by b!, characteristic 0
inline Dense dense_hasse(const Dense& f, int b) {
    Dense r;
    mpz_class fact = 1;
    for (int i = 2; i <= b; ++i) fact *= i;
    for (const auto& [e, c] : f) {
        if (e.second < b) continue;
        mpz_class falling = 1;
        for (int i = 0; i < b; ++i) falling *= e.second - i;
        mpq_class k(falling, fact);
        k.canonicalize();
        r[{e.first, e.second - b}] += c * k;
    }
    dense_clean(r);
    return r;
}

// e(x, y, f) read off the support, nullopt when the pure y^mu term is missing
inline std::optional<Value> dense_e(const Dense& f) {
    int mu = -1;
    for (const auto& [e, c] : f)
        if (mu < 0 || e.first + e.second < mu) mu = e.first + e.second;
    if (!f.count({0, mu})) return std::nullopt;
    Value best = Value::infinity();
    for (const auto& [e, c] : f)
        if (e.second < mu) best = min(best, Value(mpq_class(e.first, mu - e.second)));
    return best;
}

// f(x, y + sum c_k x^k)
inline Dense dense_shift_y(const Dense& f, const std::vector<std::pair<int, mpq_class>>& shift) {
    Dense lin{{{0, 1}, 1}};
    for (const auto& [k, c] : shift)
        if (c != 0) lin[{k, 0}] += c;
    dense_clean(lin);
    std::map<int, Dense> powers{{0, Dense{{{0, 0}, 1}}}};
    Dense out;
    for (const auto& [e, c] : f) {
        while (!powers.count(e.second)) {
            int top = powers.rbegin()->first;
            powers[top + 1] = dense_mul(powers[top], lin);
        }
        Dense term = dense_mul(powers[e.second], Dense{{{e.first, 0}, c}});
        out = dense_add(out, term);
    }
    return out;
}

// Laurent order at x = 0 of num/den by power-series division
inline long series_ord(const std::vector<mpq_class>& num, const std::vector<mpq_class>& den) {
    long shift = 0;
    std::size_t dz = 0;
    while (den[dz] == 0) ++dz;
    std::size_t nz = 0;
    while (nz < num.size() && num[nz] == 0) ++nz;
    // series coefficients of num/den after removing x^dz from den
    std::vector<mpq_class> s;
    for (std::size_t k = 0; k < num.size() + den.size(); ++k) {
        mpq_class acc = k < num.size() ? num[k] : mpq_class(0);
        for (std::size_t i = 1; i <= k && dz + i < den.size(); ++i) acc -= den[dz + i] * s[k - i];
        s.push_back(acc / den[dz]);
        if (s.back() != 0) {
            shift = static_cast<long>(k);
            break;
        }
    }
    (void)nz;
    return shift - static_cast<long>(dz);
}

}  // namespace testing
