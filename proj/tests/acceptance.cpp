// One line per acceptance criterion; exit status is nonzero when any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <set>

#include "support.hpp"
#include "valtree/keypoly.hpp"

using namespace testing;

namespace {

struct Outcome {
    bool ok = true;
    std::string note;
    void fail(const std::string& why) {
        if (ok) note = why;
        ok = false;
    }
};

Value q(long a, long b = 1) { return Value(mpq_class(a, b)); }

bool le(const MacLaneChain& a, const MacLaneChain& b) {
    Relation r = compare(a, b).relation;
    return r == Relation::Less || r == Relation::Equal;
}

Outcome valuation_axioms() {
    Outcome o;
    Rng rng(1001);
    const auto chains = bundled_chains();
    int omega = 0, prime = 0;
    for (const auto& nu : chains) {
        omega += nu.has_omega();
        prime += !nu.field().is_rationals();
        for (int n = 0; n < 500; ++n) {
            BivarPoly f = random_poly(rng, nu.field(), 8, 8, 10);
            BivarPoly g = random_poly(rng, nu.field(), 8, 8, 10);
            const Value vf = evaluate(nu, f), vg = evaluate(nu, g);
            if (evaluate(nu, f * g) != vf + vg) o.fail("product rule on " + chain_to_text(nu));
            if (evaluate(nu, f + g) < min(vf, vg)) o.fail("sum rule on " + chain_to_text(nu));
        }
    }
    if (chains.size() != 10 || omega < 1 || prime < 1) o.fail("bundled chain set incomplete");
    return o;
}

Outcome truncation_ladder() {
    Outcome o;
    Rng rng(1002);
    for (const auto& nu : bundled_chains()) {
        std::vector<MacLaneChain> ladder;
        for (int i = 1; i <= nu.length(); ++i) ladder.push_back(truncate(nu, i));
        auto deg_of = [&](int i) { return i <= nu.size() ? nu.degree(i) : nu.omega()->degree(); };
        for (int n = 0; n < 300; ++n) {
            BivarPoly f = random_poly(rng, nu.field(), 8, 8, 10);
            const Value full = evaluate(nu, f);
            std::vector<Value> v;
            for (const auto& t : ladder) v.push_back(evaluate(t, f));
            for (std::size_t i = 1; i < v.size(); ++i)
                if (v[i - 1] > v[i]) o.fail("ladder not monotone on " + chain_to_text(nu));
            if (v.back() != full) o.fail("last truncation differs from the chain");
            // first index attaining the value; the base truncation always qualifies
            int first = 1;
            while (v[first - 1] != full) ++first;
            const int deg = to_working(nu, f).degree();
            if (first > 1 && deg_of(first) > deg) o.fail("stabilization past the degree of f on " + chain_to_text(nu));
            if (full.is_finite()) {
                for (int i = 1; i <= nu.length(); ++i)
                    if (deg_of(i) > deg && i > 1 && v[i - 1] != v[i - 2]) o.fail("value moved above the degree of f");
            }
        }
    }
    return o;
}

Outcome blowup_round_trip() {
    Outcome o;
    Rng rng(1003);
    const auto seqs = bundled_seqs();
    if (seqs.size() != 12) o.fail("bundled sequence set incomplete");
    for (const auto& seq : seqs) {
        if (seq.steps.empty() || seq.steps.size() > 6) o.fail("sequence length outside 1..6");
        const MacLaneChain nu = blowups_to_chain(seq);
        const ChainToBlowups back = chain_to_blowups(nu, 32);
        if (!back.exact) o.fail("chain_to_blowups not exact for " + seq_to_json(seq));
        for (int n = 0; n < 300; ++n) {
            BivarPoly f = random_poly(rng, seq.field, 6, 6, 10);
            const Value d = divisorial_value(seq, f);
            if (evaluate(nu, f) != d) o.fail("chain disagrees with divisor on " + seq_to_json(seq));
            if (divisorial_value(back.seq, f) != d) o.fail("inverse sequence disagrees on " + seq_to_json(seq));
        }
    }
    return o;
}

Outcome lexicographic_descent() {
    Outcome o;
    using Table = std::vector<std::pair<int, Value>>;
    const std::vector<std::pair<const char*, Table>> cases{
        {"y^2-x^3", {{2, q(3, 2)}, {1, Value::infinity()}}},
        {"y^3-x^5", {{3, q(5, 3)}, {2, q(3, 2)}, {1, Value::infinity()}}},
        {"(y^2-x^3)^2-x^7*y",
         {{4, q(3, 2)}, {2, q(9, 2)}, {2, q(7, 2)}, {2, q(5, 2)}, {2, q(3, 2)}, {1, Value::infinity()}}},
    };
    for (const auto& [text, expect] : cases) {
        const BivarPoly f = P(text);
        const Descent d = descent(f, 16);
        Table got;
        for (const auto& r : d.rows) got.emplace_back(r.mu, r.e);
        if (got != expect) o.fail(std::string("table mismatch for ") + text);
        for (std::size_t i = 1; i < d.rows.size(); ++i) {
            const auto& a = d.rows[i - 1];
            const auto& b = d.rows[i];
            if (!(b.mu < a.mu || (b.mu == a.mu && b.e < a.e))) o.fail(std::string("no strict descent for ") + text);
        }
        // the centers lie on the strict transforms
        BivarPoly g = f;
        for (std::size_t i = 0; i < d.centers.size(); ++i) {
            if (multiplicity(g) != d.rows[i].mu) o.fail(std::string("row multiplicity for ") + text);
            Transform t = transform(g, d.centers[i]);
            if (t.m != d.rows[i].mu) o.fail(std::string("center off the curve for ") + text);
            g = t.strict;
        }
    }
    return o;
}

// largest e over translations y <- y + c1*x + c2*x^2 with small integer c1, c2
Value substitution_search(const BivarPoly& f) {
    std::optional<Value> best;
    for (int c1 = -3; c1 <= 3; ++c1)
        for (int c2 = -3; c2 <= 3; ++c2)
            if (auto e = dense_e(dense_shift_y(dense(f), {{1, c1}, {2, c2}})); e && (!best || *e > *best)) best = *e;
    return best.value_or(Value(0));
}

Outcome characteristic_exponent() {
    Outcome o;
    const std::vector<std::pair<const char*, Value>> cases{
        {"y^2-x^3", q(3, 2)}, {"y^2-2*x*y+x^2-x^5", q(5, 2)}, {"y^2-x^2", q(1)}};
    for (const auto& [text, expect] : cases) {
        const BivarPoly f = P(text);
        const auto t0 = std::chrono::steady_clock::now();
        const Value e = first_char_exponent(f);
        const auto dt = std::chrono::steady_clock::now() - t0;
        if (e != expect) o.fail(std::string("wrong exponent for ") + text);
        if (substitution_search(f) != expect) o.fail(std::string("oracle disagrees for ") + text);
        if (dt >= std::chrono::seconds(1)) o.fail(std::string("slow on ") + text);
    }
    return o;
}

Outcome tree_axioms() {
    Outcome o;
    Rng rng(1006);
    for (int n = 0; n < 100; ++n) {
        const auto [mu, nu] = random_related_pair(rng);
        const std::string tag = chain_to_text(mu) + " / " + chain_to_text(nu);
        const MacLaneChain m = infimum(mu, nu);
        if (!le(m, mu) || !le(m, nu)) o.fail("infimum is not a lower bound: " + tag);
        // common lower bounds are the points of mu's segment below nu, an initial
        // interval [1, t*]; locate t* by bisection on compare alone
        const Value end = segment_end(mu);
        Value lo(1), hi = end;
        if (le(mu, nu)) lo = end;
        for (int it = 0; it < 24 && lo != hi; ++it) {
            const Value mid((lo.q() + hi.q()) / 2);
            (le(segment_point(mu, mid), nu) ? lo : hi) = mid;
        }
        for (int k = 0; k < 50; ++k) {
            const Value t = k == 0 ? lo : Value(1) + Value((lo.q() - 1) * mpq_class(rng.uniform(0, 1000), 1000));
            const MacLaneChain lam = segment_point(mu, t);
            if (!le(lam, mu) || !le(lam, nu)) o.fail("sampled point is not a common lower bound: " + tag);
            if (!le(lam, m)) o.fail("infimum does not dominate a common lower bound: " + tag);
        }
        for (const MacLaneChain& c : {mu, nu}) {
            const Value e = segment_end(c);
            if (segment_point(c, q(1)) != root_valuation(c.field())) o.fail("segment misses the root: " + tag);
            if (compare(segment_point(c, e), c).relation != Relation::Equal) o.fail("segment misses its end: " + tag);
            if (e == Value(1)) continue;
            std::set<Value> ts;
            while (ts.size() < 20) ts.insert(Value(1) + Value((e.q() - 1) * mpq_class(rng.uniform(0, 997), 997)));
            std::optional<MacLaneChain> prev;
            for (const auto& t : ts) {
                MacLaneChain cur = segment_point(c, t);
                if (prev && compare(*prev, cur).relation != Relation::Less) o.fail("segment not monotone: " + tag);
                prev = std::move(cur);
            }
        }
    }
    for (const auto& nu : bundled_chains())
        if (!le(root_valuation(nu.field()), nu)) o.fail("root is not below " + chain_to_text(nu));
    return o;
}

Outcome validation_fixtures() {
    Outcome o;
    Rng rng(1007);
    std::vector<MacLaneChain> built = bundled_chains();
    const MacLaneChain mono = monomial_valuation(q(3, 2));
    built.push_back(mono);
    built.push_back(augment(mono, P("y^2-x^3"), q(4)));
    built.push_back(augment(mono, P("y^2-x^3"), Value::infinity()));
    built.push_back(augment(root_valuation(), P("y-x"), q(2)));
    built.push_back(majorant_limit(mono, P("y^2-x^3"), q(13, 4)));
    for (int n = 0; n < 40; ++n) {
        auto [a, b] = random_related_pair(rng, n % 4 == 0 ? BaseField::prime(3) : BaseField());
        built.push_back(a);
        built.push_back(b);
        built.push_back(infimum(a, b));
    }
    for (const auto& nu : built)
        if (!validate(nu).empty()) o.fail("rejected constructed chain " + chain_to_text(nu));

    auto mk = [](const std::vector<std::pair<const char*, const char*>>& e, const char* omega = nullptr) {
        std::vector<ChainEntry> entries;
        for (const auto& [k, b] : e) entries.push_back({P(k), Value::parse(b)});
        std::optional<BivarPoly> w;
        if (omega) w = P(omega);
        return MacLaneChain(BaseField(), entries, w);
    };
    const std::vector<std::pair<MacLaneChain, Errc>> fixtures{
        {mk({{"y", "1"}, {"y^2-x", "3"}}), Errc::ShapeViolation},
        {mk({{"y", "3/2"}, {"y^2-x^3", "3"}}), Errc::ValueNotIncreased},
        {mk({{"y", "3/2"}, {"y^2-x^3", "4"}, {"y^3-x^5", "9"}}), Errc::BadDegree},
        {mk({{"y", "1/2"}}), Errc::NotNormalized},
        {mk({{"y", "3/2"}, {"2*y^2-x^3", "4"}}), Errc::NonMonic},
        {mk({{"y", "3/2"}}, "y^3-x^4"), Errc::OmegaInconsistent},
    };
    for (const auto& [nu, rule] : fixtures) {
        auto v = validate(nu);
        if (v.size() != 1 || v[0].rule != rule)
            o.fail(std::string("fixture not rejected as ") + errc_name(rule) + ": " + chain_to_text(nu));
    }
    return o;
}

Outcome epsilon_oracle() {
    Outcome o;
    Rng rng(1008);
    std::vector<MacLaneChain> pool;
    for (const auto& nu : bundled_chains())
        if (nu.field().is_rationals()) pool.push_back(nu);
    for (int n = 0; n < 12; ++n) pool.push_back(random_chain(rng));
    int done = 0;
    while (done < 200) {
        const MacLaneChain& nu = pool[rng.uniform(0, static_cast<long>(pool.size()) - 1)];
        const BivarPoly P0 = random_poly(rng, BaseField(), 6, 6, 10);
        const Dense w = nu.swap_xy() ? dense_swap(dense(P0)) : dense(P0);
        const int deg = dense_ydeg(w);
        if (deg < 1) continue;
        ++done;
        const Value vp = to_value(naive_evaluate_working(nu, w));
        std::optional<Value> best;
        std::set<int> arg;
        for (int b = 1; b <= deg; ++b) {
            const Dense d = dense_hasse(w, b);
            if (d.empty()) continue;
            const auto vd = naive_evaluate_working(nu, d);
            if (!vd) continue;
            const Value r = (vp - Value(*vd)) / mpq_class(b);
            if (!best || r > *best) {
                best = r;
                arg = {b};
            } else if (r == *best) {
                arg.insert(b);
            }
        }
        const EpsilonData e = epsilon_data(nu, P0);
        if (!best || e.epsilon != *best || e.I != arg || e.b != *arg.begin())
            o.fail("mismatch on " + chain_to_text(nu) + " at " + to_string(P0));
    }
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"valuation axioms on bundled chains", valuation_axioms},
        {"truncation ladder and degree-bounded stabilization", truncation_ladder},
        {"blowup sequence round trip", blowup_round_trip},
        {"lexicographic descent of (mu, e)", lexicographic_descent},
        {"first characteristic exponent", characteristic_exponent},
        {"tree axioms: infimum, segments, root", tree_axioms},
        {"validation of constructed chains and fixtures", validation_fixtures},
        {"epsilon data against a brute-force oracle", epsilon_oracle},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
        std::cout << "criterion " << i + 1 << ": " << (o.ok ? "PASS" : "FAIL") << " - " << criteria[i].first << " ("
                  << ms << " ms)";
        if (!o.ok) std::cout << ": " << o.note;
        std::cout << std::endl;
        failed += !o.ok;
    }
    return failed == 0 ? 0 : 1;
}
