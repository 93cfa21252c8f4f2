#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "valtree/bivar.hpp"
#include "valtree/error.hpp"
#include "valtree/value.hpp"

namespace valtree {

struct ChainEntry {
    BivarPoly key;
    Value beta;

    friend bool operator==(const ChainEntry&, const ChainEntry&) = default;
};

// A valuation given by a MacLane chain [(y, b1), (Q2, b2), ...] plus an
// optional key polynomial of infinite value. Key polynomials live in the
// chain's working coordinates; with swap_xy set, the working y is the ambient x.
//
// Construction does not check the chain invariants; see validate().
class MacLaneChain {
public:
    MacLaneChain(BaseField field, std::vector<ChainEntry> entries, std::optional<BivarPoly> omega = std::nullopt,
                 bool swap_xy = false);

    const BaseField& field() const { return field_; }
    bool swap_xy() const { return swap_; }
    const std::vector<ChainEntry>& entries() const { return entries_; }
    const std::optional<BivarPoly>& omega() const { return omega_; }
    bool has_omega() const { return omega_.has_value(); }

    // number of finite entries
    int size() const { return static_cast<int>(entries_.size()); }
    // finite entries plus the omega entry
    int length() const { return size() + (omega_ ? 1 : 0); }
    // 1-based accessors over the finite entries
    const BivarPoly& key(int i) const { return entries_.at(i - 1).key; }
    const Value& beta(int i) const { return entries_.at(i - 1).beta; }
    int degree(int i) const { return key(i).degree(); }

    friend bool operator==(const MacLaneChain&, const MacLaneChain&) = default;

private:
    BaseField field_;
    std::vector<ChainEntry> entries_;
    std::optional<BivarPoly> omega_;
    bool swap_ = false;
};

// ambient coordinates -> working coordinates of nu (polynomials only)
BivarPoly to_working(const MacLaneChain& nu, const BivarPoly& f);
// working coordinates of nu -> ambient coordinates
BivarPoly to_ambient(const MacLaneChain& nu, const BivarPoly& f);

// nu(f) for f in ambient coordinates
Value evaluate(const MacLaneChain& nu, const BivarPoly& f);
// nu(f) for f in working coordinates
Value evaluate_internal(const MacLaneChain& nu, const BivarPoly& f);
// the truncation nu_level (1 <= level <= size()), omega ignored, working coordinates
Value evaluate_level(const MacLaneChain& nu, int level, const BivarPoly& f);

// Minimal-value part of the full reduced expansion of f (working coordinates).
// Keys are (alpha, c_1, ..., c_n) for the term x^alpha Q_1^c_1 ... Q_n^c_n.
// Two polynomials of equal value v have equal initial forms iff their
// difference has value > v.
struct InitialForm {
    Value value;
    std::map<std::vector<int>, Scalar> terms;
};
InitialForm initial_form_internal(const MacLaneChain& nu, const BivarPoly& f);

MacLaneChain augment(const MacLaneChain& nu, const BivarPoly& Q, const Value& beta);
MacLaneChain truncate(const MacLaneChain& nu, int i);
MacLaneChain monomial_valuation(const Value& e, const BaseField& field = BaseField());
std::vector<Value> value_group_generators(const MacLaneChain& nu);

struct KrullValue {
    long s = 0;
    Value v;

    friend bool operator==(const KrullValue&, const KrullValue&) = default;
    friend std::strong_ordering operator<=>(const KrullValue& a, const KrullValue& b) {
        if (auto c = a.s <=> b.s; c != 0) return c;
        return a.v <=> b.v;
    }
};
KrullValue krull_value(const MacLaneChain& nu, const BivarPoly& f);

struct Violation {
    int index;  // 1-based entry; length() for the omega entry
    Errc rule;
    std::string detail;
};
std::vector<Violation> validate(const MacLaneChain& nu);
// throws the first violation as an Error
void require_valid(const MacLaneChain& nu);

}  // namespace valtree
