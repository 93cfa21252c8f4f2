#pragma once

#include <optional>
#include <vector>

#include "valtree/bivar.hpp"
#include "valtree/value.hpp"

namespace valtree {

enum class Chart { X, Y };

// Chart X with constant c: (x, y) <- (x, x*(y + c)).
// Chart Y:                 (x, y) <- (x*y, y).
struct BlowupStep {
    Chart chart = Chart::X;
    Scalar c;

    friend bool operator==(const BlowupStep&, const BlowupStep&) = default;
};

// Blow up the origin, then each listed point in turn, and take the order of
// vanishing along the last exceptional divisor.
struct BlowupSeq {
    BaseField field;
    std::vector<BlowupStep> steps;

    friend bool operator==(const BlowupSeq&, const BlowupSeq&) = default;
};

struct Transform {
    int m = 0;
    BivarPoly strict;
};

// Strict transform of f, up to a unit when f has non-polynomial coefficients.
Transform transform(const BivarPoly& f, const BlowupStep& step);
int multiplicity(const BivarPoly& f);
Value e_exponent(const BivarPoly& f);

struct WeightedInitialForm {
    Value e;
    int mu = 0;     // multiplicity of f
    Value weight;   // minimal weight alpha + e*beta over the support
    BivarPoly::Terms terms;
};
WeightedInitialForm weighted_initial_form(const BivarPoly& f, const Value& e);

// iteration cap: VALTREE_MAX_ITER when set, otherwise 64
int default_max_iter();
Value first_char_exponent(const BivarPoly& f, int max_iter = default_max_iter());

struct DivisorialValue {
    Value value;  // normalized so that min(v(x), v(y)) = 1
    long raw = 0;
    long raw_x = 0;
    long raw_y = 0;
};
DivisorialValue divisorial_value_detail(const BlowupSeq& seq, const BivarPoly& f);
Value divisorial_value(const BlowupSeq& seq, const BivarPoly& f);

// Lowest homogeneous part of the total transform of a polynomial f at the
// final center; keys are {i, j} for x^i y^j. Raw (unnormalized) degree.
struct TotalTransformForm {
    long raw = 0;
    BivarPoly::Terms terms;
};
TotalTransformForm divisorial_initial_form(const BlowupSeq& seq, const BivarPoly& f);

struct DescentRow {
    int mu = 0;
    Value e;
};
struct Descent {
    std::vector<DescentRow> rows;
    std::vector<BlowupStep> centers;
};
// Follows f through at most max_steps blowups, each centered at a point of
// the strict transform of maximal multiplicity. Stops at e = inf or mu = 0.
Descent descent(const BivarPoly& f, int max_steps);

// point of the exceptional divisor where the strict transform has maximal
// multiplicity; nullopt when no such point is rational
std::optional<BlowupStep> tangent_center(const BivarPoly& f);

}  // namespace valtree
