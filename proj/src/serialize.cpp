#include "valtree/serialize.hpp"

#include <json.hpp>

#include "valtree/error.hpp"
#include "valtree/poly_io.hpp"

namespace valtree {

using nlohmann::json;

namespace {

json parse_object(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(Errc::ParseError, std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object()) throw Error(Errc::ParseError, "expected a JSON object");
    return j;
}

const json& member(const json& obj, const char* key) {
    auto it = obj.find(key);
    if (it == obj.end()) throw Error(Errc::ParseError, std::string("missing field '") + key + "'");
    return *it;
}

std::string string_member(const json& obj, const char* key) {
    const json& v = member(obj, key);
    if (!v.is_string()) throw Error(Errc::ParseError, std::string("field '") + key + "' must be a string");
    return v.get<std::string>();
}

Scalar parse_scalar(const std::string& text, const BaseField& field) {
    Value v = Value::parse(text);
    if (v.is_infinite()) throw Error(Errc::ParseError, "constant cannot be infinite");
    try {
        return field.from_rational(v.q());
    } catch (const Error&) {
        throw Error(Errc::ParseError, "constant " + text + " is not defined in " + field.to_string());
    }
}

}  // namespace

std::string chain_to_json(const MacLaneChain& nu) {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    j["field"] = nu.field().to_string();
    j["swap_xy"] = nu.swap_xy();
    auto entries = nlohmann::ordered_json::array();
    for (const auto& e : nu.entries())
        entries.push_back(nlohmann::ordered_json{{"Q", to_string(e.key)}, {"beta", e.beta.to_string()}});
    j["chain"] = entries;
    j["omega"] = nu.has_omega() ? nlohmann::ordered_json{{"Q", to_string(*nu.omega())}} : nlohmann::ordered_json(nullptr);
    return j.dump();
}

MacLaneChain chain_from_json(std::string_view text) {
    json j = parse_object(text);
    const BaseField field = BaseField::parse(string_member(j, "field"));
    bool swap = false;
    if (auto it = j.find("swap_xy"); it != j.end()) {
        if (!it->is_boolean()) throw Error(Errc::ParseError, "field 'swap_xy' must be a boolean");
        swap = it->get<bool>();
    }
    const json& arr = member(j, "chain");
    if (!arr.is_array() || arr.empty()) throw Error(Errc::ParseError, "field 'chain' must be a nonempty array");
    std::vector<ChainEntry> entries;
    for (const auto& e : arr) {
        if (!e.is_object()) throw Error(Errc::ParseError, "chain entries must be objects");
        Value beta = Value::parse(string_member(e, "beta"));
        if (beta.is_infinite()) throw Error(Errc::ParseError, "value inf is reserved to the omega entry");
        entries.push_back({parse_poly(string_member(e, "Q"), field), beta});
    }
    std::optional<BivarPoly> omega;
    if (auto it = j.find("omega"); it != j.end() && !it->is_null()) {
        if (!it->is_object()) throw Error(Errc::ParseError, "field 'omega' must be an object or null");
        omega = parse_poly(string_member(*it, "Q"), field);
    }
    return MacLaneChain(field, std::move(entries), std::move(omega), swap);
}

std::string seq_to_json(const BlowupSeq& seq) {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    j["field"] = seq.field.to_string();
    auto steps = nlohmann::ordered_json::array();
    for (const auto& s : seq.steps) {
        if (s.chart == Chart::X) steps.push_back(nlohmann::ordered_json{{"chart", "X"}, {"c", s.c.to_string()}});
        else steps.push_back(nlohmann::ordered_json{{"chart", "Y"}});
    }
    j["steps"] = steps;
    j["terminal"] = "divisor";
    return j.dump();
}

BlowupSeq seq_from_json(std::string_view text) {
    json j = parse_object(text);
    BlowupSeq seq;
    seq.field = BaseField::parse(string_member(j, "field"));
    const json& arr = member(j, "steps");
    if (!arr.is_array()) throw Error(Errc::ParseError, "field 'steps' must be an array");
    for (const auto& s : arr) {
        if (!s.is_object()) throw Error(Errc::ParseError, "steps must be objects");
        const std::string chart = string_member(s, "chart");
        if (chart == "X") {
            seq.steps.push_back({Chart::X, parse_scalar(string_member(s, "c"), seq.field)});
        } else if (chart == "Y") {
            if (s.contains("c")) throw Error(Errc::ParseError, "chart Y takes no constant");
            seq.steps.push_back({Chart::Y, Scalar()});
        } else {
            throw Error(Errc::ParseError, "chart must be X or Y, got '" + chart + "'");
        }
    }
    if (auto it = j.find("terminal"); it != j.end() && !(it->is_string() && it->get<std::string>() == "divisor"))
        throw Error(Errc::ParseError, "terminal marker must be \"divisor\"");
    return seq;
}

}  // namespace valtree

namespace valtree {

std::string chain_to_text(const MacLaneChain& nu) {
    std::string s = "[";
    for (std::size_t i = 0; i < nu.entries().size(); ++i) {
        if (i) s += ", ";
        s += "(" + to_string(nu.entries()[i].key) + ", " + nu.entries()[i].beta.to_string() + ")";
    }
    if (nu.has_omega()) s += ", (" + to_string(*nu.omega()) + ", inf)";
    s += "]";
    if (nu.swap_xy()) s += " swapped";
    if (!nu.field().is_rationals()) s += " over " + nu.field().to_string();
    return s;
}

}  // namespace valtree
