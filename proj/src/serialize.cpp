#include "qvertex/serialize.hpp"

namespace qvertex {

using nlohmann::json;

json to_json(const LaurentPoly& p) {
    bool wide = (p.used_vars() & ~((1u << var::t) | (1u << var::s))) != 0;
    json out = json::array();
    for (const auto& [e, c] : p.terms()) {
        json term = json::array({e[var::t], e[var::s]});
        if (wide) {
            term.push_back(e[var::s2]);
            term.push_back(e[var::s3]);
        }
        term.push_back(rat_to_string(c));
        out.push_back(std::move(term));
    }
    return out;
}

json to_json(const LaurentFraction& f) { return {{"num", to_json(f.num())}, {"den", to_json(f.den())}}; }

json to_json(const QSeries& s) {
    json coeffs = json::array();
    for (const auto& c : s.coeffs()) coeffs.push_back(to_json(c));
    return {{"trunc", s.trunc()}, {"coeffs", coeffs}};
}

json to_json(const QSeries2& s) {
    json coeffs = json::array();
    for (const auto& c : s.coeffs()) coeffs.push_back(to_json(c));
    return {{"trunc", s.trunc()}, {"coeffs", coeffs}};
}

json to_json(const SignedExponentMultiset& ms) {
    json out = json::array();
    for (auto [e, c] : ms) out.push_back({e, c});
    return out;
}

json to_json(const VerificationReport& r) {
    json entries = json::array();
    for (const auto& e : r.entries) {
        json j = {{"identity", e.identity}, {"instance", e.instance}, {"status", e.pass ? "pass" : "fail"}};
        if (e.informational) j["informational"] = true;
        if (!e.pass) j["witness"] = {{"lhs", e.lhs}, {"rhs", e.rhs}};
        if (!e.note.empty()) j["note"] = e.note;
        entries.push_back(std::move(j));
    }
    json params = json::object();
    for (const auto& [k, v] : r.params) params[k] = v;
    return {{"suite", r.suite},
            {"params", params},
            {"summary", {{"passed", r.passed()}, {"failed", r.failed()}, {"reported", r.reported()},
                         {"total", r.entries.size()}}},
            {"entries", entries}};
}

json units_json() {
    return {{"t", "q^(1/2)"}, {"s", "Q^(1/2)"}, {"s2", "Q2^(1/2)"}, {"s3", "Q3^(1/2)"}};
}

}  // namespace qvertex
