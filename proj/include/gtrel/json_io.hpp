#pragma once

#include <json.hpp>

#include "gtrel/minimal_orbit.hpp"

namespace gtrel {

using Json = nlohmann::json;

namespace detail {

template <class F>
auto guarded(const char* what, F&& f) {
    try {
        return f();
    } catch (const Json::exception& e) {
        throw Error(ErrorCode::ParseError, std::string(what) + ": " + e.what());
    }
}

} // namespace detail

inline Json to_json(const Rational& r) { return r.str(); }

inline Rational rational_from_json(const Json& j) {
    if (j.is_number_integer())
        return Rational(j.get<long>());
    if (j.is_string())
        return Rational::parse(j.get<std::string>());
    throw Error(ErrorCode::ParseError, "expected a rational string, got " + j.dump());
}

inline Json to_json(const Weight& w) {
    Json out = Json::array();
    for (auto& c : w)
        out.push_back(c.str());
    return out;
}

inline Weight weight_from_json(const Json& j) {
    if (!j.is_array())
        throw Error(ErrorCode::ParseError, "weight must be a list");
    Weight w;
    for (auto& c : j)
        w.push_back(rational_from_json(c));
    return w;
}

// Comma-separated rationals, as used on the command line.
inline Weight parse_weight(std::string_view text) {
    Weight w;
    std::string cur;
    for (char ch : std::string(text) + ",") {
        if (ch == ',') {
            if (cur.empty())
                throw Error(ErrorCode::ParseError, "empty coordinate in '" + std::string(text) + "'");
            w.push_back(Rational::parse(cur));
            cur.clear();
        } else if (ch != ' ') {
            cur += ch;
        }
    }
    return w;
}

inline Json to_json(const Tableau& t) {
    Json rows = Json::array();
    for (int r = 1; r <= t.n() + 1; ++r) {
        Json row = Json::array();
        for (int c = 1; c <= r; ++c)
            row.push_back(t.at(r, c).str());
        rows.push_back(row);
    }
    return {{"n", t.n()}, {"rows", rows}};
}

inline Tableau tableau_from_rows(int n, const Json& rows) {
    if (!rows.is_array() || static_cast<int>(rows.size()) != n + 1)
        throw Error(ErrorCode::ParseError, "rows must be a list of n+1 rows");
    Tableau t(n);
    for (int r = 1; r <= n + 1; ++r) {
        const Json& row = rows[r - 1];
        if (!row.is_array() || static_cast<int>(row.size()) != r)
            throw Error(ErrorCode::ParseError, "row " + std::to_string(r) + " must have " + std::to_string(r) +
                                                   " entries");
        for (int c = 1; c <= r; ++c)
            t.at(r, c) = rational_from_json(row[c - 1]);
    }
    return t;
}

inline Tableau tableau_from_json(const Json& j) {
    return detail::guarded("tableau", [&] { return tableau_from_rows(j.at("n").get<int>(), j.at("rows")); });
}

inline Json relations_json(const RelationSet& c) {
    Json out = Json::array();
    for (auto& r : c)
        out.push_back({{r.from.row, r.from.col}, {r.to.row, r.to.col}});
    return out;
}

inline Json to_json(const RelationSet& c) { return {{"n", c.n()}, {"relations", relations_json(c)}}; }

inline RelationSet relations_from_list(int n, const Json& list) {
    RelationSet c(n);
    for (auto& r : list) {
        Position a{r.at(0).at(0).get<int>(), r.at(0).at(1).get<int>()};
        Position b{r.at(1).at(0).get<int>(), r.at(1).at(1).get<int>()};
        c.insert(a, b);
    }
    return c;
}

inline RelationSet relations_from_json(const Json& j) {
    return detail::guarded("relations",
                           [&] { return relations_from_list(j.at("n").get<int>(), j.at("relations")); });
}

inline Json to_json(const GTModule& m) {
    return {{"n", m.n()},
            {"rows", to_json(m.seed())["rows"]},
            {"relations", relations_json(m.relations())},
            {"sigma", m.sigma()},
            {"normalization", normalization_name(m.normalization())}};
}

inline Normalization normalization_from_name(const std::string& s) {
    if (s == normalization_name(Normalization::BinomialSum))
        return Normalization::BinomialSum;
    if (s == normalization_name(Normalization::RankSum))
        return Normalization::RankSum;
    throw Error(ErrorCode::ParseError, "unknown normalization '" + s + "'");
}

inline GTModule module_from_json(const Json& j) {
    return detail::guarded("module", [&] {
        int n = j.at("n").get<int>();
        Tableau t = tableau_from_rows(n, j.at("rows"));
        RelationSet c = relations_from_list(n, j.at("relations"));
        Permutation sigma = j.contains("sigma") ? j.at("sigma").get<Permutation>() : Permutation{};
        Normalization norm = j.contains("normalization")
                                 ? normalization_from_name(j.at("normalization").get<std::string>())
                                 : Normalization::BinomialSum;
        return GTModule::create(t, c, sigma, norm);
    });
}

inline Json shift_json(const ShiftVector& z) {
    Json rows = Json::array();
    for (int r = 1; r <= z.n(); ++r) {
        Json row = Json::array();
        for (int c = 1; c <= r; ++c)
            row.push_back(z.at(r, c));
        rows.push_back(row);
    }
    return rows;
}

inline ShiftVector shift_from_json(int n, const Json& rows) {
    return detail::guarded("shift", [&] {
        if (!rows.is_array() || static_cast<int>(rows.size()) != n)
            throw Error(ErrorCode::ParseError, "shift must list rows 1..n");
        ShiftVector z(n);
        for (int r = 1; r <= n; ++r) {
            if (static_cast<int>(rows[r - 1].size()) != r)
                throw Error(ErrorCode::ParseError, "shift row " + std::to_string(r) + " has the wrong length");
            for (int c = 1; c <= r; ++c)
                z.at(r, c) = rows[r - 1][c - 1].get<int>();
        }
        return z;
    });
}

inline Json to_json(const GTVector& v) {
    Json out = Json::array();
    for (auto& [z, c] : v.terms())
        out.push_back({{"shift", shift_json(z)}, {"coeff", c.str()}});
    return out;
}

inline GTVector vector_from_json(int n, const Json& j) {
    return detail::guarded("vector", [&] {
        GTVector v;
        for (auto& term : j)
            v.add(shift_from_json(n, term.at("shift")), rational_from_json(term.at("coeff")));
        return v;
    });
}

inline Json to_json(const AxiomReport& r) {
    Json fails = Json::array();
    for (auto& f : r.failures)
        fails.push_back({{"identity", f.identity}, {"shift", shift_json(f.shift)}});
    return {{"failures", fails}, {"samples", r.samples}, {"seed", r.seed}, {"checks", r.checks}};
}

inline Json to_json(const HWCase& c) {
    Json out = {{"case", c.tag == HWCase::Tag::CaseA ? "CaseA" : c.tag == HWCase::Tag::CaseB ? "CaseB" : "NotRelation"}};
    if (c.tag == HWCase::Tag::CaseB) {
        out["i"] = c.i;
        out["j"] = c.j;
    }
    return out;
}

inline Json to_json(const LocalizationSpec& s) {
    Json out = {{"targets", s.targets}};
    if (s.x)
        out["x"] = s.x->str();
    return out;
}

inline LocalizationSpec localization_spec_from_json(const Json& j) {
    return detail::guarded("localization spec", [&] {
        LocalizationSpec s;
        s.targets = j.at("targets").get<std::vector<int>>();
        if (j.contains("x") && !j.at("x").is_null())
            s.x = rational_from_json(j.at("x"));
        return s;
    });
}

} // namespace gtrel
