#pragma once

#include <cmath>
#include <string>
#include <vector>

#include <json.hpp>

#include "distrec/decomp/decomposition.hpp"
#include "distrec/decomp/spec.hpp"
#include "distrec/errors.hpp"
#include "distrec/exact/bigint.hpp"
#include "distrec/exact/matrix.hpp"
#include "distrec/recurrence/discover.hpp"
#include "distrec/recurrence/recurrence.hpp"
#include "distrec/recurrence/tables.hpp"
#include "distrec/recurrence/verify.hpp"
#include "distrec/trees/tree.hpp"

namespace distrec::io {

using json = nlohmann::ordered_json;

// Integers travel as decimal strings; they outgrow every JSON number type.
inline json to_json(const exact::IntMatrix& m)
{
    json entries = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.push_back(m(i, j).str());
        entries.push_back(std::move(row));
    }
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

inline json to_json(const trees::Tree& t)
{
    json edges = json::array();
    for (auto [u, v] : t.sorted_edges())
        edges.push_back({u, v});
    return {{"n", t.n()}, {"edges", std::move(edges)}};
}

inline json to_json(const decomp::Decomposition& d)
{
    return {{"m", d.m()}, {"subtree", to_json(d.subtree())}, {"attach", d.attach()}};
}

inline json coeffs_json(const std::vector<exact::BigInt>& cs)
{
    json out = json::array();
    for (const auto& c : cs)
        out.push_back(c.str());
    return out;
}

inline json rational_json(const std::vector<exact::Rational>& v)
{
    json out = json::array();
    for (const auto& x : v)
        out.push_back(exact::to_string(x));
    return out;
}

inline json to_json(const recurrence::VerificationReport& r)
{
    json out{{"mode", recurrence::to_string(r.mode)}, {"trials", r.trials}};
    if (std::isfinite(r.failure_bound_log2))
        out["failure_bound_log2"] = r.failure_bound_log2;
    else
        out["failure_bound_log2"] = nullptr;
    out["failures"] = r.failures;
    out["passed"] = r.passed();
    if (r.mode == recurrence::VerifyMode::generic) {
        out["block_sizes"] = r.block_sizes;
        if (r.prime)
            out["prime"] = std::to_string(*r.prime);
    } else {
        out["closed_form_checks"] = r.closed_form_checks;
        out["two_term_checks"] = r.two_term_checks;
        out["tree_samples"] = r.tree_samples;
    }
    return out;
}

inline json to_json(const recurrence::Recurrence& r, const recurrence::VerificationReport* verification = nullptr)
{
    json out{{"coeffs", coeffs_json(r.coeffs())}, {"minimal", r.minimal()}};
    out["origin"] = r.origin() ? to_json(*r.origin()) : json(nullptr);
    out["verification"] = verification ? to_json(*verification) : json(nullptr);
    return out;
}

inline json to_json(const recurrence::DiscoveryResult& res,
                    const recurrence::VerificationReport* verification = nullptr)
{
    json out{{"status", recurrence::to_string(res.status)}};
    out["origin"] = res.origin ? to_json(*res.origin) : json(nullptr);
    out["recurrence"] = res.recurrence ? to_json(*res.recurrence, verification) : json(nullptr);
    if (!res.untrimmed.empty())
        out["untrimmed"] = coeffs_json(res.untrimmed);
    out["dimension"] = res.dimension;
    out["rank"] = res.rank;
    out["particular"] = rational_json(res.particular);
    json basis = json::array();
    for (const auto& v : res.basis)
        basis.push_back(rational_json(v));
    out["basis"] = std::move(basis);
    out["shortest"] = res.shortest ? coeffs_json(res.shortest->coeffs()) : json(nullptr);
    out["samples"] = res.samples_used;
    out["cv_trials"] = res.cv_trials;
    out["cv_passed"] = res.cv_passed;
    return out;
}

inline json to_json(const recurrence::TableReport& t)
{
    json rows = json::array();
    for (const auto& r : t.rows) {
        json members = json::array();
        for (std::size_t i = 0; i < r.members.size(); ++i) {
            const auto& res = r.discoveries[i];
            members.push_back({{"id", decomp::decomposition_id(r.members[i])},
                               {"decomposition", to_json(r.members[i])},
                               {"status", recurrence::to_string(res.status)},
                               {"discovered", res.recurrence ? coeffs_json(res.recurrence->coeffs()) : json(nullptr)},
                               {"dimension", res.dimension},
                               {"in_family", recurrence::family_contains(res, r.expected)}});
        }
        rows.push_back({{"id", r.id},
                        {"claimed", r.claimed},
                        {"expected", coeffs_json(r.expected.coeffs())},
                        {"match", r.match()},
                        {"matches", r.matches},
                        {"in_family", r.in_family},
                        {"verified", r.verified},
                        {"has_gp_factor", recurrence::has_gp_factor(r.expected)},
                        {"verification", to_json(r.verification)},
                        {"members", std::move(members)}});
    }
    return {{"m", t.m},
            {"decompositions", t.decompositions},
            {"all_match", t.all_match()},
            {"rows", std::move(rows)},
            {"warnings", t.warnings}};
}

namespace detail {

    inline exact::BigInt bigint_from_json(const json& v)
    {
        if (v.is_string())
            return exact::parse_bigint(v.get<std::string>());
        if (v.is_number_integer())
            return exact::BigInt(v.get<long long>());
        throw ConfigError("expected an integer or decimal string, got " + v.dump());
    }

    inline std::size_t count_from_json(const json& obj, const char* key)
    {
        if (!obj.contains(key) || !obj[key].is_number_unsigned())
            throw ConfigError(std::string("missing or invalid '") + key + "'");
        return obj[key].get<std::size_t>();
    }

} // namespace detail

inline exact::IntMatrix matrix_from_json(const json& j)
{
    const std::size_t rows = detail::count_from_json(j, "rows");
    const std::size_t cols = detail::count_from_json(j, "cols");
    if (!j.contains("entries") || !j["entries"].is_array() || j["entries"].size() != rows)
        throw ConfigError("matrix 'entries' must hold " + std::to_string(rows) + " rows");
    exact::IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const json& row = j["entries"][i];
        if (!row.is_array() || row.size() != cols)
            throw ConfigError("matrix row " + std::to_string(i) + " must hold " + std::to_string(cols) + " entries");
        for (std::size_t c = 0; c < cols; ++c)
            m(i, c) = detail::bigint_from_json(row[c]);
    }
    return m;
}

inline trees::Tree tree_from_json(const json& j)
{
    const std::size_t n = detail::count_from_json(j, "n");
    if (!j.contains("edges") || !j["edges"].is_array())
        throw ConfigError("tree needs an 'edges' array");
    std::vector<trees::Edge> edges;
    for (const json& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned())
            throw ConfigError("tree edge must be [u, v], got " + e.dump());
        edges.emplace_back(e[0].get<std::size_t>(), e[1].get<std::size_t>());
    }
    try {
        return trees::Tree(n, std::move(edges));
    } catch (const std::exception& ex) {
        throw ConfigError(std::string("invalid tree: ") + ex.what());
    }
}

// Accepts a Recurrence object ({"coeffs": [...]}) or a bare coefficient array.
inline recurrence::Recurrence recurrence_from_json(const json& j)
{
    const json& cs = j.is_object() ? j.value("coeffs", json()) : j;
    if (!cs.is_array() || cs.empty())
        throw ConfigError("recurrence needs a non-empty coefficient array");
    std::vector<exact::BigInt> coeffs;
    for (const json& c : cs)
        coeffs.push_back(detail::bigint_from_json(c));
    try {
        return recurrence::Recurrence(std::move(coeffs));
    } catch (const DomainError& e) {
        throw ConfigError(e.what());
    }
}

} // namespace distrec::io
