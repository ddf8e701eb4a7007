#pragma once

// nlohmann::json adapters. Exact values go out as decimal strings
// ({"num": "...", "den": "..."} and {"a": ..., "b": ..., "m": ...}) so that
// nothing passes through a double on the way.

#include <json.hpp>

#include "errata.hpp"
#include "qfield.hpp"
#include "rational.hpp"
#include "solver.hpp"

namespace quadratica {

using json = nlohmann::ordered_json;

inline json to_json_value(const BigRational& r)
{
    return json{{"num", to_string(r.num())}, {"den", to_string(r.den())}};
}

inline json to_json_value(const QuadElem& z)
{
    return json{{"a", to_json_value(z.a())}, {"b", to_json_value(z.b())}, {"m", z.m()}, {"text", z.str()}};
}

inline BigRational rational_from_json(const json& j)
{
    if (j.is_string()) {
        return BigRational::parse(j.get<std::string>());
    }
    if (j.is_number_integer()) {
        return BigRational(j.get<long long>());
    }
    if (!j.is_object() || !j.contains("num") || !j.contains("den")) {
        fail(ErrorCode::ParseError, "rational JSON needs num and den");
    }
    auto part = [&](const char* key) {
        const json& v = j.at(key);
        return v.is_string() ? parse_bigint(v.get<std::string>()) : BigInt(v.get<long>());
    };
    return BigRational(part("num"), part("den"));
}

inline QuadElem quad_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("a") || !j.contains("b") || !j.contains("m")) {
        fail(ErrorCode::ParseError, "field element JSON needs a, b and m");
    }
    const BigRational a = rational_from_json(j.at("a"));
    const BigRational b = rational_from_json(j.at("b"));
    const std::int64_t m = j.at("m").get<std::int64_t>();
    if (b.is_zero()) {
        return QuadElem::rational(a, m);
    }
    return QuadElem::make(a, b, m);
}

inline json to_json_value(const Quadratic& q)
{
    return json{{"a", to_json_value(q.a())}, {"b", to_json_value(q.b())}, {"c", to_json_value(q.c())}, {"text", q.str()}};
}

inline json to_json_value(const RootPair& r)
{
    return json{{"kind", root_kind_name(r.kind)}, {"r1", to_json_value(r.r1)}, {"r2", to_json_value(r.r2)}};
}

inline json errata_json()
{
    json entries = json::array();
    for (const ErratumEntry& e : errata()) {
        entries.push_back({{"id", e.id},
                           {"topic", e.topic},
                           {"displayed", e.displayed},
                           {"derived", e.derived},
                           {"oracle", e.oracle}});
    }
    return json{{"version", kErrataVersion}, {"entries", entries}};
}

} // namespace quadratica
