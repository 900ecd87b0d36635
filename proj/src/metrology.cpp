#include "pyrageo/metrology.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

#include <json.hpp>

#include "pyrageo/dsl/interpreter.hpp"
#include "pyrageo/dsl/parser.hpp"

namespace pyrageo::metrology {

using nlohmann::json;

std::string to_string(Unit u) { return u == Unit::Meter ? "meter" : "cubit"; }

Unit parse_unit(const std::string& s) {
    if (s == "meter" || s == "m") return Unit::Meter;
    if (s == "cubit" || s == "c") return Unit::Cubit;
    throw std::invalid_argument("unknown unit '" + s + "' (expected meter or cubit)");
}

double convert(double value, Unit from, Unit to, double cubit_in_meters) {
    if (!(cubit_in_meters > 0.0)) throw std::invalid_argument("cubit length must be positive");
    if (from == to) return value;
    return from == Unit::Cubit ? value * cubit_in_meters : value / cubit_in_meters;
}

// ---------------------------------------------------------------------------
// Dataset

Dataset::Dataset(double cubit_in_meters) : cubit_in_meters_(cubit_in_meters) {
    if (!(cubit_in_meters > 0.0) || !std::isfinite(cubit_in_meters)) {
        throw InputError("cubit_in_meters must be a positive number");
    }
}

void Dataset::add(Measurement m) {
    const std::string key = m.monument + "." + m.dimension + "[" + m.source + "] (" + to_string(m.unit) + ")";
    if (m.monument.empty() || m.dimension.empty()) throw InputError("measurement needs monument and dimension");
    if (m.source.empty()) throw InputError("measurement " + key + " has an empty source");
    if (!(m.value > 0.0) || !std::isfinite(m.value)) throw InputError("measurement " + key + " must be positive");
    if (find(m.monument, m.dimension, m.source, m.unit)) throw InputError("duplicate measurement " + key);
    measurements_.push_back(std::move(m));
}

const Measurement* Dataset::find(const std::string& monument, const std::string& dimension,
                                 const std::string& source, Unit unit) const {
    for (const auto& m : measurements_) {
        if (m.monument == monument && m.dimension == dimension && m.source == source && m.unit == unit) return &m;
    }
    return nullptr;
}

std::vector<std::string> Dataset::sources_for(const std::string& monument, const std::string& dimension) const {
    std::set<std::string> s;
    for (const auto& m : measurements_) {
        if (m.monument == monument && m.dimension == dimension) s.insert(m.source);
    }
    return {s.begin(), s.end()};
}

std::optional<double> Dataset::value_in(const std::string& monument, const std::string& dimension,
                                        const std::string& source, Unit unit) const {
    if (const auto* m = find(monument, dimension, source, unit)) return m->value;
    const Unit other = unit == Unit::Meter ? Unit::Cubit : Unit::Meter;
    if (const auto* m = find(monument, dimension, source, other)) {
        return convert(m->value, other, unit, cubit_in_meters_);
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Claims

namespace {

std::string resolve_source(const dsl::MeasureRef& ref, const Claim& claim, const Dataset& data) {
    if (!ref.source.empty()) return ref.source;
    const std::string full = ref.monument + "." + ref.dimension;
    if (auto it = claim.source_bindings.find(full); it != claim.source_bindings.end()) return it->second;
    if (auto it = claim.source_bindings.find(ref.monument); it != claim.source_bindings.end()) return it->second;
    const auto sources = data.sources_for(ref.monument, ref.dimension);
    if (sources.size() == 1) return sources.front();
    if (std::find(sources.begin(), sources.end(), "Lehner") != sources.end()) return "Lehner";
    if (sources.empty()) return {};
    std::string list;
    for (const auto& s : sources) list += (list.empty() ? "" : ", ") + s;
    throw std::runtime_error("measurement '" + full + "' is ambiguous (sources: " + list + ")");
}

double side_value(const std::string& text, const char* side, const Claim& claim, const Dataset& data) {
    const dsl::MeasureResolver resolver = [&](const dsl::MeasureRef& ref) -> std::optional<dsl::Value> {
        const std::string source = resolve_source(ref, claim, data);
        if (source.empty()) return std::nullopt;
        auto v = data.value_in(ref.monument, ref.dimension, source, claim.unit_system);
        if (!v) return std::nullopt;
        return dsl::Value(*v);
    };
    try {
        const dsl::ExprPtr expr = dsl::parse_expression(text);
        const dsl::Value v = dsl::evaluate_expression(*expr, dsl::Env{}, resolver);
        if (!v.is<double>() && !v.is<geom::Angle>()) {
            throw InputError(claim.id + ": " + side + " must evaluate to a number or an angle");
        }
        return v.scalar();
    } catch (const dsl::Diagnostic& d) {
        throw InputError(claim.id + ": " + side + " col " + std::to_string(d.pos().column) + ": " + d.message());
    }
}

}  // namespace

ClaimResult evaluate_claim(const Claim& claim, const Dataset& data) {
    ClaimResult r;
    r.claim_id = claim.id;
    r.claimed_rel_err = claim.claimed_rel_err;
    r.lhs_value = side_value(claim.lhs, "lhs", claim, data);
    r.rhs_value = side_value(claim.rhs, "rhs", claim, data);
    if (r.rhs_value == 0.0) throw InputError(claim.id + ": division by zero (rhs evaluates to 0)");
    r.rel_err = std::abs(r.lhs_value - r.rhs_value) / std::abs(r.rhs_value);
    const double allowed = claim.claimed_rel_err * kPassSlack;
    r.pass = r.rel_err <= allowed;
    r.margin = allowed - r.rel_err;
    return r;
}

SuiteReport run_suite(std::span<const Claim> claims, const Dataset& data) {
    SuiteReport rep;
    rep.results.reserve(claims.size());
    for (const auto& c : claims) {
        try {
            rep.results.push_back(evaluate_claim(c, data));
            ++(rep.results.back().pass ? rep.passed : rep.failed);
        } catch (const std::exception& ex) {
            ClaimResult r;
            r.claim_id = c.id;
            r.claimed_rel_err = c.claimed_rel_err;
            r.error = ex.what();
            rep.results.push_back(std::move(r));
            ++rep.errored;
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// JSON input

namespace {

struct FieldReader {
    const std::string& origin;

    [[noreturn]] void fail(const std::string& field, const std::string& what) const {
        throw InputError(origin + ": field '" + field + "': " + what);
    }

    const json& member(const json& obj, const std::string& key, const std::string& path) const {
        if (!obj.is_object()) fail(path, "expected an object");
        auto it = obj.find(key);
        if (it == obj.end()) fail(path.empty() ? key : path + "." + key, "missing");
        return *it;
    }

    std::string text(const json& obj, const std::string& key, const std::string& path, bool required = true) const {
        const std::string field = path.empty() ? key : path + "." + key;
        if (!required && (!obj.is_object() || !obj.contains(key))) return {};
        const json& v = member(obj, key, path);
        if (!v.is_string()) fail(field, "expected a string");
        return v.get<std::string>();
    }

    // Decimal string (preferred) or JSON number.
    double number(const json& obj, const std::string& key, const std::string& path) const {
        const std::string field = path.empty() ? key : path + "." + key;
        const json& v = member(obj, key, path);
        if (v.is_number()) return v.get<double>();
        if (!v.is_string()) fail(field, "expected a decimal string");
        const std::string s = v.get<std::string>();
        double out = 0.0;
        auto res = std::from_chars(s.data(), s.data() + s.size(), out);
        if (s.empty() || res.ec != std::errc() || res.ptr != s.data() + s.size() || !std::isfinite(out)) {
            fail(field, "'" + s + "' is not a decimal number");
        }
        return out;
    }

    Unit unit(const json& obj, const std::string& key, const std::string& path) const {
        const std::string s = text(obj, key, path);
        try {
            return parse_unit(s);
        } catch (const std::invalid_argument& e) {
            fail(path + "." + key, e.what());
        }
    }
};

json parse_or_throw(const std::string& text, const std::string& origin) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(origin + ": invalid JSON: " + e.what());
    }
}

}  // namespace

Dataset parse_dataset_json(const std::string& text, const std::string& origin) {
    const FieldReader rd{origin};
    const json doc = parse_or_throw(text, origin);
    Dataset data(rd.number(doc, "cubit_in_meters", ""));
    const json& list = rd.member(doc, "measurements", "");
    if (!list.is_array()) rd.fail("measurements", "expected an array");
    for (std::size_t i = 0; i < list.size(); ++i) {
        const std::string path = "measurements[" + std::to_string(i) + "]";
        const json& item = list[i];
        Measurement m;
        m.monument = rd.text(item, "monument", path);
        m.dimension = rd.text(item, "dimension", path);
        m.value = rd.number(item, "value", path);
        m.unit = rd.unit(item, "unit", path);
        m.source = rd.text(item, "source", path);
        m.paper_ref = rd.text(item, "paper_ref", path, false);
        try {
            data.add(std::move(m));
        } catch (const InputError& e) {
            rd.fail(path, e.what());
        }
    }
    return data;
}

std::vector<Claim> parse_claims_json(const std::string& text, const std::string& origin) {
    const FieldReader rd{origin};
    const json doc = parse_or_throw(text, origin);
    const json& list = rd.member(doc, "claims", "");
    if (!list.is_array()) rd.fail("claims", "expected an array");
    std::vector<Claim> out;
    std::set<std::string> ids;
    for (std::size_t i = 0; i < list.size(); ++i) {
        const std::string path = "claims[" + std::to_string(i) + "]";
        const json& item = list[i];
        Claim c;
        c.id = rd.text(item, "id", path);
        if (c.id.empty() || !ids.insert(c.id).second) rd.fail(path + ".id", "empty or duplicate claim id");
        c.description = rd.text(item, "description", path, false);
        c.lhs = rd.text(item, "lhs", path);
        c.rhs = rd.text(item, "rhs", path);
        for (const char* side : {"lhs", "rhs"}) {
            try {
                dsl::parse_expression(side == std::string("lhs") ? c.lhs : c.rhs);
            } catch (const dsl::Diagnostic& d) {
                rd.fail(path + "." + side, "col " + std::to_string(d.pos().column) + ": " + d.message());
            }
        }
        c.unit_system = rd.unit(item, "unit_system", path);
        c.claimed_rel_err = rd.number(item, "claimed_rel_err", path);
        if (!(c.claimed_rel_err > 0.0)) rd.fail(path + ".claimed_rel_err", "must be positive");
        if (item.contains("source_bindings")) {
            const json& sb = item["source_bindings"];
            if (!sb.is_object()) rd.fail(path + ".source_bindings", "expected an object");
            for (auto it = sb.begin(); it != sb.end(); ++it) {
                if (!it.value().is_string()) rd.fail(path + ".source_bindings." + it.key(), "expected a string");
                c.source_bindings[it.key()] = it.value().get<std::string>();
            }
        }
        c.paper_ref = rd.text(item, "paper_ref", path, false);
        out.push_back(std::move(c));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Reports

namespace {

std::string fmt(const char* spec, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

}  // namespace

std::string format_text(const SuiteReport& report) {
    std::ostringstream out;
    char line[256];
    std::snprintf(line, sizeof line, "%-26s %16s %16s %11s %11s  %s\n", "claim", "lhs", "rhs", "rel_err", "claimed",
                  "result");
    out << line;
    for (const auto& r : report.results) {
        if (r.error) {
            std::snprintf(line, sizeof line, "%-26s %16s %16s %11s %11s  ERROR: ", r.claim_id.c_str(), "-", "-", "-",
                          fmt("%.2e", r.claimed_rel_err).c_str());
            out << line << *r.error << "\n";
            continue;
        }
        std::snprintf(line, sizeof line, "%-26s %16.6f %16.6f %11.3e %11.2e  %s\n", r.claim_id.c_str(), r.lhs_value,
                      r.rhs_value, r.rel_err, r.claimed_rel_err, r.pass ? "PASS" : "FAIL");
        out << line;
    }
    out << "summary: " << report.results.size() << " claims, " << report.passed << " passed, " << report.failed
        << " failed, " << report.errored << " errored\n";
    return out.str();
}

std::string format_csv(const SuiteReport& report) {
    std::ostringstream out;
    out << "id,lhs,rhs,rel_err,claimed,pass\n";
    for (const auto& r : report.results) {
        out << r.claim_id << ',';
        if (r.error) {
            out << ",,," << fmt("%.17g", r.claimed_rel_err) << ",false\n";
            continue;
        }
        out << fmt("%.17g", r.lhs_value) << ',' << fmt("%.17g", r.rhs_value) << ',' << fmt("%.17g", r.rel_err) << ','
            << fmt("%.17g", r.claimed_rel_err) << ',' << (r.pass ? "true" : "false") << '\n';
    }
    return out.str();
}

std::string format_json(const SuiteReport& report) {
    json results = json::array();
    for (const auto& r : report.results) {
        json j;
        j["claim_id"] = r.claim_id;
        j["lhs_value"] = r.lhs_value;
        j["rhs_value"] = r.rhs_value;
        j["rel_err"] = r.rel_err;
        j["claimed_rel_err"] = r.claimed_rel_err;
        j["pass"] = r.pass;
        j["margin"] = r.margin;
        j["error"] = r.error ? json(*r.error) : json(nullptr);
        results.push_back(std::move(j));
    }
    json doc;
    doc["results"] = std::move(results);
    doc["summary"] = {{"total", report.results.size()},
                      {"passed", report.passed},
                      {"failed", report.failed},
                      {"errored", report.errored}};
    return doc.dump(2) + "\n";
}

}  // namespace pyrageo::metrology
