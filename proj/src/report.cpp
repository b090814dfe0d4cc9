#include "partstab/report.hpp"

#include <set>
#include <sstream>

#include "partstab/presets.hpp"

namespace partstab {

namespace {

Expr expr_field(const json &rule, const char *key, const Expr &fallback)
{
    if (!rule.contains(key))
        return fallback;
    const json &v = rule.at(key);
    if (v.is_number_integer())
        return Expr::constant(v.get<long long>());
    if (v.is_string())
        return Expr::parse(v.get<std::string>());
    throw spec_error(std::string("rule field '") + key + "' must be a string or integer");
}

void reject_unknown(const json &obj, const std::set<std::string> &allowed, const std::string &where)
{
    if (!obj.is_object())
        throw spec_error(where + " must be a JSON object");
    for (const auto &item : obj.items())
        if (!allowed.count(item.key()))
            throw spec_error(where + ": unknown key '" + item.key() + "'");
}

FactorRule rule_from_json(const json &r)
{
    reject_unknown(r, {"a", "b", "c", "sign", "jmin", "jmax"}, "rule");
    FactorRule rule;
    rule.a = expr_field(r, "a", rule.a);
    rule.b = expr_field(r, "b", rule.b);
    rule.c = expr_field(r, "c", rule.c);
    if (r.contains("sign")) {
        if (!r["sign"].is_number_integer())
            throw spec_error("rule sign must be 1 or -1");
        rule.sign = r["sign"].get<int>();
    }
    if (r.contains("jmin")) {
        if (!r["jmin"].is_number_integer())
            throw spec_error("rule jmin must be an integer");
        rule.j_min = r["jmin"].get<long long>();
    }
    if (r.contains("jmax") && !r["jmax"].is_null()) {
        if (!r["jmax"].is_number_integer())
            throw spec_error("rule jmax must be an integer or null");
        rule.j_max = r["jmax"].get<long long>();
    }
    if (rule.sign != 1 && rule.sign != -1)
        throw spec_error("rule sign must be 1 or -1");
    return rule;
}

json value(const integer &v) { return v.get_str(); }

json optional_bool(const std::optional<bool> &b) { return b ? json(*b) : json(nullptr); }

template <class Poly>
json sequence_json(const PolynomialSequence<Poly> &seq)
{
    json out;
    out["name"] = seq.spec ? seq.spec->name : seq.provenance;
    out["order"] = seq.order;
    json polys = json::array();
    for (long n = 0; n <= seq.order; ++n)
        polys.push_back(coefficients_json(n, seq[n]));
    out["polys"] = std::move(polys);
    return out;
}

} // namespace

ProductSpec spec_from_json(const json &j)
{
    if (!j.is_object())
        throw spec_error("spec must be a JSON object");
    if (j.contains("preset")) {
        reject_unknown(j, {"preset", "m", "i"}, "spec");
        PresetParams params;
        for (const char *key : {"m", "i"})
            if (j.contains(key) && !j[key].is_number_integer())
                throw spec_error(std::string("preset parameter '") + key + "' must be an integer");
        if (j.contains("m"))
            params.m = j["m"].get<long>();
        if (j.contains("i"))
            params.i = j["i"].get<long>();
        if (!j["preset"].is_string())
            throw spec_error("preset must be a string");
        return make_preset(j["preset"].get<std::string>(), params);
    }
    reject_unknown(j, {"rules", "laurent", "name"}, "spec");
    if (!j.contains("rules") || !j["rules"].is_array() || j["rules"].empty())
        throw spec_error("spec needs a nonempty 'rules' array");
    ProductSpec spec;
    spec.name = j.value("name", std::string("custom"));
    if (j.contains("laurent")) {
        if (!j["laurent"].is_boolean())
            throw spec_error("'laurent' must be a boolean");
        spec.laurent = j["laurent"].get<bool>();
    }
    for (const auto &r : j["rules"])
        spec.rules.push_back(rule_from_json(r));
    return spec;
}

json spec_to_json(const ProductSpec &spec)
{
    json rules = json::array();
    for (const auto &r : spec.rules) {
        json jr;
        jr["a"] = r.a.text();
        jr["b"] = r.b.text();
        jr["c"] = r.c.text();
        jr["sign"] = r.sign;
        jr["jmin"] = r.j_min;
        jr["jmax"] = r.j_max ? json(*r.j_max) : json(nullptr);
        rules.push_back(std::move(jr));
    }
    json out;
    out["name"] = spec.name;
    out["rules"] = std::move(rules);
    out["laurent"] = spec.laurent;
    return out;
}

json to_json(const HypothesisCheck &h)
{
    json out;
    out["kind"] = std::string(to_string(h.kind));
    out["satisfied"] = h.satisfied;
    out["m"] = h.m ? json(*h.m) : json(nullptr);
    out["shift"] = h.shift ? json(*h.shift) : json(nullptr);
    json violations = json::array();
    for (const auto &v : h.violations)
        violations.push_back({{"rule", v.rule}, {"j", v.j}, {"b", v.b}, {"c", v.c}, {"reason", v.reason}});
    out["violations"] = std::move(violations);
    return out;
}

json to_json(const StabilizationReport &rep)
{
    json out;
    out["kind"] = rep.kind;
    out["m"] = rep.m ? json(*rep.m) : json(nullptr);
    out["certified"] = rep.certified;
    out["label"] = rep.label;
    out["n_min"] = rep.n_min;
    out["n_max"] = rep.n_max;
    out["identity_holds"] = rep.identity_holds;
    out["limit_match"] = optional_bool(rep.limit_match);
    out["bound_holds"] = optional_bool(rep.bound_holds);
    json checks = json::array();
    for (const auto &c : rep.checks)
        checks.push_back({{"name", c.name}, {"holds", c.holds}});
    out["checks"] = std::move(checks);
    json onsets = json::array();
    for (const auto &o : rep.onsets)
        onsets.push_back({{"n", o.n}, {"predicted", o.predicted}, {"empirical", o.empirical}});
    out["onsets"] = std::move(onsets);
    json witnesses = json::array();
    for (const auto &w : rep.witnesses)
        witnesses.push_back(
            {{"n", w.n}, {"k", w.k}, {"lhs", value(w.lhs)}, {"rhs", value(w.rhs)}, {"relation", w.relation}});
    out["witnesses"] = std::move(witnesses);
    out["violation_count"] = rep.violation_count;
    return out;
}

json to_json(const PowerSeries &s)
{
    json coeffs = json::array();
    for (const auto &c : s.coeffs)
        coeffs.push_back(value(c));
    return {{"order", s.order}, {"coeffs", std::move(coeffs)}};
}

json coefficients_json(long n, const ZPolynomial &p) { return coefficients_json(n, LaurentPolynomial(p)); }

json coefficients_json(long n, const LaurentPolynomial &p)
{
    json coeffs = json::array();
    for (long k = p.min_exp(); k <= p.max_exp(); ++k)
        if (p.coeff(k) != 0)
            coeffs.push_back({{"zexp", k}, {"value", value(p.coeff(k))}});
    return {{"n", n}, {"coeffs", std::move(coeffs)}};
}

json to_json(const ZSequence &seq) { return sequence_json(seq); }
json to_json(const LaurentSequence &seq) { return sequence_json(seq); }

std::string lambda_csv(const LambdaTable &table)
{
    std::ostringstream out;
    out << "n,k,value\n";
    for (std::size_t n = 0; n < table.rows.size(); ++n) {
        const ZPolynomial &row = table.rows[n];
        for (long k = 0; k <= row.degree(); ++k)
            if (row.coeff(k) != 0)
                out << n << ',' << k << ',' << row.coeff(k).get_str() << '\n';
    }
    return out.str();
}

} // namespace partstab
