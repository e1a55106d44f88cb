/*
   Copyright 2026 zetalab developers

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "json_io.hpp"

#include "errors.hpp"

namespace zetalab {

json value_json(const BigReal& v, long requested_bits) {
    json j;
    j["decimal"] = v.to_decimal();
    if (v.is_exact())
        j["error_log2"] = nullptr;
    else
        j["error_log2"] = v.error_exp();
    j["precision_bits"] = requested_bits;
    return j;
}

json value_json(const BigComplex& v, long requested_bits) {
    json j;
    j["real"] = value_json(v.real(), requested_bits);
    j["imag"] = value_json(v.imag(), requested_bits);
    return j;
}

json periodic_json(const PeriodicFunction& f) {
    json vals = json::array();
    for (const auto& v : f.values) vals.push_back(v.to_string());
    return json{{"period", f.period}, {"values", vals}};
}

PeriodicFunction periodic_from_json(const json& j) {
    if (!j.is_object() || !j.contains("period") || !j.contains("values"))
        throw InvalidArgument("periodic function JSON needs {period, values}");
    long q = j.at("period").get<long>();
    std::vector<Rational> vals;
    for (const auto& e : j.at("values")) {
        if (e.is_number_integer())
            vals.push_back(Rational(e.get<long>()));
        else
            vals.push_back(Rational::from_string(e.get<std::string>()));
    }
    return PeriodicFunction(q, std::move(vals));
}

json cyclotomic_json(const CyclotomicNumber& x) {
    json coeffs = json::array();
    for (const auto& c : x.coefficients()) coeffs.push_back(c.to_string());
    return json{{"conductor", x.conductor()},
                {"coefficients", coeffs},
                {"pretty", x.to_string()}};
}

json character_json(const DirichletCharacter& chi) {
    const UnitGroup& g = chi.group();
    return json{{"modulus", g.modulus},
                {"generators", g.generators},
                {"orders", g.orders},
                {"images", chi.images()},
                {"exponent", g.exponent},
                {"order", chi.order()},
                {"conductor", chi.conductor()},
                {"primitive", chi.is_primitive()},
                {"odd", chi.is_odd()},
                {"principal", chi.is_principal()}};
}

DirichletCharacter character_from_json(const json& j) {
    if (!j.is_object() || !j.contains("modulus") || !j.contains("images"))
        throw InvalidArgument("character JSON needs {modulus, images}");
    long q = j.at("modulus").get<long>();
    auto g = UnitGroup::get(q);
    std::vector<long> images = j.at("images").get<std::vector<long>>();
    return DirichletCharacter(g, std::move(images));
}

json identity_report_json(const IdentityReport& r) {
    json j;
    j["name"] = r.name;
    j["params"] = r.params;
    j["mode"] = r.exact_mode ? "exact" : "numeric";
    if (r.exact_mode) {
        j["residual_log2"] = nullptr;
        j["exact_zero"] = r.exact_zero;
    } else {
        long u = r.residual ? r.residual->upper_mag() : BigReal::kExact;
        if (u == BigReal::kExact)
            j["residual_log2"] = nullptr;
        else
            j["residual_log2"] = u;
        j["tolerance_log2"] = r.tolerance_exp;
    }
    j["verdict"] = r.pass ? "pass" : "fail";
    j["precision_bits"] = r.precision_bits;
    if (!r.detail.empty()) j["detail"] = r.detail;
    return j;
}

json relation_report_json(const RelationReport& r) {
    json j;
    j["labels"] = r.labels;
    j["outcome"] = r.relation_found ? "relation_found" : "no_relation_certificate";
    if (r.relation_found) {
        json cs = json::array();
        for (const auto& c : r.coefficients) cs.push_back(c.get_str());
        j["coefficients"] = cs;
    }
    if (r.verified_residual) {
        long u = r.verified_residual->upper_mag();
        j["residual_log2"] = (u == BigReal::kExact) ? json(nullptr) : json(u);
    }
    j["height_bound"] = r.height_bound;
    j["precision_bits"] = r.precision_bits;
    j["confirmation_precision_bits"] = r.confirmation_bits;
    if (!r.certificate.empty()) j["certificate"] = r.certificate;
    return j;
}

json dimension_evidence_json(const DimensionEvidence& e) {
    json j;
    j["space"] = e.space;
    j["params"] = e.params;
    j["labels"] = e.labels;
    json searches = json::array();
    for (const auto& s : e.searches) searches.push_back(relation_report_json(s));
    j["searches"] = searches;
    json rels = json::array();
    for (const auto& r : e.relations) {
        json row = json::array();
        for (const auto& c : r) row.push_back(c.get_str());
        rels.push_back(row);
    }
    j["relations_found"] = rels;
    j["evidence_dimension"] = e.evidence_dimension;
    if (e.proven_lower_bound > 0) j["proven_lower_bound"] = e.proven_lower_bound;
    if (e.upper_bound > 0) j["upper_bound"] = e.upper_bound;
    j["consistent"] = e.consistent;
    if (e.degenerate) j["degenerate_set"] = true;
    if (e.space == "okada") j["relation_in_theorem_set"] = e.relation_in_theorem_set;
    return j;
}

}  // namespace zetalab
