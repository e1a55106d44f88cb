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

#pragma once

#include <string>

#include "json.hpp"

#include "bigreal.hpp"
#include "characters.hpp"
#include "cyclotomic.hpp"
#include "identities.hpp"
#include "periodic.hpp"
#include "relations.hpp"

namespace zetalab {

using nlohmann::json;

/* numeric value with its guarantee: {decimal, error_log2, precision_bits} */
json value_json(const BigReal& v, long requested_bits);
json value_json(const BigComplex& v, long requested_bits);

/* {"period": q, "values": ["p/q", ...]} */
json periodic_json(const PeriodicFunction& f);
PeriodicFunction periodic_from_json(const json& j);

/* {"conductor": n, "coefficients": ["p/q", ...], "pretty": "..."} */
json cyclotomic_json(const CyclotomicNumber& x);

/* {modulus, generators, orders, images, ...} */
json character_json(const DirichletCharacter& chi);
DirichletCharacter character_from_json(const json& j);

json identity_report_json(const IdentityReport& r);
json relation_report_json(const RelationReport& r);
json dimension_evidence_json(const DimensionEvidence& e);

}  // namespace zetalab
