/* SPDX-License-Identifier: Apache-2.0 */
#pragma once

#include "axioms.hpp"
#include "hom.hpp"
#include "solve.hpp"
#include "tropgeo.hpp"

#include <json.hpp>

namespace tropext::json_io {

using json = nlohmann::ordered_json;

/// Rationals and integers are written as strings so no precision is lost.
json to_json(const Rational& q);
json to_json(const GroupElem& g);
json to_json(const Vec2& v);
json to_json(const Cell2& c);
json to_json(const Series& s);
json to_json(const HPoly& p);
json to_json(const SeriesPoly& p);
json to_json(const NewtonCell& c);
json to_json(const Hyperfield& h, const RootRecord& r);

/// [[unit, level], [unit, level]] over the base field.
json to_json(const Hyperfield& base, const FinePoint& x);
json to_json(const Hyperfield& base, const FineComponent& c);
json to_json(const FineCurve& c);
json to_json(const TropCurve& c);
json to_json(const Hyperfield& base, const FineIntersection& fi);
json to_json(const Hyperfield& base, const HomotopyStart& hs);

json to_json(const AxiomReport& r);
json to_json(const MultBoundReport& r);
json to_json(const HomReport& r);
json to_json(const HarnessSummary& s);
json to_json(const HarnessCase& c);
json to_json(const Hyperfield& h, const RacResult& r);

}  // namespace tropext::json_io
