#pragma once

#include "hcyl/diagram.hpp"
#include "hcyl/johnson.hpp"
#include "hcyl/nc_series.hpp"
#include "hcyl/stack_algebra.hpp"

#include <json.hpp>

namespace hcyl {

using Json = nlohmann::ordered_json;

// Generator indices are 1-based in every JSON form; coefficients are exact
// rationals written as decimal strings "p" or "p/q".

Json to_json(const NcSeries& s);
Json to_json(const LieElement& u);
Json to_json(const HTensorLie& t);
Json to_json(const Diagram& d);
Json to_json(const DiagramSum& s);
Json to_json(const FreeEndo& h);
Json to_json(const StackingForm& s);
Json to_json(const LcsWeight& w);

HTensorLie tensor_from_json(const Json& j, int rank);
RawDiagram diagram_from_json(const Json& j);
DiagramSum diagram_sum_from_json(const Json& j);
FreeEndo endo_from_json(const Json& j);
StackingForm stacking_from_json(const Json& j, int genus);

/// Linear combination of tripods, e.g. "Y(x1,x2,y2) - 2*Y(y1,x2,y2)"; legs
/// are listed clockwise. Throws Error(syntax) with the position.
DiagramSum parse_tripod_sum(std::string_view text, int rank);

/// "g1(x)[g1,g2] - 1/2*g2(x)[g1,[g1,g2]]": sum of (generator)(x)(bracket).
HTensorLie parse_tensor(std::string_view text, int rank);

} // namespace hcyl
