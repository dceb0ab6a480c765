#pragma once

#include <nlohmann/json.hpp>

#include "schubnef/cones.hpp"
#include "schubnef/hilbscheme.hpp"
#include "schubnef/qpolynomial.hpp"
#include "schubnef/schubring.hpp"

namespace schubnef {

// Insertion-ordered JSON keeps the serialized key order fixed, which together
// with the canonical orders of the types makes every output byte-deterministic.
using Json = nlohmann::ordered_json;

Json to_json(const Partition& p);                  // [6,6,6,3]
Partition partition_from_json(const Json& j);

Json to_json(const SchubertExpansion& e);          // [{"partition":[...],"coeff":n},...]
SchubertExpansion expansion_from_json(const Json& j);

Json to_json(const QPolynomial& p);                // {"coeffs":[["num","den"],...]}
QPolynomial qpolynomial_from_json(const Json& j);

Json to_json(const RationalCone& c);               // {"dim":r,"generators":[[...],...]}
RationalCone cone_from_json(const Json& j);

Json to_json(const PairingMatrix& p);
PairingMatrix pairing_from_json(const Json& j);

Json to_json(const HilbParams& p);                 // {"d":..,"m":..,"k":..,"n":..}
HilbParams params_from_json(const Json& j);

Json to_json(const ComponentDescription& c);
ComponentDescription component_from_json(const Json& j, int sym_degree);

Json to_json(const NefConeReport& r);
NefConeReport report_from_json(const Json& j);

Json to_json(const VerificationRecord& r);

/// Renders with a fixed layout (2-space indent, trailing newline).
std::string dump(const Json& j);

}  // namespace schubnef
