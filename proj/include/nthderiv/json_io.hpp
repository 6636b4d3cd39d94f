#pragma once

#include "nthderiv/identities.hpp"
#include "nthderiv/jets.hpp"
#include "nthderiv/partitions.hpp"
#include "nthderiv/special.hpp"

#include <json.hpp>

namespace nthderiv {

// Field order is fixed, so serialized output is byte-stable across runs.
using Json = nlohmann::ordered_json;

// {"n": n, "mult": [y_1, ..., y_n]}
Json to_json(const Partition& p);
Partition partition_from_json(const Json& j);

// {"order": n, "d": ["p/q", ...]}
Json to_json(const DerivativeJet& jet);
DerivativeJet jet_from_json(const Json& j);

// {"name": ..., "params": {...}, "lhs": "p/q", "rhs": "p/q", "holds": bool}
Json to_json(const IdentityReport& report);
IdentityReport identity_report_from_json(const Json& j);

// {"n": n, "a": {"2": "p/q", ...}}
Json to_json(const LogReciprocalExpansion& expansion);
LogReciprocalExpansion log_expansion_from_json(const Json& j);

}  // namespace nthderiv
