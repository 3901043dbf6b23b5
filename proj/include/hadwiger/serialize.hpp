#pragma once

#include "hadwiger/coloring.hpp"
#include "hadwiger/minors.hpp"

#include <json.hpp>

namespace hadwiger {

using Json = nlohmann::ordered_json;

/// {"parts": [[ids]]}
Json to_json(const MinorCertificate& cert);
MinorCertificate minor_certificate_from_json(const Json& j);

/// {"branch": [ids], "paths": {"u-v": [ids]}}
Json to_json(const SubdivisionCertificate& cert);
SubdivisionCertificate subdivision_certificate_from_json(const Json& j);

/// {"colors": [c_0, ..., c_{n-1}]}
Json to_json(const Coloring& coloring);
Coloring coloring_from_json(const Json& j);

} // namespace hadwiger
