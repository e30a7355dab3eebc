#pragma once

#include <json.hpp>

#include "cadef/contraction/contraction.hpp"
#include "cadef/families/certificate.hpp"
#include "cadef/hochschild/hochschild.hpp"

namespace cadef::cli {

using Json = nlohmann::json;

inline constexpr const char* kSchemaVersion = "1.0";

Json to_json(const Rational& q);
Json to_json(const GeometricType& t);
Json to_json(const MapCheck& m);
Json to_json(const FiberCheck& c);
Json to_json(const CertEdge& e);
Json to_json(const Certificate& c);
Json to_json(const InvariantRecord& r);
Json to_json(const HochschildReport& r);
Json to_json(const Reproduction& r);
Json rules_json(const ncgb::RewritingSystem& sys);

}  // namespace cadef::cli
