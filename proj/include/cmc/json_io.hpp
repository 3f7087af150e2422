#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "cmc/cherednik.hpp"
#include "cmc/corresp.hpp"
#include "cmc/crossed.hpp"
#include "cmc/quiver.hpp"
#include "cmc/repvar.hpp"
#include "cmc/sra.hpp"
#include "cmc/wreath.hpp"

namespace cmc {

using json = nlohmann::json;

/// Malformed or inconsistent JSON input.
class JsonError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

json to_json(const Scalar& s);
json to_json(const Matrix& a);
json to_json(const Quiver& q);
json to_json(const NCElement& e);
json to_json(const CMPoint& p);
json to_json(const FramedRep& r);
json to_json(const WreathElement& g);
json to_json(const IdealModel& model);
json to_json(const TauModel& model);
json to_json(const HModule& V);
json to_json(const ThetaReport& r);
json crossed_to_json(const CrossedAlgebra& A, const PBWElement& e);
json sra_to_json(const SRAAlgebra& H, const PBWElement& e);

Scalar scalar_from_json(const json& j);
Matrix matrix_from_json(const json& j);
Quiver quiver_from_json(const json& j);
NCElement ncelement_from_json(const json& j, int m);
CMPoint cmpoint_from_json(const json& j);
FramedRep framed_from_json(const json& j);
WreathElement wreath_from_json(const json& j);
IdealModel ideal_model_from_json(const json& j);
HModule hmodule_from_json(const json& j);
PBWElement crossed_from_json(const CrossedAlgebra& A, const json& j);
PBWElement sra_from_json(const SRAAlgebra& H, const json& j);

/// Canonical text form (sorted keys, two-space indent, trailing newline).
std::string dump(const json& j);
json load_file(const std::string& path);
/// Writes through a temporary file and renames it into place.
void save_file(const std::string& path, const json& j);

}  // namespace cmc
