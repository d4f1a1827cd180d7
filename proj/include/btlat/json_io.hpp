#pragma once

#include <string>

#include <json.hpp>

#include "btlat/affine.hpp"
#include "btlat/covers.hpp"
#include "btlat/parahoric.hpp"
#include "btlat/wonderful.hpp"

namespace btlat {

using nlohmann::json;

json coweight_json(const Coweight& theta);
Coweight parse_coweight(const std::string& csv, int rank);

json rootsys_json(const RootSystem& rs);
json alcove_json(const RootSystem& rs);
json lattice_json(const RootSystem& rs, const ParahoricLattice& lat);
json lattice_json(const RootSystem& rs, const AffineParahoricLattice& lat);
json orbit_json(const OrbitPoset& poset);
json bundle_json(const RootSystem& rs, const MultidegreeBundle& bundle);
json restrict_json(const RootSystem& rs, const CurveDatum& c);
json building_json(const BuildingGraph& graph);
json covers_json(const RootSystem& rs, const Coweight& theta);

std::string orbit_dot(const OrbitPoset& poset);
std::string building_dot(const BuildingGraph& graph);

} // namespace btlat
