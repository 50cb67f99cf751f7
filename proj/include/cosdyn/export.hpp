#pragma once

// JSON records for the CLI. Complex numbers are [re, im] pairs, curves are
// arrays of them.

#include <json.hpp>

#include "cosdyn/basins.hpp"
#include "cosdyn/puzzle.hpp"
#include "cosdyn/rays.hpp"
#include "cosdyn/render.hpp"
#include "cosdyn/renorm_escape.hpp"

namespace cosdyn {

using Json = nlohmann::ordered_json;

Json to_json(Complex z);
Json to_json(std::span<const Complex> line);
Json to_json(const CosineMap& m);
Json to_json(const Ray& r);
Json to_json(const LandingResult& l);
Json to_json(const OrbitClass& c);
Json to_json(const BasinCurve& c);
Json to_json(const PuzzleGraph& g);
Json to_json(const PuzzlePiece& p);
Json to_json(const RenormCandidate& c);
Json to_json(const EscapeCandidate& c);
Json to_json(const DiameterReport& r);
Json to_json(const ScanRow& r);

std::string to_string(OrbitKind k);

}  // namespace cosdyn
