#pragma once

/*
 * JSON documents for SpaceModel.
 *
 *   {
 *     "name": "Bl(P3)",
 *     "dim": 3,
 *     "basis": ["pi*H", "E"],
 *     "top_form": {"3,0": "1/1", "2,1": "0/1", ...},
 *     "canonical": [-4, 1],
 *     "curves": [{"name": "ell", "pairings": ["0/1", "-1/1"]}]
 *   }
 *
 * Rationals are written as "p/q" strings; the reader also takes integer
 * shorthand ("3", or a JSON integer). Floats are rejected.
 */

#include <string>

#include <json.hpp>

#include "moishezon/intersection.hpp"

namespace moishezon {

nlohmann::json rational_to_json(const Rational& r);
/// Throws SchemaError naming `field` on anything that is not an exact rational.
Rational rational_from_json(const nlohmann::json& j, const std::string& field);

nlohmann::json space_to_json(const SpaceModel& space);
SpaceModel space_from_json(const nlohmann::json& j);

std::string serialize_space(const SpaceModel& space);
/// Parses a document; syntax errors report the line, schema errors the field.
SpaceModel parse_space(const std::string& text);
SpaceModel parse_space_file(const std::string& path);

}  // namespace moishezon
