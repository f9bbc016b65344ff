// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#pragma once

#include <string>

#include <json.hpp>

#include "wielandt/superop.hpp"
#include "wielandt/verdict.hpp"

namespace wielandt {

using Json = nlohmann::json;

// Row-major nested arrays with [re, im] entries.
Json matrix_to_json(const CMat& m);
CMat matrix_from_json(const Json& j);

// Map files: {"dim": D, "repr": "kraus"|"choi"|"natural",
// "matrices": ..., "metadata": {...}}. "matrices" holds a list of
// matrices for "kraus" and a single matrix otherwise. Unknown metadata
// keys pass through untouched.
Json map_to_json(const SuperOp& phi, Json metadata = Json::object());
SuperOp map_from_json(const Json& j);

SuperOp read_map_file(const std::string& path);
void write_map_file(const std::string& path, const SuperOp& phi,
                    Json metadata = Json::object());

Json verdict_to_json(const Verdict& v);

}  // namespace wielandt
