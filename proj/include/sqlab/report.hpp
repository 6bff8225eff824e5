#pragma once

#include "sqlab/loop_homology.hpp"
#include "sqlab/secondary.hpp"

#include <json.hpp>

#include <string>

namespace sqlab {

using Json = nlohmann::ordered_json;

inline constexpr int json_schema_version = 1;

Json to_json(const Factorization& f);
Json to_json(const BoundReport& r);
Json to_json(const TheoremOneReport& r);
Json to_json(const DistinguishReport& r);

std::string to_text(const BoundReport& r);
std::string to_text(const TheoremOneReport& r);
std::string to_text(const DistinguishReport& r);

}  // namespace sqlab
