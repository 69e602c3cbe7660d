#pragma once

#include <string>

#include "npls/interpolation.hpp"
#include "npls/lsystem.hpp"

namespace npls {

// {"nodes":[{"re":..,"im":..},...],"values":[...]} ; values optional.
// Throws ParseError on malformed input, then validates.
InterpolationData data_from_json(const std::string& text);

std::string data_to_json(const InterpolationData& data);

// {"form":"...","T":[[{re,im},..],..],"K":[..],"metric":null|[[..]]} with
// optional "source_nodes". Matrix entries carry 17 significant digits so the
// round trip is bit-exact.
std::string lsystem_to_json(const LSystem& sys);

LSystem lsystem_from_json(const std::string& text);

} // namespace npls
