#pragma once

#include <string>

#include <json.hpp>

#include "grodiag/bottleneck.hpp"
#include "grodiag/complex.hpp"
#include "grodiag/diagram.hpp"
#include "grodiag/interleave.hpp"
#include "grodiag/pmodule.hpp"

namespace grodiag::io {

using nlohmann::json;

inline constexpr const char* kFormatVersion = "grodiag-v1";

json group_element_to_json(const GroupElement& e);
GroupElement group_element_from_json(const json& j);

json module_to_json(const ConstructibleModule& m);
ConstructibleModule module_from_json(const json& j);

json diagram_to_json(const PersistenceDiagram& d);
PersistenceDiagram diagram_from_json(const json& j);

json matching_to_json(const Matching& m);
Matching matching_from_json(const json& j);

json complex_to_json(const FilteredComplex& k);
FilteredComplex complex_from_json(const json& j);

// comparison maps need the two modules for endpoint shapes
json interleaving_to_json(const InterleavingData& d);
InterleavingData interleaving_from_json(const json& j, const ConstructibleModule& f,
                                        const ConstructibleModule& g);

json load_json_file(const std::string& path);
// write temp file in the same directory, then rename
void write_json_file(const std::string& path, const json& j);

} // namespace grodiag::io
