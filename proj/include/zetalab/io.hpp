// JSON serialization of every file-facing type.  Field names are fixed by
// docs/formats.md; summaries use ordered keys so identical runs emit
// byte-identical records.
#pragma once

#include <string>

#include <json.hpp>

#include "zetalab/collection.hpp"
#include "zetalab/euler_product.hpp"
#include "zetalab/moments.hpp"
#include "zetalab/relation.hpp"
#include "zetalab/scanner.hpp"
#include "zetalab/smoothing.hpp"

namespace zetalab {

using Json = nlohmann::ordered_json;

Json complex_to_json(const Complex& z);
Complex complex_from_json(const Json& j);

Json to_json(const PeriodicSequence& seq);
PeriodicSequence sequence_from_json(const Json& j);

Json to_json(const EulerProductSpec& spec);
EulerProductSpec spec_from_json(const Json& j);

Json to_json(const Differences& d);
Differences differences_from_json(const Json& j);

Json to_json(const HurwitzCollection& collection);
HurwitzCollection collection_from_json(const Json& j);

// Canonical compact form: seed plus bounds (angles are reproducible).
Json torus_point_to_json(std::uint64_t seed, std::uint32_t p_max, std::uint32_t m_max,
                         std::size_t groups);

Json to_json(const StripRegion& region);
StripRegion strip_from_json(const Json& j);

Json to_json(const GridShape& shape);
GridShape shape_from_json(const Json& j);

Json grid_config_to_json(const CompactSetGrid& grid);
CompactSetGrid grid_from_json(const Json& j);  // rebuilds the lattice

Json to_json(const TargetFunction& target);
TargetFunction target_from_json(const Json& j, const CompactSetGrid* grid = nullptr);

Json to_json(const AdmissibilityOptions& options);
AdmissibilityOptions admissibility_options_from_json(const Json& j);

Json to_json(const ScanConfig& config);
ScanConfig scan_config_from_json(const Json& j);

Json to_json(const RelationReport& report);
Json to_json(const AdmissibilityReport& report);
Json to_json(const MomentReport& report);
Json scan_summary_to_json(const ScanResult& result);
Json to_json(const Histogram& hist);

Json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const Json& j);

}  // namespace zetalab
