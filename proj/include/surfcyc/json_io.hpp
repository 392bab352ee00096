#pragma once

#include <string>

#include <json.hpp>

#include "surfcyc/dataset.hpp"
#include "surfcyc/fatgraph.hpp"
#include "surfcyc/hyperbolic.hpp"
#include "surfcyc/necklace.hpp"

namespace surfcyc {

using json = nlohmann::json;

json to_json(const DataSet& d);          // canonical pair order
json to_json(const ValidationReport& r);
json to_json(const Necklace& nk);
json to_json(const FixDescriptor& f);
json to_json(const FatGraph& g);
json to_json(const GraphShape& s);
json to_json(const InducedSignature& sig);
json to_json(const FeasibilityReport& r);
json to_json(const IrreducibilityReport& r);
json to_json(const PolygonSpec& spec, const PolygonMetrics& m,
             const PairingWord& w, long long genus_check);

// Parsers throw DomainError(InvalidInput) on malformed documents.
DataSet data_set_from_json(const json& j);
Necklace necklace_from_json(const json& j);
FatGraph fat_graph_from_json(const json& j);

// File helpers (throw InvalidInput on IO or parse failure).
json load_json_file(const std::string& path);
DataSet data_set_from_file(const std::string& path);
Necklace necklace_from_file(const std::string& path);
FatGraph fat_graph_from_file(const std::string& path);

// Compact or indented dump with a trailing newline; keys are emitted in
// sorted order, so equal values always produce identical bytes.
std::string dump_json(const json& j, bool pretty);

} // namespace surfcyc
