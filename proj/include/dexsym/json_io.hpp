#pragma once

#include <json.hpp>

#include "dexsym/algebra.hpp"
#include "dexsym/dextral.hpp"
#include "dexsym/identities.hpp"
#include "dexsym/leavitt.hpp"
#include "dexsym/series.hpp"

namespace dexsym {

using json = nlohmann::ordered_json;

/// Algebra file format:
///   {"name": ..., "field": {"kind":"rational"} | {"kind":"prime","p":N},
///    "basis": [names...],
///    "products": [{"left":name,"right":name,"value":[[coeff,name],...]},...]}
/// Coefficients are canonical fraction strings ("a" or "a/b"); products not
/// listed are zero. Serialization is deterministic: products in row-major
/// basis order, value terms in basis order, zero products omitted.
json algebra_to_json(const AlgebraTable& A);
AlgebraTable algebra_from_json(const json& j);

/// Graph file format:
///   {"vertices": [names...], "edges": [{"name":..,"src":..,"rng":..},...]}
json graph_to_json(const DirectedGraph& g);
DirectedGraph graph_from_json(const json& j);

json field_to_json(const FieldSpec& f);
FieldSpec field_from_json(const json& j);

json vec_to_json(const Vec& v);
json witness_to_json(const AlgebraTable& A, const Witness& w);
json verdict_to_json(const AlgebraTable& A, const DextralVerdict& v);
json identity_report_to_json(const IdentityReport& r);
json series_to_json(const AlgebraTable& A, const SeriesTrace& t);
json classification_to_json(const DirectedGraph& g, const GraphClassification& c);

AlgebraTable load_algebra_file(const std::string& path);
DirectedGraph load_graph_file(const std::string& path);
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

/// FNV-1a digest of a byte string, as 16 hex characters.
std::string digest(const std::string& bytes);

}  // namespace dexsym
