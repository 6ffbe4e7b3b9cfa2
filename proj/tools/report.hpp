#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "berge5/berge.hpp"
#include "berge5/bound.hpp"
#include "berge5/decompose.hpp"
#include "berge5/extremal.hpp"
#include "berge5/h3_io.hpp"
#include "berge5/paths.hpp"
#include "berge5/structure.hpp"

namespace berge5::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kSchema = 1;
inline constexpr const char* kVersion = "1.0.0";

// FNV-1a, 64 bit, as 16 hex digits.
std::string digest(const std::string& bytes);

Json rational_json(const Rational& r);
Json triple_json(const Triple& t);
Json witness_json(const Hypergraph3& h, const BergeWitness& w);
Json report_json(const InequalityReport& r);
Json core_json(const CoreClass& c);
Json element_json(const DecompElement& e);
Json alpha_json(const AlphaStats& s);
Json claim6_json(const Claim6Report& r);
Json observation7_json(const Observation7Report& r);
Json bound_json(const BoundCurve& c);
Json search_json(const SearchResult& r);
Json hypergraph_json(const Hypergraph3& h);

// Envelope shared by every command: schema, tool version, command name.
Json envelope(const std::string& command);

// Adds `input` with path, digest, n and m (and labels when they are not
// the vertex ids).
void add_input(Json& j, const std::string& path, const std::string& bytes, const H3File& f);

}  // namespace berge5::cli
