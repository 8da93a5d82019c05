#pragma once

#include <string>

#include <json.hpp>

#include "shivar/root_system.hpp"
#include "shivar/shi_variety.hpp"

namespace shivar {

// Root-system document: family, rank, Cartan matrix, ordered positive roots
// as coordinate arrays, coroot table, index of connection.
nlohmann::json root_system_to_json(const RootSystem& rs);

// Rebuilds the named system and checks every table in the document against
// it. Throws InvalidTypeError / InvalidTupleError on any mismatch.
RootSystem root_system_from_json(const nlohmann::json& doc);

// Shi tuple with a header naming the type and the order of Phi+.
nlohmann::json shi_vector_to_json(const RootSystem& rs, const IntVector& entries);

// Parses a Shi tuple document, rebuilding the named root system and checking
// the header against it. Throws InvalidTupleError / InvalidTypeError.
IntVector shi_vector_from_json(const nlohmann::json& doc);

nlohmann::json component_table_to_json(const ComponentTable& table);
ComponentTable component_table_from_json(const nlohmann::json& doc);

// One row per admitted vector: id, the vector, finite representatives as
// words, and the orbit count.
std::string component_table_to_csv(const ComponentTable& table);

// Plain integer array -> tuple. Throws InvalidTupleError on malformed input.
IntVector tuple_from_json(const nlohmann::json& arr);
IntVector parse_tuple(const std::string& text);  // JSON array in a string

nlohmann::json tuple_to_json(const IntVector& v);

}  // namespace shivar
