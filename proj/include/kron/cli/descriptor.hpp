#pragma once

#include <string>

#include "json.hpp"
#include "kron/algebra/algebra.hpp"
#include "kron/errors.hpp"

namespace kron {

/// Malformed algebra descriptor (wrong shape, unknown key, bad constant).
class SchemaError : public InvalidInput {
 public:
  explicit SchemaError(const std::string& what) : InvalidInput("descriptor: " + what) {}
};

/// Base ring from {"kind": "int"|"rat"|"gf", "p", "r", "base_vars"}.
PolyRing parse_base(const nlohmann::ordered_json& base);

/// Builds the algebra described by a descriptor document. Shape errors raise
/// SchemaError; inconsistent structure constants raise InvalidInput from the
/// algebra module.
FiniteFreeAlgebra parse_descriptor(const nlohmann::ordered_json& doc);

FiniteFreeAlgebra load_descriptor(const std::string& path);

/// Reads a JSON file; SchemaError when it cannot be opened or parsed.
nlohmann::ordered_json read_json_file(const std::string& path);

}  // namespace kron
