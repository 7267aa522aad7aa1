#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

namespace kron {

enum class Verdict { pass, fail, error };
enum class Grade { proof, evidence };

std::string to_string(Verdict v);
std::string to_string(Grade g);

/// Machine-readable outcome of one verification. Witnesses are kept in
/// insertion order so the serialized form is stable.
struct VerificationReport {
  std::string check;
  std::string algebra_hash;
  std::optional<std::uint64_t> prime;
  Verdict verdict = Verdict::pass;
  Grade grade = Grade::proof;
  std::vector<std::pair<std::string, std::string>> witnesses;
  std::vector<std::string> notes;

  bool passed() const { return verdict == Verdict::pass; }
  void witness(std::string name, std::string value) { witnesses.emplace_back(std::move(name), std::move(value)); }
  /// Value of the first witness with this name, or empty.
  std::string find(std::string_view name) const;
  nlohmann::ordered_json to_json() const;
};

/// 64-bit FNV-1a digest of a canonical description, as 16 hex digits.
std::string fnv1a_hex(std::string_view text);

}  // namespace kron
