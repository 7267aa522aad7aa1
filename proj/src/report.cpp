#include "kron/report.hpp"

#include <cstdio>

namespace kron {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    case Verdict::error:
      return "error";
  }
  return {};
}

std::string to_string(Grade g) { return g == Grade::proof ? "proof" : "evidence"; }

std::string VerificationReport::find(std::string_view name) const {
  for (const auto& [k, v] : witnesses) {
    if (k == name) return v;
  }
  return {};
}

nlohmann::ordered_json VerificationReport::to_json() const {
  nlohmann::ordered_json j;
  j["check"] = check;
  j["algebra"] = algebra_hash;
  j["prime"] = prime ? nlohmann::ordered_json(*prime) : nlohmann::ordered_json(nullptr);
  j["verdict"] = to_string(verdict);
  j["grade"] = to_string(grade);
  auto w = nlohmann::ordered_json::array();
  for (const auto& [k, v] : witnesses) w.push_back({{"name", k}, {"value", v}});
  j["witnesses"] = std::move(w);
  j["notes"] = notes;
  return j;
}

std::string fnv1a_hex(std::string_view text) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace kron
