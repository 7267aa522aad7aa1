#include "kron/cli/descriptor.hpp"

#include <fstream>
#include <set>

#include "kron/algebra/constructors.hpp"
#include "kron/ringkit/domain.hpp"

namespace kron {

using nlohmann::ordered_json;

namespace {

void only_keys(const ordered_json& obj, const std::string& where, const std::set<std::string>& allowed) {
  if (!obj.is_object()) throw SchemaError(where + " must be an object");
  for (const auto& [key, value] : obj.items())
    if (!allowed.count(key)) throw SchemaError(where + ": unknown key \"" + key + "\"");
}

const ordered_json& required(const ordered_json& obj, const std::string& where, const std::string& key) {
  if (!obj.contains(key)) throw SchemaError(where + ": missing \"" + key + "\"");
  return obj.at(key);
}

std::uint64_t positive_int(const ordered_json& v, const std::string& what) {
  if (!v.is_number_integer() || v.get<long long>() < 1) throw SchemaError(what + " must be a positive integer");
  return v.get<std::uint64_t>();
}

MultiPoly constant(const ordered_json& v, const PolyRing& ring, const std::string& what) {
  if (v.is_number_integer()) return MultiPoly::parse(ring, v.dump());
  if (v.is_string()) {
    try {
      return MultiPoly::parse(ring, v.get<std::string>());
    } catch (const std::exception& e) {
      throw SchemaError(what + ": " + e.what());
    }
  }
  throw SchemaError(what + " must be an integer or a string");
}

std::vector<MultiPoly> constants(const ordered_json& v, const PolyRing& ring, const std::string& what,
                                 std::size_t expected) {
  if (!v.is_array() || v.size() != expected)
    throw SchemaError(what + " must be an array of " + std::to_string(expected) + " constants");
  std::vector<MultiPoly> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(constant(v[i], ring, what + "[" + std::to_string(i) + "]"));
  return out;
}

FiniteFreeAlgebra parse_presentation(const ordered_json& pres, const PolyRing& base, const std::string& label);

FiniteFreeAlgebra relabel(const FiniteFreeAlgebra& b, const std::string& label) {
  if (label.empty() || label == b.label()) return b;
  FiniteFreeAlgebra::Options opts{b.basis_names(), b.monogenic(), b.factors(), label};
  return FiniteFreeAlgebra(b.base(), b.rank(), b.table(), b.unit(), std::move(opts));
}

FiniteFreeAlgebra parse_factor(const ordered_json& f, const PolyRing& base, std::size_t i) {
  const std::string where = "factors[" + std::to_string(i) + "]";
  if (f.is_object() && f.contains("presentation")) {
    only_keys(f, where, {"schema", "label", "base", "presentation"});
    if (f.contains("base") && !(parse_base(f.at("base")) == base))
      throw SchemaError(where + ": base differs from the product's base");
    return relabel(parse_presentation(f.at("presentation"), base, ""), f.value("label", ""));
  }
  return parse_presentation(f, base, "");
}

FiniteFreeAlgebra parse_presentation(const ordered_json& pres, const PolyRing& base, const std::string& label) {
  if (!pres.is_object()) throw SchemaError("presentation must be an object");
  const auto& kind_v = required(pres, "presentation", "kind");
  if (!kind_v.is_string()) throw SchemaError("presentation.kind must be a string");
  const std::string kind = kind_v.get<std::string>();

  if (kind == "monogenic") {
    only_keys(pres, "monogenic", {"kind", "coeffs"});
    const auto& c = required(pres, "monogenic", "coeffs");
    if (!c.is_array() || c.empty()) throw SchemaError("monogenic.coeffs must be a nonempty array");
    return from_monogenic(base, constants(c, base, "monogenic.coeffs", c.size()), label);
  }
  if (kind == "structure_constants") {
    only_keys(pres, "structure_constants", {"kind", "rank", "table", "unit", "basis_names"});
    const std::size_t n = positive_int(required(pres, "structure_constants", "rank"), "structure_constants.rank");
    const auto& t = required(pres, "structure_constants", "table");
    if (!t.is_array() || t.size() != n) throw SchemaError("structure_constants.table must be an n x n x n array");
    std::vector<MultiPoly> table;
    for (std::size_t i = 0; i < n; ++i) {
      if (!t[i].is_array() || t[i].size() != n) throw SchemaError("structure_constants.table must be an n x n x n array");
      for (std::size_t j = 0; j < n; ++j) {
        auto row = constants(t[i][j], base, "table[" + std::to_string(i) + "][" + std::to_string(j) + "]", n);
        for (auto& x : row) table.push_back(std::move(x));
      }
    }
    auto unit = constants(required(pres, "structure_constants", "unit"), base, "structure_constants.unit", n);
    FiniteFreeAlgebra::Options opts;
    opts.label = label;
    if (pres.contains("basis_names")) {
      const auto& names = pres.at("basis_names");
      if (!names.is_array() || names.size() != n) throw SchemaError("basis_names must list n strings");
      for (const auto& s : names) {
        if (!s.is_string()) throw SchemaError("basis_names must list n strings");
        opts.basis_names.push_back(s.get<std::string>());
      }
    }
    return FiniteFreeAlgebra(base, n, std::move(table), std::move(unit), std::move(opts));
  }
  if (kind == "diagonal") {
    only_keys(pres, "diagonal", {"kind", "n"});
    return diagonal(base, positive_int(required(pres, "diagonal", "n"), "diagonal.n"));
  }
  if (kind == "product") {
    only_keys(pres, "product", {"kind", "factors"});
    const auto& fs = required(pres, "product", "factors");
    if (!fs.is_array() || fs.size() < 2) throw SchemaError("product.factors must list at least two algebras");
    std::vector<FiniteFreeAlgebra> factors;
    for (std::size_t i = 0; i < fs.size(); ++i) factors.push_back(parse_factor(fs[i], base, i));
    return product(factors);
  }
  if (kind == "biquadratic") {
    only_keys(pres, "biquadratic", {"kind", "variant"});
    const auto& v = required(pres, "biquadratic", "variant");
    if (v == "nilpotent") return biquadratic_nilpotent(base);
    if (v == "radicial") return biquadratic_radicial(base);
    throw SchemaError("biquadratic.variant must be \"nilpotent\" or \"radicial\"");
  }
  if (kind == "order") {
    only_keys(pres, "order", {"kind", "coeffs", "basis"});
    if (base.domain().kind() != DomainKind::integers || base.nvars() != 0)
      throw SchemaError("order presentations require the base \"int\" without variables");
    const auto& c = required(pres, "order", "coeffs");
    if (!c.is_array() || c.empty()) throw SchemaError("order.coeffs must be a nonempty array of integers");
    std::vector<long> low;
    for (const auto& x : c) {
      if (!x.is_number_integer()) throw SchemaError("order.coeffs must be a nonempty array of integers");
      low.push_back(x.get<long>());
    }
    const auto& bs = required(pres, "order", "basis");
    if (!bs.is_array() || bs.size() != low.size()) throw SchemaError("order.basis must list n vectors");
    std::vector<std::vector<mpq_class>> basis;
    for (const auto& vec : bs) {
      if (!vec.is_array() || vec.size() != low.size()) throw SchemaError("order.basis vectors must have n entries");
      std::vector<mpq_class> row;
      for (const auto& x : vec) {
        if (!x.is_number_integer() && !x.is_string()) throw SchemaError("order.basis entries must be integers or fractions");
        try {
          mpq_class q(x.is_string() ? x.get<std::string>() : x.dump());
          q.canonicalize();
          row.push_back(q);
        } catch (const std::exception&) {
          throw SchemaError("order.basis entry " + x.dump() + " is not a fraction");
        }
      }
      basis.push_back(std::move(row));
    }
    return order_from_basis(low, basis, label);
  }
  throw SchemaError("unknown presentation kind \"" + kind + "\"");
}

}  // namespace

PolyRing parse_base(const ordered_json& base) {
  only_keys(base, "base", {"kind", "p", "r", "base_vars"});
  const auto& kind_v = required(base, "base", "kind");
  if (!kind_v.is_string()) throw SchemaError("base.kind must be a string");
  const std::string kind = kind_v.get<std::string>();
  std::vector<std::string> vars;
  if (base.contains("base_vars")) {
    const auto& vs = base.at("base_vars");
    if (!vs.is_array()) throw SchemaError("base.base_vars must be an array of names");
    for (const auto& v : vs) {
      if (!v.is_string() || v.get<std::string>().empty()) throw SchemaError("base.base_vars must be an array of names");
      const std::string name = v.get<std::string>();
      if (name[0] == 'T' || name == "w") throw SchemaError("base variable name \"" + name + "\" is reserved");
      vars.push_back(name);
    }
  }
  if (kind == "int" || kind == "rat") {
    if (base.contains("p") || base.contains("r")) throw SchemaError("base." + kind + " takes no p or r");
    return PolyRing(kind == "int" ? Domain::integers() : Domain::rationals(), vars);
  }
  if (kind == "gf") {
    const std::uint64_t p = positive_int(required(base, "base", "p"), "base.p");
    if (!is_prime(p)) throw SchemaError("base.p must be prime");
    const std::uint64_t r = base.contains("r") ? positive_int(base.at("r"), "base.r") : 1;
    if (r > 32) throw SchemaError("base.r is too large");
    return PolyRing(r == 1 ? Domain::prime_field(p) : Domain::galois_field(p, static_cast<unsigned>(r)), vars);
  }
  throw SchemaError("base.kind must be \"int\", \"rat\" or \"gf\"");
}

FiniteFreeAlgebra parse_descriptor(const ordered_json& doc) {
  only_keys(doc, "descriptor", {"schema", "label", "base", "presentation"});
  if (doc.contains("schema") && doc.at("schema") != "algebra-descriptor.v1")
    throw SchemaError("unsupported schema " + doc.at("schema").dump());
  if (doc.contains("label") && !doc.at("label").is_string()) throw SchemaError("label must be a string");
  const PolyRing base = parse_base(required(doc, "descriptor", "base"));
  return relabel(parse_presentation(required(doc, "descriptor", "presentation"), base, ""), doc.value("label", ""));
}

ordered_json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open " + path);
  try {
    return ordered_json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError(path + ": " + e.what());
  }
}

FiniteFreeAlgebra load_descriptor(const std::string& path) { return parse_descriptor(read_json_file(path)); }

}  // namespace kron
