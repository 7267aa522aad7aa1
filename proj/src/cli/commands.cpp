#include "kron/cli/commands.hpp"

#include <chrono>
#include <cstdlib>
#include <sstream>

#include "kron/cli/descriptor.hpp"
#include "kron/fibers/comaximal.hpp"
#include "kron/fibers/fibers.hpp"
#include "kron/hilbert/hilbert.hpp"
#include "kron/kronecker/irreducibility.hpp"
#include "kron/kronecker/kronecker.hpp"
#include "kron/ringkit/integers.hpp"

namespace kron {

using nlohmann::ordered_json;

namespace {

struct Outcome {
  int exit_code = kExitOk;
  ordered_json results;
  std::ostringstream text;
};

std::string ring_name(const PolyRing& r) {
  std::string out = r.domain().name();
  if (r.nvars()) {
    out += "[";
    for (std::size_t i = 0; i < r.nvars(); ++i) out += (i ? "," : "") + r.variable(i);
    out += "]";
  }
  return out;
}

std::string field_label(const Domain& d) {
  if (d.kind() == DomainKind::extension_field)
    return "GF(" + std::to_string(d.characteristic()) + "^" + std::to_string(d.degree()) + ")";
  return d.name();
}

ordered_json algebra_json(const FiniteFreeAlgebra& b) {
  ordered_json j;
  j["label"] = b.label();
  j["hash"] = b.hash();
  j["rank"] = b.rank();
  j["base"] = ring_name(b.base());
  return j;
}

void header(Outcome& o, const FiniteFreeAlgebra& b) {
  o.results["algebra"] = algebra_json(b);
  o.text << "algebra: " << (b.label().empty() ? "(unlabelled)" : b.label()) << " (rank " << b.rank() << " over "
         << ring_name(b.base()) << ", hash " << b.hash() << ")\n";
}

SearchOptions search_options(const CommandOptions& opts) {
  SearchOptions s;
  s.budget = opts.budget;
  s.seed = opts.seed;
  return s;
}

void cmd_gcp(Outcome& o, const FiniteFreeAlgebra& b) {
  header(o, b);
  const auto f = gcp(b);
  ordered_json vars = ordered_json::array();
  for (const auto& v : f.params.ring().variables()) vars.push_back(v);
  o.results["variables"] = vars;
  o.results["outer"] = f.params.outer_var();
  o.results["gcp"] = f.poly.to_string();
  o.text << "F(" << f.params.outer_var() << ") = " << f.poly.to_string() << "\n";
}

void cmd_check(Outcome& o, const FiniteFreeAlgebra& b, const CommandOptions& opts) {
  header(o, b);
  const SimplicityReport rep = locally_simple(b, opts.primes, search_options(opts));
  const bool over_z = b.domain().kind() == DomainKind::integers && b.base().nvars() == 0;
  const bool fiber = rep.scope == "fiber";

  std::string verdict;
  std::string summary;
  if (fiber) {
    const FiberReport& f = rep.fibers.front();
    verdict = to_string(f.verdict);
    o.exit_code = f.verdict == FiberVerdict::simple ? kExitOk : kExitVerdict;
    if (f.verdict == FiberVerdict::simple) {
      summary = "simple over " + field_label(f.field);
    } else if (f.verdict == FiberVerdict::locally_simple_not_simple) {
      summary = "not simple over " + field_label(f.field);
      if (f.extension_degree)
        summary += "; generator exists over GF(" + std::to_string(f.field.characteristic()) + "^" +
                   std::to_string(*f.extension_degree) + ")";
    } else {
      summary = "not locally simple: " + f.witness;
    }
  } else {
    verdict = rep.locally_simple ? "locally-simple" : "not-locally-simple";
    o.exit_code = rep.locally_simple ? kExitOk : kExitVerdict;
    if (rep.locally_simple) {
      summary = "locally simple (" + rep.scope + ")";
    } else {
      for (const auto& f : rep.fibers)
        if (!f.locally_simple()) {
          summary = "not locally simple at " + f.fiber + ": " + f.witness;
          break;
        }
    }
  }
  o.results["verdict"] = verdict;
  o.results["summary"] = summary;
  o.results["simplicity"] = rep.to_json();

  std::vector<std::uint64_t> cert_primes = opts.primes;
  if (cert_primes.empty() && over_z)
    for (const auto& f : rep.fibers) cert_primes.push_back(*f.prime);
  if (cert_primes.empty() && over_z && !b.monogenic()) {
    cert_primes = primes_between(2, 50);
    o.results["certificate_primes"] = "sampled primes below 50";
  }
  ordered_json cert_json;
  std::string cert_text;
  try {
    const InjectivityCertificate cert = injectivity_certificate(b, cert_primes);
    cert_json = cert.to_json();
    cert_text = to_string(cert.kind);
    if (cert.variable) cert_text += " " + cert.variable_name + " degree " + std::to_string(cert.degree);
    if (cert.witness_prime) cert_text += " (vanishes mod " + std::to_string(*cert.witness_prime) + ")";
    if (cert.identically_zero) cert_text += " (det U = 0)";
    cert_text += " [" + to_string(cert.grade) + "]";
  } catch (const InvalidInput& e) {
    cert_json = ordered_json{{"error", e.what()}};
    cert_text = std::string("unavailable: ") + e.what();
  }
  o.results["certificate"] = cert_json;

  o.text << "verdict: " << verdict << "\n" << summary << "\n";
  o.text << "discriminant: " << rep.discriminant << "\n";
  for (const auto& f : rep.fibers) {
    o.text << "  " << f.fiber << ": " << to_string(f.verdict);
    for (const auto& lf : f.factors)
      o.text << " [dim " << lf.dimension << ", f " << lf.residue_degree << ", cot " << lf.cotangent_dimension << "]";
    o.text << "\n";
  }
  o.text << "certificate: " << cert_text << "\n";
  for (const auto& n : rep.notes) o.text << "note: " << n << "\n";
}

void cmd_hilbert(Outcome& o, const FiniteFreeAlgebra& b, const CommandOptions& opts) {
  header(o, b);
  const std::vector<std::uint64_t> primes = opts.primes.empty() ? std::vector<std::uint64_t>{2, 3, 5} : opts.primes;
  const auto reports = zahlbericht_suite(b, primes);
  bool any_fail = false, any_budget = false, any_error = false;
  ordered_json arr = ordered_json::array();
  for (const auto& r : reports) {
    arr.push_back(r.to_json());
    if (r.verdict == Verdict::fail) any_fail = true;
    if (r.verdict == Verdict::error) (r.find("error") == "budget" ? any_budget : any_error) = true;
    o.text << r.check << "  " << (r.prime ? "p=" + std::to_string(*r.prime) : std::string("   ")) << "  "
           << to_string(r.verdict) << "  " << to_string(r.grade) << "\n";
    if (r.verdict == Verdict::error) {
      for (const auto& n : r.notes) o.text << "    " << n << "\n";
    } else if (r.check == "theorem33") {
      for (std::size_t i = 1;; ++i) {
        const std::string pi = r.find("Pi_" + std::to_string(i));
        if (pi.empty()) break;
        o.text << "    Pi_" << i << "^" << r.find("e_" + std::to_string(i)) << " = " << pi << "\n";
      }
    } else if (r.check == "theorem35") {
      o.text << "    content " << r.find("content") << ", trace-form discriminant " << r.find("trace-form discriminant")
             << "\n";
    }
  }
  o.results["reports"] = arr;
  o.exit_code = any_fail ? kExitVerdict : any_budget ? kExitBudget : any_error ? kExitInput : kExitOk;
  o.results["verdict"] = o.exit_code == kExitOk ? "pass" : any_fail ? "fail" : "error";
}

void cmd_norm_form(Outcome& o, const FiniteFreeAlgebra& b, const CommandOptions& opts) {
  header(o, b);
  const MultiPoly n = norm_form(b);
  const VerificationReport rel = norm_gcp_relation(b);
  o.results["norm_form"] = n.to_string();
  o.results["relation"] = rel.to_json();
  o.text << "N(xi) = " << n.to_string() << "\n";
  o.text << "relation with F: " << to_string(rel.verdict) << "\n";
  if (opts.smoke) {
    const SmokeResult s = irreducibility_smoke(n);
    ordered_json sj;
    sj["found"] = s.found();
    sj["method"] = s.method;
    sj["candidates"] = s.candidates;
    sj["complete"] = s.complete;
    if (s.found()) {
      sj["left"] = s.left->to_string();
      sj["right"] = s.right->to_string();
      o.text << "reducible (" << s.method << "): (" << s.left->to_string() << ") * (" << s.right->to_string() << ")\n";
    } else {
      o.text << "no factor of degree <= 2 found" << (s.complete ? " (search complete)" : "") << "\n";
    }
    o.results["smoke"] = sj;
  }
  o.exit_code = rel.passed() ? kExitOk : kExitVerdict;
}

void cmd_comaximal(Outcome& o, const ordered_json& doc) {
  if (!doc.is_object()) throw SchemaError("comaximal input must be an object");
  for (const auto& [key, value] : doc.items())
    if (key != "base" && key != "P" && key != "Q" && key != "bound")
      throw SchemaError("comaximal: unknown key \"" + key + "\"");
  if (!doc.contains("base") || !doc.contains("P") || !doc.contains("Q"))
    throw SchemaError("comaximal input needs base, P and Q");
  const PolyRing base = parse_base(doc.at("base"));
  if (base.nvars() != 0) throw SchemaError("comaximal: base must not have variables");
  const PolyRing rt(base.domain(), {"T"});
  auto poly = [&](const char* key) {
    const auto& v = doc.at(key);
    if (!v.is_string()) throw SchemaError(std::string("comaximal: ") + key + " must be a string");
    return UPoly::from_multipoly(MultiPoly::parse(rt, v.get<std::string>()), "T", base);
  };
  long bound = 16;
  if (doc.contains("bound")) {
    if (!doc.at("bound").is_number_integer() || doc.at("bound").get<long>() < 0)
      throw SchemaError("comaximal: bound must be a nonnegative integer");
    bound = doc.at("bound").get<long>();
  }
  const ComaximalResult r = comaximal_shift(poly("P"), poly("Q"), bound);
  o.results["comaximal"] = r.to_json();
  o.text << "R(X) = " << r.resultant.to_string() << "\n";
  if (r.shift) o.text << "shift x = " << r.field.to_string(*r.shift) << " in " << field_label(r.field) << "\n";
  if (r.extension_degree)
    o.text << "no shift over " << field_label(r.base) << "; extension of degree " << *r.extension_degree << " needed\n";
  if (r.denominator) o.text << "R(x) = " << r.denominator->get_str() << "\n";
  if (r.u) o.text << "U = " << r.u->to_string("T") << "\nV = " << r.v->to_string("T") << "\n";
  o.text << "verified: " << (r.verified ? "yes" : "no") << "\n";
  o.exit_code = r.shift && !r.extension_degree && r.verified ? kExitOk : kExitVerdict;
}

}  // namespace

std::uint64_t default_budget() {
  const char* env = std::getenv("KRON_BUDGET");
  if (!env || !*env) return std::uint64_t{1} << 20;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (*end || v == 0) throw InvalidInput("KRON_BUDGET must be a positive integer");
  return v;
}

std::vector<std::uint64_t> parse_prime_list(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(item.c_str(), &end, 10);
    if (item.empty() || *end || !is_prime(v)) throw InvalidInput("--primes: \"" + item + "\" is not a prime");
    out.push_back(v);
  }
  if (out.empty()) throw InvalidInput("--primes: empty list");
  return out;
}

CommandOutput run_command(const std::string& command, const std::string& path, const CommandOptions& opts) {
  const auto t0 = std::chrono::steady_clock::now();
  ordered_json doc;
  doc["command"] = command;
  ordered_json inputs;
  inputs["file"] = path;
  inputs["primes"] = opts.primes;
  inputs["seed"] = opts.seed;
  inputs["budget"] = opts.budget;
  Outcome o;
  std::string error;
  std::string error_kind;
  try {
    const ordered_json input = read_json_file(path);
    inputs["document"] = input;
    if (command == "comaximal") {
      cmd_comaximal(o, input);
    } else {
      const FiniteFreeAlgebra b = parse_descriptor(input);
      if (command == "gcp") cmd_gcp(o, b);
      else if (command == "check") cmd_check(o, b, opts);
      else if (command == "hilbert") cmd_hilbert(o, b, opts);
      else if (command == "norm-form") cmd_norm_form(o, b, opts);
      else throw InvalidInput("unknown command " + command);
    }
  } catch (const BudgetExceeded& e) {
    o.exit_code = kExitBudget;
    error_kind = "budget";
    error = e.what();
  } catch (const std::exception& e) {
    o.exit_code = kExitInput;
    error_kind = "input";
    error = e.what();
  }
  doc["inputs"] = inputs;
  if (error.empty()) {
    doc["results"] = o.results;
  } else {
    doc["error"] = ordered_json{{"kind", error_kind}, {"message", error}};
  }
  doc["exit_code"] = o.exit_code;
  const auto ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
  if (opts.timing) doc["timing"] = ordered_json{{"elapsed_ms", ms}};

  CommandOutput out;
  out.exit_code = o.exit_code;
  if (opts.json) {
    out.text = doc.dump(2) + "\n";
  } else {
    out.text = o.text.str();
    if (!error.empty()) out.text += "error (" + error_kind + "): " + error + "\n";
    if (opts.timing) out.text += "elapsed: " + std::to_string(ms) + " ms\n";
  }
  return out;
}

}  // namespace kron
