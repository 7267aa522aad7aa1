#include "kron/ringkit/multipoly.hpp"

#include <algorithm>
#include <cstring>
#include <map>
#include <unordered_map>

#include "kron/errors.hpp"

namespace kron {

void Monomial::set(std::size_t i, unsigned e) {
  if (i >= kMaxVariables) throw InvalidInput("monomial variable index out of range");
  if (e > 255) throw InvalidInput("monomial exponent exceeds 255");
  total_ = static_cast<std::uint16_t>(total_ - exps_[i] + e);
  exps_[i] = static_cast<std::uint8_t>(e);
}

bool Monomial::divides(const Monomial& other) const {
  if (total_ > other.total_) return false;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    const unsigned e = unsigned{exps_[i]} + other.exps_[i];
    if (e > 255) throw InvalidInput("monomial exponent exceeds 255");
    r.exps_[i] = static_cast<std::uint8_t>(e);
  }
  r.total_ = static_cast<std::uint16_t>(total_ + other.total_);
  return r;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i) r.exps_[i] = static_cast<std::uint8_t>(exps_[i] - other.exps_[i]);
  r.total_ = static_cast<std::uint16_t>(total_ - other.total_);
  return r;
}

int Monomial::compare(const Monomial& a, const Monomial& b) {
  if (a.total_ != b.total_) return a.total_ < b.total_ ? -1 : 1;
  const int c = std::memcmp(a.exps_.data(), b.exps_.data(), kMaxVariables);
  return (c > 0) - (c < 0);
}

std::size_t Monomial::hash() const {
  std::uint64_t h = 1469598103934665603ULL;
  for (auto e : exps_) {
    h ^= e;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

PolyRing::PolyRing(Domain domain, std::vector<std::string> variables)
    : domain_(std::move(domain)) {
  if (variables.size() > kMaxVariables) throw InvalidInput("too many polynomial variables");
  for (std::size_t i = 0; i < variables.size(); ++i) {
    if (variables[i].empty()) throw InvalidInput("empty variable name");
    for (std::size_t j = 0; j < i; ++j) {
      if (variables[i] == variables[j]) throw InvalidInput("duplicate variable name " + variables[i]);
    }
  }
  vars_ = std::make_shared<const std::vector<std::string>>(std::move(variables));
}

std::optional<std::size_t> PolyRing::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < vars_->size(); ++i) {
    if ((*vars_)[i] == name) return i;
  }
  return std::nullopt;
}

PolyRing PolyRing::with_domain(Domain domain) const {
  PolyRing r = *this;
  r.domain_ = std::move(domain);
  return r;
}

PolyRing PolyRing::extended(const std::vector<std::string>& more) const {
  std::vector<std::string> all = *vars_;
  all.insert(all.end(), more.begin(), more.end());
  return PolyRing(domain_, std::move(all));
}

bool PolyRing::operator==(const PolyRing& other) const {
  return domain_ == other.domain_ && (vars_ == other.vars_ || *vars_ == *other.vars_);
}

MultiPoly MultiPoly::constant(const PolyRing& ring, const Scalar& c) {
  MultiPoly p(ring);
  if (!ring.domain().is_zero(c)) p.terms_.emplace_back(Monomial{}, c);
  return p;
}

MultiPoly MultiPoly::from_int(const PolyRing& ring, long c) { return constant(ring, ring.domain().from_int(c)); }

MultiPoly MultiPoly::variable(const PolyRing& ring, std::size_t index) {
  if (index >= ring.nvars()) throw InvalidInput("variable index out of range");
  Monomial m;
  m.set(index, 1);
  return monomial(ring, m, ring.domain().one());
}

MultiPoly MultiPoly::variable(const PolyRing& ring, std::string_view name) {
  auto idx = ring.index_of(name);
  if (!idx) throw InvalidInput("unknown variable " + std::string(name));
  return variable(ring, *idx);
}

MultiPoly MultiPoly::monomial(const PolyRing& ring, const Monomial& m, const Scalar& c) {
  MultiPoly p(ring);
  if (!ring.domain().is_zero(c)) p.terms_.emplace_back(m, c);
  return p;
}

MultiPoly MultiPoly::from_terms(const PolyRing& ring, std::vector<Term> terms) {
  const Domain& dom = ring.domain();
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return Monomial::compare(a.first, b.first) > 0; });
  MultiPoly p(ring);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == t.first) {
      dom.add_to(p.terms_.back().second, t.second);
    } else {
      if (!p.terms_.empty() && dom.is_zero(p.terms_.back().second)) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && dom.is_zero(p.terms_.back().second)) p.terms_.pop_back();
  return p;
}

bool MultiPoly::is_one() const {
  return terms_.size() == 1 && terms_[0].first.is_one() && domain().is_one(terms_[0].second);
}

Scalar MultiPoly::constant_term() const {
  if (!terms_.empty() && terms_.back().first.is_one()) return terms_.back().second;
  return domain().zero();
}

Scalar MultiPoly::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& key) { return Monomial::compare(t.first, key) > 0; });
  if (it != terms_.end() && it->first == m) return it->second;
  return domain().zero();
}

const MultiPoly::Term& MultiPoly::leading_term() const {
  if (terms_.empty()) throw InvalidInput("leading term of zero polynomial");
  return terms_.front();
}

int MultiPoly::total_degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(terms_.front().first.total_degree());
}

int MultiPoly::degree_in(std::size_t var) const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.first[var]));
  return d;
}

MultiPoly MultiPoly::coefficient_in(std::size_t var, unsigned k) const {
  MultiPoly r(ring_);
  for (const auto& t : terms_) {
    if (t.first[var] != k) continue;
    Monomial m = t.first;
    m.set(var, 0);
    r.terms_.emplace_back(m, t.second);
  }
  return r;
}

bool MultiPoly::is_homogeneous_in(const std::vector<std::size_t>& vars, int* degree) const {
  int deg = -1;
  for (const auto& t : terms_) {
    int d = 0;
    for (auto v : vars) d += static_cast<int>(t.first[v]);
    if (deg == -1) deg = d;
    if (d != deg) return false;
  }
  if (degree) *degree = deg;
  return true;
}

void MultiPoly::check_same_ring(const MultiPoly& other, const char* op) const {
  if (ring_ != other.ring_) throw InvalidInput(std::string("MultiPoly ") + op + ": ring mismatch");
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.emplace_back(t.first, domain().neg(t.second));
  return r;
}

namespace {

std::vector<MultiPoly::Term> merge_terms(const Domain& dom, const std::vector<MultiPoly::Term>& a,
                                         const std::vector<MultiPoly::Term>& b, bool subtract) {
  std::vector<MultiPoly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int c;
    if (i == a.size()) c = -1;
    else if (j == b.size()) c = 1;
    else c = Monomial::compare(a[i].first, b[j].first);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.emplace_back(b[j].first, subtract ? dom.neg(b[j].second) : b[j].second);
      ++j;
    } else {
      Scalar s = subtract ? dom.sub(a[i].second, b[j].second) : dom.add(a[i].second, b[j].second);
      if (!dom.is_zero(s)) out.emplace_back(a[i].first, std::move(s));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  check_same_ring(other, "+");
  terms_ = merge_terms(domain(), terms_, other.terms_, false);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
  check_same_ring(other, "-");
  terms_ = merge_terms(domain(), terms_, other.terms_, true);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_same_ring(b, "*");
  const Domain& dom = a.domain();
  MultiPoly r(a.ring_);
  if (a.is_zero() || b.is_zero()) return r;
  if (a.terms_.size() == 1 || b.terms_.size() == 1) {
    // Multiplying by a single term preserves the order.
    const auto& single = a.terms_.size() == 1 ? a.terms_[0] : b.terms_[0];
    const auto& other = a.terms_.size() == 1 ? b.terms_ : a.terms_;
    r.terms_.reserve(other.size());
    for (const auto& t : other) {
      Scalar c = dom.mul(single.second, t.second);
      if (!dom.is_zero(c)) r.terms_.emplace_back(single.first * t.first, std::move(c));
    }
    return r;
  }
  std::unordered_map<Monomial, Scalar, MonomialHash> acc;
  acc.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) {
      Monomial m = ta.first * tb.first;
      auto it = acc.find(m);
      if (it == acc.end()) acc.emplace(m, dom.mul(ta.second, tb.second));
      else dom.add_mul(it->second, ta.second, tb.second);
    }
  }
  r.terms_.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (!dom.is_zero(c)) r.terms_.emplace_back(m, std::move(c));
  }
  std::sort(r.terms_.begin(), r.terms_.end(),
            [](const MultiPoly::Term& x, const MultiPoly::Term& y) { return Monomial::compare(x.first, y.first) > 0; });
  return r;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& other) {
  *this = *this * other;
  return *this;
}

MultiPoly MultiPoly::scaled(const Scalar& c) const {
  MultiPoly r(ring_);
  if (domain().is_zero(c)) return r;
  for (const auto& t : terms_) {
    Scalar v = domain().mul(t.second, c);
    if (!domain().is_zero(v)) r.terms_.emplace_back(t.first, std::move(v));
  }
  return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly result = from_int(ring_, 1);
  MultiPoly base = *this;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

bool MultiPoly::operator==(const MultiPoly& other) const {
  if (ring_ != other.ring_ || terms_.size() != other.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (!(terms_[i].first == other.terms_[i].first)) return false;
    if (!domain().is_zero(domain().sub(terms_[i].second, other.terms_[i].second))) return false;
  }
  return true;
}

std::optional<MultiPoly> MultiPoly::divide_exact(const MultiPoly& divisor) const {
  check_same_ring(divisor, "divide_exact");
  if (divisor.is_zero()) throw InvalidInput("divide_exact: division by zero polynomial");
  const Domain& dom = domain();
  if (is_zero()) return MultiPoly(ring_);
  if (divisor.terms_.size() == 1) {
    const auto& [dm, dc] = divisor.terms_[0];
    MultiPoly q(ring_);
    for (const auto& t : terms_) {
      if (!dm.divides(t.first) || !dom.divides(dc, t.second)) return std::nullopt;
      q.terms_.emplace_back(t.first / dm, dom.div(t.second, dc));
    }
    return q;
  }
  std::map<Monomial, Scalar, GrlexGreater> rem;
  for (const auto& t : terms_) rem.emplace(t.first, t.second);
  const auto& [lm, lc] = divisor.terms_.front();
  std::vector<Term> quotient;
  while (!rem.empty()) {
    auto head = rem.begin();
    if (!lm.divides(head->first) || !dom.divides(lc, head->second)) return std::nullopt;
    const Monomial qm = head->first / lm;
    const Scalar qc = dom.div(head->second, lc);
    rem.erase(head);
    for (std::size_t k = 1; k < divisor.terms_.size(); ++k) {
      const Monomial m = qm * divisor.terms_[k].first;
      Scalar c = dom.neg(dom.mul(qc, divisor.terms_[k].second));
      auto it = rem.find(m);
      if (it == rem.end()) {
        rem.emplace(m, std::move(c));
      } else {
        dom.add_to(it->second, c);
        if (dom.is_zero(it->second)) rem.erase(it);
      }
    }
    quotient.emplace_back(qm, qc);
  }
  MultiPoly q(ring_);
  q.terms_ = std::move(quotient);  // generated in descending order
  return q;
}

MultiPoly MultiPoly::substitute(const PolyRing& target, const std::vector<MultiPoly>& images) const {
  if (images.size() != ring_.nvars()) throw InvalidInput("substitute: image count must equal variable count");
  for (const auto& img : images) {
    if (img.ring() != target) throw InvalidInput("substitute: image outside target ring");
  }
  const Domain& tdom = target.domain();
  // powers[i][e] = images[i]^e, filled lazily.
  std::vector<std::vector<MultiPoly>> powers(images.size());
  auto power = [&](std::size_t i, unsigned e) -> const MultiPoly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(from_int(target, 1));
    while (cache.size() <= e) cache.push_back(cache.back() * images[i]);
    return cache[e];
  };
  std::vector<Term> acc;
  for (const auto& [m, c] : terms_) {
    Scalar tc = tdom.convert(c, domain());
    if (tdom.is_zero(tc)) continue;
    MultiPoly term = constant(target, tc);
    for (std::size_t i = 0; i < ring_.nvars(); ++i) {
      if (m[i]) term *= power(i, m[i]);
    }
    for (auto& t : term.terms_) acc.push_back(std::move(t));
  }
  return from_terms(target, std::move(acc));
}

MultiPoly MultiPoly::remap(const PolyRing& target) const {
  if (target == ring_) return *this;
  std::vector<std::size_t> where(ring_.nvars());
  for (std::size_t i = 0; i < ring_.nvars(); ++i) {
    auto idx = target.index_of(ring_.variable(i));
    if (!idx) {
      // Variables that never occur may be absent from the target.
      if (degree_in(i) <= 0) {
        where[i] = kMaxVariables;
        continue;
      }
      throw InvalidInput("remap: variable " + ring_.variable(i) + " missing from target ring");
    }
    where[i] = *idx;
  }
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [m, c] : terms_) {
    Monomial nm;
    for (std::size_t i = 0; i < ring_.nvars(); ++i) {
      if (m[i]) nm.set(where[i], m[i]);
    }
    out.emplace_back(nm, target.domain().convert(c, domain()));
  }
  return from_terms(target, std::move(out));
}

MultiPoly MultiPoly::change_domain(const Domain& target) const {
  PolyRing tring = ring_.with_domain(target);
  MultiPoly r(tring);
  for (const auto& [m, c] : terms_) {
    Scalar tc = target.convert(c, domain());
    if (!target.is_zero(tc)) r.terms_.emplace_back(m, std::move(tc));
  }
  return r;
}

Scalar MultiPoly::evaluate(const std::vector<Scalar>& values) const {
  if (values.size() != ring_.nvars()) throw InvalidInput("evaluate: wrong number of values");
  const Domain& dom = domain();
  Scalar acc = dom.zero();
  for (const auto& [m, c] : terms_) {
    Scalar t = c;
    for (std::size_t i = 0; i < ring_.nvars(); ++i) {
      if (m[i]) t = dom.mul(t, dom.pow(values[i], static_cast<std::uint64_t>(m[i])));
    }
    dom.add_to(acc, t);
  }
  return acc;
}

std::string format_term(const PolyRing& ring, const Monomial& m, const Scalar& c, bool first,
                        const std::string& extra_factor) {
  const Domain& dom = ring.domain();
  std::string factors;
  for (std::size_t i = 0; i < ring.nvars(); ++i) {
    if (!m[i]) continue;
    if (!factors.empty()) factors += "*";
    factors += ring.variable(i);
    if (m[i] > 1) factors += "^" + std::to_string(m[i]);
  }
  if (!extra_factor.empty()) {
    if (!factors.empty()) factors += "*";
    factors += extra_factor;
  }
  const bool negative = dom.is_negative(c);
  const Scalar mag = negative ? dom.neg(c) : c;
  std::string coef;
  if (factors.empty()) {
    coef = dom.to_string(mag);
  } else if (!dom.is_one(mag)) {
    coef = dom.is_compound(mag) ? "(" + dom.to_string(mag) + ")" : dom.to_string(mag);
    coef += "*";
  }
  std::string out;
  if (first) out = negative ? "-" : "";
  else out = negative ? " - " : " + ";
  return out + coef + factors;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    out += format_term(ring_, m, c, first);
    first = false;
  }
  return out;
}

mpz_class content(const MultiPoly& p) {
  if (p.domain().kind() != DomainKind::integers) throw InvalidInput("content: polynomial is not over the integers");
  mpz_class g = 0;
  for (const auto& [m, c] : p.terms()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), p.domain().as_mpz(c).get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

}  // namespace kron
