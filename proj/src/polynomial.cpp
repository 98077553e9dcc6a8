#include "sgalg/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace sgalg {

Monomial Monomial::variable(std::size_t nvars, std::size_t i, Exponent power) {
  Monomial m(nvars);
  m.exps_.at(i) = power;
  return m;
}

std::uint64_t Monomial::degree() const {
  return std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m(a.nvars());
  for (std::size_t i = 0; i < a.nvars(); ++i) m.exps_[i] = a.exps_[i] + b.exps_[i];
  return m;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial m(a.nvars());
  for (std::size_t i = 0; i < a.nvars(); ++i) {
    if (b.exps_[i] > a.exps_[i]) throw Error("monomial division is not exact");
    m.exps_[i] = a.exps_[i] - b.exps_[i];
  }
  return m;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial m(a.nvars());
  for (std::size_t i = 0; i < a.nvars(); ++i) m.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
  return m;
}

// ---------------------------------------------------------------------------

MonomialOrder::MonomialOrder(OrderKind kind, std::vector<std::size_t> precedence,
                             std::size_t block)
    : kind_(kind), precedence_(std::move(precedence)), block_(block) {
  std::vector<std::size_t> sorted = precedence_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != i) throw Error("variable precedence must be a permutation");
  if (block_ > precedence_.size()) throw Error("elimination block exceeds variable count");
}

static std::vector<std::size_t> identity_precedence(std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  return p;
}

MonomialOrder MonomialOrder::grevlex(std::size_t nvars) {
  return {OrderKind::GradedRevLex, identity_precedence(nvars), 0};
}
MonomialOrder MonomialOrder::grevlex(std::vector<std::size_t> precedence) {
  return {OrderKind::GradedRevLex, std::move(precedence), 0};
}
MonomialOrder MonomialOrder::lex(std::size_t nvars) {
  return {OrderKind::Lex, identity_precedence(nvars), 0};
}
MonomialOrder MonomialOrder::lex(std::vector<std::size_t> precedence) {
  return {OrderKind::Lex, std::move(precedence), 0};
}
MonomialOrder MonomialOrder::elimination(std::vector<std::size_t> precedence, std::size_t block) {
  return {OrderKind::Elimination, std::move(precedence), block};
}

// grevlex restricted to precedence_[from, to).
std::strong_ordering MonomialOrder::grevlex_range(const Monomial& a, const Monomial& b,
                                                  std::size_t from, std::size_t to) const {
  std::uint64_t da = 0, db = 0;
  for (std::size_t i = from; i < to; ++i) {
    da += a[precedence_[i]];
    db += b[precedence_[i]];
  }
  if (da != db) return da <=> db;
  // Equal degree: the monomial with the smaller exponent in the smallest
  // variable where they differ is the larger one.
  for (std::size_t i = to; i-- > from;) {
    Exponent ea = a[precedence_[i]], eb = b[precedence_[i]];
    if (ea != eb) return eb <=> ea;
  }
  return std::strong_ordering::equal;
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind_) {
    case OrderKind::Lex:
      for (std::size_t v : precedence_)
        if (a[v] != b[v]) return a[v] <=> b[v];
      return std::strong_ordering::equal;
    case OrderKind::GradedRevLex:
      return grevlex_range(a, b, 0, precedence_.size());
    case OrderKind::Elimination: {
      auto c = grevlex_range(a, b, 0, block_);
      if (c != 0) return c;
      return grevlex_range(a, b, block_, precedence_.size());
    }
  }
  return std::strong_ordering::equal;
}

std::string MonomialOrder::name() const {
  std::ostringstream os;
  switch (kind_) {
    case OrderKind::Lex: os << "lex"; break;
    case OrderKind::GradedRevLex: os << "grevlex"; break;
    case OrderKind::Elimination: os << "elim(" << block_ << ")"; break;
  }
  os << "[";
  for (std::size_t i = 0; i < precedence_.size(); ++i) os << (i ? ">" : "") << precedence_[i];
  os << "]";
  return os.str();
}

// ---------------------------------------------------------------------------

Polynomial::Polynomial(const Monomial& m, Rational c) : nvars_(m.nvars()) {
  if (c != 0) terms_.emplace(m, std::move(c));
}

Polynomial Polynomial::constant(std::size_t nvars, Rational c) {
  return Polynomial(Monomial(nvars), std::move(c));
}

Polynomial Polynomial::binomial(const Monomial& m1, const Monomial& m2) {
  Polynomial p(m1, 1);
  p.add_term(m2, -1);
  return p;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Term Polynomial::leading_term(const MonomialOrder& order) const {
  if (terms_.empty()) throw Error("leading term of the zero polynomial");
  auto best = terms_.begin();
  for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
    if (order.less(best->first, it->first)) best = it;
  return {best->first, best->second};
}

Monomial Polynomial::leading_monomial(const MonomialOrder& order) const {
  return leading_term(order).monomial;
}

std::vector<Term> Polynomial::sorted_terms(const MonomialOrder& order) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [m, c] : terms_) out.push_back({m, c});
  std::sort(out.begin(), out.end(),
            [&](const Term& x, const Term& y) { return order.less(y.monomial, x.monomial); });
  return out;
}

std::uint64_t Polynomial::total_degree() const {
  std::uint64_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

bool Polynomial::is_standard_homogeneous() const {
  if (terms_.empty()) return true;
  auto d = terms_.begin()->first.degree();
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const auto& t) { return t.first.degree() == d; });
}

bool Polynomial::has_constant_term() const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return t.first.is_one(); });
}

Polynomial Polynomial::monic(const MonomialOrder& order) const {
  if (is_zero()) return *this;
  Rational lc = leading_term(order).coefficient;
  Polynomial out(nvars_);
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, c / lc);
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator-(const Polynomial& a) {
  Polynomial out(a.nvars_);
  for (const auto& [m, c] : a.terms_) out.terms_.emplace(m, -c);
  return out;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out(a.nvars_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

Polynomial operator*(const Polynomial& p, const Term& t) {
  Polynomial out(p.nvars_);
  if (t.coefficient == 0) return out;
  for (const auto& [m, c] : p.terms_) out.terms_.emplace(m * t.monomial, c * t.coefficient);
  return out;
}

Polynomial operator*(const Rational& s, const Polynomial& p) {
  Polynomial out(p.nvars_);
  if (s == 0) return out;
  for (const auto& [m, c] : p.terms_) out.terms_.emplace(m, s * c);
  return out;
}

// ---------------------------------------------------------------------------

std::vector<std::string> default_variable_names(std::size_t nvars) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < nvars; ++i) names.push_back("x" + std::to_string(i + 1));
  return names;
}

std::string to_string(const Monomial& m, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += names.at(i);
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

std::string to_string(const Polynomial& p, const std::vector<std::string>& names,
                      const MonomialOrder& order) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.sorted_terms(order)) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    bool unit = mag == 1;
    if (!unit || m.is_one()) out += mag.get_str();
    if (!m.is_one()) out += (unit ? "" : "*") + to_string(m, names);
  }
  return out;
}

}  // namespace sgalg
