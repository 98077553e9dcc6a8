#include "sgalg/lattice.hpp"

#include <cctype>

namespace sgalg {

std::string IntegerVector::to_string() const {
  return "(" + x.get_str() + "," + y.get_str() + ")";
}

LatticeVector::LatticeVector(Integer x, Integer y) : v_(std::move(x), std::move(y)) {
  if (!v_.is_nonnegative()) throw Error("lattice vector must be nonnegative: " + v_.to_string());
}

std::optional<LatticeVector> LatticeVector::from(const IntegerVector& v) {
  if (!v.is_nonnegative()) return std::nullopt;
  return LatticeVector(v.x, v.y);
}

LatticeVector operator*(const Integer& s, const LatticeVector& v) {
  return LatticeVector(s * v.v_.x, s * v.v_.y);
}

Integer det(const IntegerVector& u, const IntegerVector& v) { return u.x * v.y - u.y * v.x; }

RationalPair solve_in_basis(const IntegerVector& v, const IntegerVector& e1,
                            const IntegerVector& e2) {
  Integer D = det(e1, e2);
  if (D == 0) throw Error("solve_in_basis: basis vectors are dependent");
  Rational l1(det(v, e2), D);
  Rational l2(det(e1, v), D);
  l1.canonicalize();
  l2.canonicalize();
  return {l1, l2};
}

bool in_lattice(const IntegerVector& v, const IntegerVector& e1, const IntegerVector& e2) {
  RationalPair c = solve_in_basis(v, e1, e2);
  return c.l1.get_den() == 1 && c.l2.get_den() == 1;
}

IntegerVector parse_vector(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos || text.find(',', comma + 1) != std::string::npos)
    throw Error("expected a vector of the form x,y but got '" + text + "'");
  auto parse_int = [&](std::string part) {
    while (!part.empty() && std::isspace(static_cast<unsigned char>(part.front()))) part.erase(0, 1);
    while (!part.empty() && std::isspace(static_cast<unsigned char>(part.back()))) part.pop_back();
    if (part.empty()) throw Error("empty coordinate in '" + text + "'");
    std::size_t start = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (start == part.size()) throw Error("bad coordinate in '" + text + "'");
    for (std::size_t i = start; i < part.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(part[i])))
        throw Error("bad coordinate in '" + text + "'");
    if (part[0] == '+') part.erase(0, 1);
    return Integer(part);
  };
  return {parse_int(text.substr(0, comma)), parse_int(text.substr(comma + 1))};
}

std::ostream& operator<<(std::ostream& os, const IntegerVector& v) { return os << v.to_string(); }
std::ostream& operator<<(std::ostream& os, const LatticeVector& v) { return os << v.to_string(); }

}  // namespace sgalg
