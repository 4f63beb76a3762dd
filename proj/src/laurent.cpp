#include "symbio/laurent.hpp"

#include <stdexcept>

namespace symbio {

LaurentPoly::LaurentPoly(Coeff constant) { add_term(0, constant); }

LaurentPoly LaurentPoly::monomial(Coeff coeff, int exponent) {
  LaurentPoly p;
  p.add_term(exponent, coeff);
  return p;
}

void LaurentPoly::add_term(int exponent, Coeff c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly::Coeff LaurentPoly::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? 0 : it->second;
}

std::optional<int> LaurentPoly::min_degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first;
}

std::optional<int> LaurentPoly::max_degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.rbegin()->first;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (auto [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (auto [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  LaurentPoly out;
  for (auto [e1, c1] : terms_)
    for (auto [e2, c2] : o.terms_) out.add_term(e1 + e2, c1 * c2);
  *this = std::move(out);
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out;
  for (auto [e, c] : terms_) out.add_term(e, -c);
  return out;
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
  LaurentPoly result(1);
  LaurentPoly base = *this;
  while (k) {
    if (k & 1u) result *= base;
    base *= base;
    k >>= 1u;
  }
  return result;
}

LaurentPoly LaurentPoly::mirror() const {
  LaurentPoly out;
  for (auto [e, c] : terms_) out.add_term(-e, c);
  return out;
}

std::optional<LaurentPoly> LaurentPoly::divide_exact(const LaurentPoly& divisor) const {
  if (divisor.is_zero()) throw std::invalid_argument("LaurentPoly: division by zero");
  LaurentPoly rem = *this;
  LaurentPoly quot;
  const int dmax = *divisor.max_degree();
  const Coeff lead = divisor.coeff(dmax);
  // Long division on the highest terms; terminates because the span of rem shrinks.
  while (!rem.is_zero()) {
    if (*rem.max_degree() - dmax < *rem.min_degree() - *divisor.min_degree())
      return std::nullopt;
    int e = *rem.max_degree();
    Coeff c = rem.coeff(e);
    if (c % lead != 0) return std::nullopt;
    LaurentPoly step = monomial(c / lead, e - dmax);
    quot += step;
    rem -= step * divisor;
  }
  return quot;
}

std::string LaurentPoly::to_string(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    auto [e, c] = *it;
    Coeff mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (e == 0) {
      out += std::to_string(mag);
      continue;
    }
    if (mag != 1) out += std::to_string(mag);
    out += var;
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

}  // namespace symbio
