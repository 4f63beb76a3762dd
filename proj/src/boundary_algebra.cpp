#include "symbio/boundary_algebra.hpp"

#include <cctype>
#include <optional>

namespace symbio::algebra {

char to_char(Bracket b) {
  switch (b) {
    case Bracket::AngleOpen: return '<';
    case Bracket::AngleClose: return '>';
    case Bracket::SquareOpen: return '[';
    case Bracket::SquareClose: return ']';
  }
  return '?';
}

Word parse_word(std::string_view text) {
  Word w;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    switch (ch) {
      case '<': w.push_back(Bracket::AngleOpen); break;
      case '>': w.push_back(Bracket::AngleClose); break;
      case '[': w.push_back(Bracket::SquareOpen); break;
      case ']': w.push_back(Bracket::SquareClose); break;
      default:
        throw ParseError(i + 1, "invalid character '" + std::string(1, ch) + "' at position " +
                                    std::to_string(i + 1));
    }
  }
  return w;
}

std::string to_string(const Word& w) {
  std::string s;
  s.reserve(w.size());
  for (Bracket b : w) s.push_back(to_char(b));
  return s;
}

bool is_reduced(const Word& w) {
  bool seen_opener = false;
  for (Bracket b : w) {
    if (is_opener(b)) seen_opener = true;
    else if (seen_opener) return false;
  }
  return true;
}

std::string_view container_text(Container c) {
  switch (c) {
    case Container::Angle: return "<>";
    case Container::Square: return "[]";
    case Container::SquareAngle: return "[>";
    case Container::AngleSquare: return "<]";
  }
  return "?";
}

Container container_of(Bracket opener, Bracket closer) {
  bool angle_open = opener == Bracket::AngleOpen;
  bool angle_close = closer == Bracket::AngleClose;
  if (angle_open) return angle_close ? Container::Angle : Container::AngleSquare;
  return angle_close ? Container::SquareAngle : Container::Square;
}

Monomial Monomial::of(Container c, std::uint32_t power) {
  Monomial m;
  m.exps[static_cast<std::size_t>(c)] = power;
  return m;
}

std::uint32_t Monomial::degree() const { return exps[0] + exps[1] + exps[2] + exps[3]; }

Monomial& Monomial::operator*=(const Monomial& o) {
  for (std::size_t i = 0; i < 4; ++i) exps[i] += o.exps[i];
  return *this;
}

std::string Monomial::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < 4; ++i) {
    if (exps[i] == 0) continue;
    if (!out.empty()) out += ' ';
    out += container_text(static_cast<Container>(i));
    if (exps[i] > 1) out += "^" + std::to_string(exps[i]);
  }
  return out;
}

namespace {

std::optional<std::size_t> find_redex(const Word& w, RedexOrder order) {
  if (w.size() < 2) return std::nullopt;
  if (order == RedexOrder::RightmostFirst) {
    for (std::size_t i = w.size() - 1; i-- > 0;)
      if (is_opener(w[i]) && is_closer(w[i + 1])) return i;
    return std::nullopt;
  }
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (is_opener(w[i]) && is_closer(w[i + 1])) return i;
  return std::nullopt;
}

}  // namespace

Normalized normalize(const Word& w, RedexOrder order) {
  Normalized out;
  out.residual = w;
  Word& r = out.residual;
  if (order == RedexOrder::LeftToRightScan) {
    bool changed = true;
    while (changed) {
      changed = false;
      Word next;
      next.reserve(r.size());
      for (std::size_t i = 0; i < r.size(); ++i) {
        if (i + 1 < r.size() && is_opener(r[i]) && is_closer(r[i + 1])) {
          out.scalar *= Monomial::of(container_of(r[i], r[i + 1]));
          ++i;
          changed = true;
        } else {
          next.push_back(r[i]);
        }
      }
      r = std::move(next);
    }
    return out;
  }
  while (auto pos = find_redex(r, order)) {
    out.scalar *= Monomial::of(container_of(r[*pos], r[*pos + 1]));
    r.erase(r.begin() + static_cast<std::ptrdiff_t>(*pos),
            r.begin() + static_cast<std::ptrdiff_t>(*pos) + 2);
  }
  return out;
}

void Element::add(const Word& w, const Monomial& m, Coeff c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(Key{w, m}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Element Element::from_word(const Word& w, Coeff coeff) {
  Element e;
  auto n = normalize(w);
  e.add(n.residual, n.scalar, coeff);
  return e;
}

Element Element::scalar(const Monomial& m, Coeff coeff) { return term({}, m, coeff); }

Element Element::term(const Word& reduced, const Monomial& m, Coeff coeff) {
  if (!is_reduced(reduced)) throw std::invalid_argument("Element::term: word is not reduced");
  Element e;
  e.add(reduced, m, coeff);
  return e;
}

Element& Element::operator+=(const Element& o) {
  for (const auto& [k, c] : o.terms_) add(k.first, k.second, c);
  return *this;
}

Element Element::scaled(const Monomial& m, Coeff coeff) const {
  Element out;
  for (const auto& [k, c] : terms_) out.add(k.first, k.second * m, c * coeff);
  return out;
}

Element multiply(const Element& a, const Element& b) {
  Element out;
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      Word w = ka.first;
      w.insert(w.end(), kb.first.begin(), kb.first.end());
      auto n = normalize(w);
      out += Element::term(n.residual, ka.second * kb.second * n.scalar, ca * cb);
    }
  }
  return out;
}

const Word& extainer_word(Extainer x) {
  static const std::array<Word, 4> words = {
      Word{Bracket::AngleClose, Bracket::AngleOpen},    // E = ><
      Word{Bracket::SquareClose, Bracket::SquareOpen},  // F = ][
      Word{Bracket::AngleClose, Bracket::SquareOpen},   // G = >[
      Word{Bracket::SquareClose, Bracket::AngleOpen},   // H = ]<
  };
  return words[static_cast<std::size_t>(x)];
}

char extainer_name(Extainer x) { return "EFGH"[static_cast<std::size_t>(x)]; }

std::string Element::to_string(bool use_names) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    const auto& [w, m] = k;
    Coeff mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    std::string word_text = algebra::to_string(w);
    if (use_names) {
      for (Extainer x : kExtainers)
        if (extainer_word(x) == w) word_text = std::string(1, extainer_name(x));
    }
    std::string body = m.to_string();
    if (!word_text.empty()) body += (body.empty() ? "" : " ") + word_text;
    if (body.empty()) {
      out += std::to_string(mag);
    } else {
      if (mag != 1) out += std::to_string(mag) + " ";
      out += body;
    }
  }
  return out;
}

Table full_table() {
  Table t;
  for (Extainer x : kExtainers)
    for (Extainer y : kExtainers)
      t[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] =
          multiply(Element::from_word(extainer_word(x)), Element::from_word(extainer_word(y)));
  return t;
}

}  // namespace symbio::algebra
