#include "symbio/temperley_lieb.hpp"

#include <algorithm>
#include <sstream>

namespace symbio::tl {

namespace {

// Position of a 0-based point when the boundary is read as a circle:
// top edge left to right, then bottom edge right to left.
int circular_position(int n, int p) { return p < n ? p : 3 * n - 1 - p; }

bool crossing_free(int n, const std::vector<int>& partner) {
  std::vector<std::pair<int, int>> arcs;
  for (int p = 0; p < 2 * n; ++p) {
    int q = partner[static_cast<std::size_t>(p)];
    int a = circular_position(n, p), b = circular_position(n, q);
    if (a < b) arcs.emplace_back(a, b);
  }
  for (const auto& [a, b] : arcs)
    for (const auto& [c, d] : arcs)
      if (a < c && c < b && b < d) return false;
  return true;
}

}  // namespace

PlanarMatching::PlanarMatching(int n, const std::vector<std::pair<int, int>>& pairs) : n_(n) {
  if (n < 1) throw std::invalid_argument("PlanarMatching: strand count must be positive");
  partner_.assign(static_cast<std::size_t>(2 * n), -1);
  for (auto [a, b] : pairs) {
    if (a < 1 || b < 1 || a > 2 * n || b > 2 * n || a == b)
      throw std::invalid_argument("PlanarMatching: point out of range");
    auto& pa = partner_[static_cast<std::size_t>(a - 1)];
    auto& pb = partner_[static_cast<std::size_t>(b - 1)];
    if (pa != -1 || pb != -1) throw std::invalid_argument("PlanarMatching: point matched twice");
    pa = b - 1;
    pb = a - 1;
  }
  if (std::find(partner_.begin(), partner_.end(), -1) != partner_.end())
    throw std::invalid_argument("PlanarMatching: point left unmatched");
  if (!crossing_free(n, partner_)) throw std::invalid_argument("PlanarMatching: pairs cross");
}

PlanarMatching PlanarMatching::identity(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i <= n; ++i) pairs.emplace_back(i, n + i);
  return PlanarMatching(n, pairs);
}

PlanarMatching PlanarMatching::generator(int n, int i) {
  if (i < 1 || i >= n) throw std::invalid_argument("PlanarMatching: generator index out of range");
  std::vector<std::pair<int, int>> pairs;
  for (int k = 1; k <= n; ++k) {
    if (k == i) {
      pairs.emplace_back(k, k + 1);
      pairs.emplace_back(n + k, n + k + 1);
      ++k;
    } else {
      pairs.emplace_back(k, n + k);
    }
  }
  return PlanarMatching(n, pairs);
}

std::vector<std::pair<int, int>> PlanarMatching::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int p = 0; p < 2 * n_; ++p) {
    int q = partner_[static_cast<std::size_t>(p)];
    if (p < q) out.emplace_back(p + 1, q + 1);
  }
  return out;
}

PlanarMatching PlanarMatching::flipped() const {
  std::vector<int> flip(partner_.size());
  auto swap_side = [this](int p) { return p < n_ ? p + n_ : p - n_; };
  for (int p = 0; p < 2 * n_; ++p)
    flip[static_cast<std::size_t>(swap_side(p))] = swap_side(partner_[static_cast<std::size_t>(p)]);
  return PlanarMatching(n_, std::move(flip));
}

std::string PlanarMatching::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (auto [a, b] : pairs()) {
    if (!first) os << ',';
    first = false;
    os << '(' << a << ',' << b << ')';
  }
  os << '}';
  return os.str();
}

struct Composer {
  static Composite run(const PlanarMatching& upper, const PlanarMatching& lower) {
    const int n = upper.n_;
    const auto& u = upper.partner_;
    const auto& l = lower.partner_;
    auto at = [](const std::vector<int>& v, int i) { return v[static_cast<std::size_t>(i)]; };
    std::vector<int> result(static_cast<std::size_t>(2 * n), -1);
    std::vector<char> middle_seen(static_cast<std::size_t>(n), 0);

    // Follows a strand entering the middle row at `col` from the side given by
    // `from_upper`, and returns the outer point (in result numbering) it exits at.
    auto follow = [&](int col, bool from_upper) {
      bool in_lower = from_upper;
      while (true) {
        middle_seen[static_cast<std::size_t>(col)] = 1;
        if (in_lower) {
          int q = at(l, col);
          if (q >= n) return q;  // lower bottom = result bottom
          col = q;
          in_lower = false;
        } else {
          int q = at(u, n + col);
          if (q < n) return q;  // upper top = result top
          col = q - n;
          in_lower = true;
        }
      }
    };

    for (int p = 0; p < 2 * n; ++p) {
      if (at(result, p) != -1) continue;
      int q;
      if (p < n) {
        int t = at(u, p);
        q = t < n ? t : follow(t - n, true);
      } else {
        int t = at(l, p);
        q = t >= n ? t : follow(t, false);
      }
      result[static_cast<std::size_t>(p)] = q;
      result[static_cast<std::size_t>(q)] = p;
    }

    int loops = 0;
    for (int c = 0; c < n; ++c) {
      if (middle_seen[static_cast<std::size_t>(c)]) continue;
      ++loops;
      int col = c;
      bool in_lower = true;
      do {
        middle_seen[static_cast<std::size_t>(col)] = 1;
        col = in_lower ? at(l, col) : at(u, n + col) - n;
        in_lower = !in_lower;
      } while (!(col == c && in_lower));
    }
    return {PlanarMatching(n, std::move(result)), loops};
  }
};

Composite compose(const PlanarMatching& upper, const PlanarMatching& lower) {
  if (upper.strands() != lower.strands())
    throw std::invalid_argument("compose: strand counts differ (" +
                                std::to_string(upper.strands()) + " vs " +
                                std::to_string(lower.strands()) + ")");
  return Composer::run(upper, lower);
}

std::vector<PlanarMatching> enumerate_basis(int n) {
  if (n < 1 || n > kMaxBasisStrands)
    throw std::invalid_argument("enumerate_basis: n must be in 1.." +
                                std::to_string(kMaxBasisStrands));
  const int m = 2 * n;
  // circle position -> point label (1-based)
  std::vector<int> label(static_cast<std::size_t>(m));
  for (int p = 0; p < m; ++p) label[static_cast<std::size_t>(circular_position(n, p))] = p + 1;

  // Non-crossing matchings of circle positions 0..2k-1, built by choosing the
  // partner of position 0 and splitting into inside and outside intervals.
  using Arcs = std::vector<std::pair<int, int>>;
  std::vector<std::vector<Arcs>> by_size(static_cast<std::size_t>(n + 1));
  by_size[0] = {Arcs{}};
  for (int k = 1; k <= n; ++k) {
    auto& level = by_size[static_cast<std::size_t>(k)];
    for (int j = 0; j < k; ++j) {
      const int close = 2 * j + 1;
      for (const auto& inside : by_size[static_cast<std::size_t>(j)]) {
        for (const auto& outside : by_size[static_cast<std::size_t>(k - 1 - j)]) {
          Arcs arcs{{0, close}};
          for (auto [a, b] : inside) arcs.emplace_back(a + 1, b + 1);
          for (auto [a, b] : outside) arcs.emplace_back(a + close + 1, b + close + 1);
          level.push_back(std::move(arcs));
        }
      }
    }
  }
  std::vector<PlanarMatching> out;
  for (const auto& arcs : by_size[static_cast<std::size_t>(n)]) {
    std::vector<std::pair<int, int>> pairs;
    for (auto [a, b] : arcs)
      pairs.emplace_back(label[static_cast<std::size_t>(a)], label[static_cast<std::size_t>(b)]);
    out.emplace_back(n, pairs);
  }
  return out;
}

Element::Element(int n, LaurentPoly loop_value) : n_(n), loop_value_(std::move(loop_value)) {}

Element Element::diagram(const PlanarMatching& d, LaurentPoly coeff, LaurentPoly loop_value) {
  Element e(d.strands(), std::move(loop_value));
  e.add(d, coeff);
  return e;
}

Element Element::identity(int n, LaurentPoly loop_value) {
  return diagram(PlanarMatching::identity(n), LaurentPoly(1), std::move(loop_value));
}

Element Element::generator(int n, int i, LaurentPoly loop_value) {
  return diagram(PlanarMatching::generator(n, i), LaurentPoly(1), std::move(loop_value));
}

LaurentPoly Element::coeff(const PlanarMatching& d) const {
  auto it = terms_.find(d);
  return it == terms_.end() ? LaurentPoly() : it->second;
}

void Element::add(const PlanarMatching& d, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(d, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Element& Element::operator+=(const Element& o) {
  if (o.n_ != n_) throw std::invalid_argument("tl::Element: strand counts differ");
  for (const auto& [d, c] : o.terms_) add(d, c);
  return *this;
}

Element& Element::operator*=(const LaurentPoly& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [d, coeff] : terms_) coeff *= c;
  return *this;
}

Element operator*(const Element& a, const Element& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("tl::Element: strand counts differ");
  Element out(a.n_, a.loop_value_);
  for (const auto& [da, ca] : a.terms_) {
    for (const auto& [db, cb] : b.terms_) {
      auto [d, loops] = compose(da, db);
      out.add(d, ca * cb * a.loop_value_.pow(static_cast<unsigned>(loops)));
    }
  }
  return out;
}

std::string Element::to_string(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [d, c] : terms_) {
    if (!first) out += " + ";
    first = false;
    out += "(" + c.to_string(var) + ")" + d.to_string();
  }
  return out;
}

bool Report::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

std::string Report::to_text() const {
  std::ostringstream os;
  os << title << '\n';
  for (const auto& c : checks)
    os << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.name
       << (c.detail.empty() ? "" : "  " + c.detail) << '\n';
  os << (all_pass() ? "all checks pass" : "some checks FAILED") << '\n';
  return os.str();
}

Report verify_relations(int n) {
  if (n < 1) throw std::invalid_argument("verify_relations: n must be positive");
  Report r{"TL_" + std::to_string(n) + " defining relations", {}};
  auto U = [n](int i) { return Element::generator(n, i); };
  const LaurentPoly delta = Element::formal_delta();
  for (int i = 1; i < n; ++i) {
    std::string idx = std::to_string(i);
    r.checks.push_back({"U" + idx + "^2 = d U" + idx, U(i) * U(i) == U(i) * delta, ""});
    for (int j : {i - 1, i + 1}) {
      if (j < 1 || j >= n) continue;
      std::string jdx = std::to_string(j);
      r.checks.push_back(
          {"U" + idx + " U" + jdx + " U" + idx + " = U" + idx, U(i) * U(j) * U(i) == U(i), ""});
    }
    for (int j = i + 2; j < n; ++j) {
      std::string jdx = std::to_string(j);
      r.checks.push_back(
          {"U" + idx + " U" + jdx + " = U" + jdx + " U" + idx, U(i) * U(j) == U(j) * U(i), ""});
    }
  }
  return r;
}

Element extainer_image(algebra::Extainer x) {
  Element u1 = Element::generator(3, 1), u2 = Element::generator(3, 2);
  switch (x) {
    case algebra::Extainer::E: return u1;
    case algebra::Extainer::F: return u2;
    case algebra::Extainer::G: return u1 * u2;
    case algebra::Extainer::H: return u2 * u1;
  }
  throw std::logic_error("extainer_image: bad extainer");
}

Element specialize(const algebra::Element& e) {
  Element out(3);
  for (const auto& [key, c] : e.terms()) {
    const auto& [word, mono] = key;
    // <> and [] become d; [> and <] become 1.
    unsigned delta_power = mono.exps[0] + mono.exps[1];
    LaurentPoly scalar = LaurentPoly::monomial(c, static_cast<int>(delta_power));
    if (word.empty()) {
      out += Element::identity(3) * scalar;
      continue;
    }
    bool matched = false;
    for (auto x : algebra::kExtainers) {
      if (algebra::extainer_word(x) == word) {
        out += extainer_image(x) * scalar;
        matched = true;
      }
    }
    if (!matched)
      throw std::invalid_argument("specialize: word " + algebra::to_string(word) +
                                  " has no TL image");
  }
  return out;
}

Report boundary_embedding() {
  using namespace algebra;
  Report r{"container/extainer table in TL_3 with [> = <] = 1, <> = [] = d", {}};
  auto table = full_table();
  for (auto x : kExtainers) {
    for (auto y : kExtainers) {
      const Element& product_entry =
          specialize(table[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]);
      Element direct = extainer_image(x) * extainer_image(y);
      std::string name = std::string(1, extainer_name(x)) + extainer_name(y);
      r.checks.push_back({name, product_entry == direct,
                          table[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]
                                  .to_string(true) +
                              "  ->  " + product_entry.to_string()});
    }
  }
  auto word = [](Extainer x) { return algebra::Element::from_word(extainer_word(x)); };
  auto efe = multiply(multiply(word(Extainer::E), word(Extainer::F)), word(Extainer::E));
  Element u1 = Element::generator(3, 1), u2 = Element::generator(3, 2);
  r.checks.push_back({"EFE = U1 U2 U1 = U1", specialize(efe) == u1 && u1 * u2 * u1 == u1,
                      efe.to_string(true) + "  ->  " + specialize(efe).to_string()});
  return r;
}

namespace {

// Nesting height of each arc among `arcs` (columns, a < b); innermost arcs get 1.
std::vector<int> arc_heights(const std::vector<std::pair<int, int>>& arcs) {
  std::vector<int> h(arcs.size(), 1);
  std::vector<std::size_t> order(arcs.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return arcs[x].second - arcs[x].first < arcs[y].second - arcs[y].first;
  });
  for (std::size_t i : order)
    for (std::size_t j : order)
      if (arcs[i].first < arcs[j].first && arcs[j].second < arcs[i].second) h[i] = std::max(h[i], h[j] + 1);
  return h;
}

void trim(std::string& line) {
  while (!line.empty() && line.back() == ' ') line.pop_back();
}

}  // namespace

std::string render_ascii(const PlanarMatching& d) {
  const int n = d.strands();
  if (n == 0) return "";
  const std::size_t width = static_cast<std::size_t>(2 * n - 1);
  auto col = [n](int p) { return p <= n ? 2 * (p - 1) : 2 * (p - n - 1); };
  std::vector<std::pair<int, int>> caps, cups;
  std::vector<std::pair<int, int>> through;  // (top column, bottom column)
  for (auto [a, b] : d.pairs()) {
    if (b <= n) {
      caps.emplace_back(col(a), col(b));
    } else if (a > n) {
      cups.emplace_back(std::min(col(a), col(b)), std::max(col(a), col(b)));
    } else {
      through.emplace_back(col(a), col(b));
    }
  }
  std::sort(through.begin(), through.end());
  const auto cap_h = arc_heights(caps), cup_h = arc_heights(cups);
  const int top_rows = caps.empty() ? 0 : *std::max_element(cap_h.begin(), cap_h.end());
  const int bottom_rows = cups.empty() ? 0 : *std::max_element(cup_h.begin(), cup_h.end());

  std::vector<std::string> lines;
  std::vector<int> at;  // current column of each through strand
  for (auto [t, b] : through) at.push_back(t);
  auto strands_row = [&]() {
    std::string row(width, ' ');
    for (int c : at) row[static_cast<std::size_t>(c)] = '|';
    return row;
  };

  for (int r = 1; r <= std::max(top_rows, 1); ++r) {
    std::string row = strands_row();
    for (std::size_t k = 0; k < caps.size(); ++k) {
      auto [a, b] = caps[k];
      if (r > cap_h[k]) continue;
      if (r == cap_h[k])
        for (int x = a + 1; x < b; ++x) row[static_cast<std::size_t>(x)] = '_';
      row[static_cast<std::size_t>(a)] = '|';
      row[static_cast<std::size_t>(b)] = '|';
    }
    lines.push_back(row);
  }

  // Right-movers from the right, then left-movers from the left, so no jog crosses a strand.
  std::vector<std::size_t> jogs;
  for (std::size_t k = through.size(); k-- > 0;)
    if (through[k].second > through[k].first) jogs.push_back(k);
  for (std::size_t k = 0; k < through.size(); ++k)
    if (through[k].second < through[k].first) jogs.push_back(k);
  for (std::size_t k : jogs) {
    std::string row = strands_row();
    const int lo = std::min(through[k].first, through[k].second), hi = std::max(through[k].first, through[k].second);
    for (int x = lo; x <= hi; ++x) row[static_cast<std::size_t>(x)] = '-';
    row[static_cast<std::size_t>(lo)] = '+';
    row[static_cast<std::size_t>(hi)] = '+';
    lines.push_back(row);
    at[k] = through[k].second;
  }

  for (int r = bottom_rows; r >= 1; --r) {
    std::string row = strands_row();
    for (std::size_t k = 0; k < cups.size(); ++k) {
      auto [a, b] = cups[k];
      if (r > cup_h[k]) continue;
      if (r == cup_h[k]) {
        for (int x = a + 1; x < b; ++x) row[static_cast<std::size_t>(x)] = '_';
      } else {
        row[static_cast<std::size_t>(a)] = '|';
        row[static_cast<std::size_t>(b)] = '|';
      }
    }
    lines.push_back(row);
  }
  if (!cups.empty()) {
    std::string row = strands_row();
    for (auto [a, b] : cups) {
      row[static_cast<std::size_t>(a)] = '|';
      row[static_cast<std::size_t>(b)] = '|';
    }
    lines.push_back(row);
  }

  std::string out;
  for (std::string& line : lines) {
    trim(line);
    out += line + '\n';
  }
  return out;
}

}  // namespace symbio::tl
