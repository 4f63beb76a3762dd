#include "symbio/bracket.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <sstream>
#include <thread>

namespace symbio::knots {

int Layer::outgoing() const {
  switch (kind) {
    case LayerKind::Cup: return strands + 2;
    case LayerKind::Cap: return strands - 2;
    default: return strands;
  }
}

std::string Layer::to_string() const {
  std::ostringstream os;
  switch (kind) {
    case LayerKind::Identity: os << "id " << strands; break;
    case LayerKind::Cup: os << "cup " << pos << ' ' << strands; break;
    case LayerKind::Cap: os << "cap " << pos << ' ' << strands; break;
    case LayerKind::Cross:
      os << "cross " << pos << ' ' << strands << ' ' << (sign == Sign::Positive ? '+' : '-');
      break;
  }
  return os.str();
}

Tangle::Tangle(std::vector<Layer> layers) : layers_(std::move(layers)) {
  int expected = layers_.empty() ? 0 : layers_.front().strands;
  for (std::size_t k = 0; k < layers_.size(); ++k) {
    const Layer& l = layers_[k];
    const int index = static_cast<int>(k) + 1;
    if (l.strands < 0) throw TangleError(index, "layer " + std::to_string(index) + ": negative strand count");
    if (l.strands != expected)
      throw TangleError(index, "layer " + std::to_string(index) + " (" + l.to_string() +
                                   ") expects " + std::to_string(l.strands) +
                                   " strands but receives " + std::to_string(expected));
    bool ok = true;
    switch (l.kind) {
      case LayerKind::Identity: break;
      case LayerKind::Cup: ok = l.pos >= 1 && l.pos <= l.strands + 1; break;
      case LayerKind::Cap:
      case LayerKind::Cross: ok = l.pos >= 1 && l.pos < l.strands; break;
    }
    if (!ok)
      throw TangleError(index, "layer " + std::to_string(index) + " (" + l.to_string() +
                                   "): position out of range");
    expected = l.outgoing();
  }
}

int Tangle::source_strands() const { return layers_.empty() ? 0 : layers_.front().strands; }
int Tangle::target_strands() const { return layers_.empty() ? 0 : layers_.back().outgoing(); }

int Tangle::crossings() const {
  return static_cast<int>(std::count_if(layers_.begin(), layers_.end(),
                                        [](const Layer& l) { return l.kind == LayerKind::Cross; }));
}

Tangle Tangle::mirrored() const {
  auto layers = layers_;
  for (auto& l : layers)
    if (l.kind == LayerKind::Cross)
      l.sign = l.sign == Sign::Positive ? Sign::Negative : Sign::Positive;
  return Tangle(std::move(layers));
}

std::string Tangle::to_string() const {
  std::string out;
  for (const auto& l : layers_) {
    if (!out.empty()) out += " / ";
    out += l.to_string();
  }
  return out;
}

Tangle parse_tangle(std::string_view text) {
  std::vector<Layer> layers;
  std::string field;
  auto flush = [&]() {
    std::istringstream is(field);
    std::string word;
    field.clear();
    if (!(is >> word)) return;
    const int index = static_cast<int>(layers.size()) + 1;
    auto fail = [&](const std::string& why) -> TangleError {
      return TangleError(index, "layer " + std::to_string(index) + ": " + why);
    };
    Layer l{};
    if (word == "id") {
      l.kind = LayerKind::Identity;
      if (!(is >> l.strands)) throw fail("expected 'id n'");
    } else if (word == "cup" || word == "cap" || word == "cross") {
      l.kind = word == "cup" ? LayerKind::Cup : word == "cap" ? LayerKind::Cap : LayerKind::Cross;
      if (!(is >> l.pos >> l.strands)) throw fail("expected '" + word + " i n'");
      if (l.kind == LayerKind::Cross) {
        std::string s;
        if (!(is >> s) || (s != "+" && s != "-")) throw fail("crossing sign must be + or -");
        l.sign = s == "+" ? Sign::Positive : Sign::Negative;
      }
    } else {
      throw fail("unknown layer '" + word + "'");
    }
    std::string extra;
    if (is >> extra) throw fail("unexpected token '" + extra + "'");
    layers.push_back(l);
  };
  for (char ch : text) {
    if (ch == '/' || ch == '\n' || ch == ';') flush();
    else field.push_back(ch);
  }
  flush();
  return Tangle(std::move(layers));
}

namespace {

std::string braid_closure(int crossings) {
  std::string text = "cup 1 0 / cup 2 2";
  for (int k = 0; k < crossings; ++k) text += " / cross 1 4 +";
  return text + " / cap 2 4 / cap 1 2";
}

}  // namespace

const std::vector<std::string>& diagram_names() {
  static const std::vector<std::string> names = {"unknot", "hopf", "trefoil", "kinked-unknot"};
  return names;
}

std::optional<Tangle> named_diagram(std::string_view name) {
  if (name == "unknot") return parse_tangle("cup 1 0 / cap 1 2");
  if (name == "hopf") return parse_tangle(braid_closure(2));
  if (name == "trefoil") return parse_tangle(braid_closure(3));
  if (name == "kinked-unknot") return parse_tangle("cup 1 0 / cup 2 2 / cross 1 4 + / cap 2 4 / cap 1 2");
  return std::nullopt;
}

LaurentPoly loop_value() { return LaurentPoly::monomial(-1, 2) + LaurentPoly::monomial(-1, -2); }

tl::Element expand_crossing(Sign s) {
  const int e = s == Sign::Positive ? 1 : -1;
  tl::Element out = tl::Element::identity(2, loop_value()) * LaurentPoly::monomial(1, e);
  out += tl::Element::generator(2, 1, loop_value()) * LaurentPoly::monomial(1, -e);
  return out;
}

namespace {

void require_closed(const Tangle& d) {
  if (!d.closed())
    throw TangleError(0, "diagram is not closed: " + std::to_string(d.source_strands()) +
                             " -> " + std::to_string(d.target_strands()) + " strands");
  if (d.crossings() > kMaxCrossings)
    throw TangleError(0, "diagram has " + std::to_string(d.crossings()) +
                             " crossings; the budget is " + std::to_string(kMaxCrossings));
}

// Union-find over strand segments; each cup or cap-cup smoothing creates one node.
class Segments {
 public:
  int make() {
    parent_.push_back(static_cast<int>(parent_.size()));
    return parent_.back();
  }
  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      auto& p = parent_[static_cast<std::size_t>(x)];
      p = parent_[static_cast<std::size_t>(p)];
      x = p;
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) {
      parent_[static_cast<std::size_t>(a)] = b;
      --components_;
    }
  }
  void reset() {
    parent_.clear();
    components_ = 0;
  }
  int make_counted() {
    ++components_;
    return make();
  }
  int components() const { return components_; }

 private:
  std::vector<int> parent_;
  int components_ = 0;
};

using StateCounts = std::map<std::pair<int, int>, std::int64_t>;  // (A exponent, loops) -> count

void sum_range(const Tangle& d, std::uint64_t lo, std::uint64_t hi, StateCounts& out) {
  Segments seg;
  std::vector<int> at;
  for (std::uint64_t state = lo; state < hi; ++state) {
    seg.reset();
    at.clear();
    int exponent = 0;
    int bit = 0;
    for (const Layer& l : d.layers()) {
      auto pos = static_cast<std::size_t>(l.pos - 1);
      auto cap_at = [&](std::size_t p) {
        seg.unite(at[p], at[p + 1]);
        at.erase(at.begin() + static_cast<std::ptrdiff_t>(p),
                 at.begin() + static_cast<std::ptrdiff_t>(p) + 2);
      };
      auto cup_at = [&](std::size_t p) {
        int s = seg.make_counted();
        at.insert(at.begin() + static_cast<std::ptrdiff_t>(p), 2, s);
      };
      switch (l.kind) {
        case LayerKind::Identity: break;
        case LayerKind::Cup: cup_at(pos); break;
        case LayerKind::Cap: cap_at(pos); break;
        case LayerKind::Cross: {
          const bool vertical = ((state >> bit) & 1u) != 0;
          ++bit;
          const int s = l.sign == Sign::Positive ? 1 : -1;
          if (vertical) {
            exponent -= s;
            cap_at(pos);
            cup_at(pos);
          } else {
            exponent += s;
          }
          break;
        }
      }
    }
    ++out[{exponent, seg.components()}];
  }
}

}  // namespace

LaurentPoly state_sum(const Tangle& d, unsigned workers) {
  require_closed(d);
  const std::uint64_t total = std::uint64_t{1} << d.crossings();
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::min<std::uint64_t>(total, 64))));
  std::vector<StateCounts> partial(workers);
  if (workers == 1) {
    sum_range(d, 0, total, partial[0]);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      std::uint64_t lo = total * w / workers, hi = total * (w + 1) / workers;
      pool.emplace_back([&, lo, hi, w] { sum_range(d, lo, hi, partial[w]); });
    }
    for (auto& t : pool) t.join();
  }
  StateCounts merged;
  for (const auto& p : partial)
    for (const auto& [k, c] : p) merged[k] += c;
  LaurentPoly result;
  const LaurentPoly delta = loop_value();
  for (const auto& [k, c] : merged)
    result += LaurentPoly::monomial(c, k.first) * delta.pow(static_cast<unsigned>(k.second));
  return result;
}

namespace {

// Non-crossing matching on the current top boundary (0-based partner table).
using Boundary = std::vector<int>;
using BoundaryState = std::map<Boundary, LaurentPoly>;

void add_to(BoundaryState& s, Boundary b, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = s.try_emplace(std::move(b), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) s.erase(it);
  }
}

Boundary with_cup(const Boundary& b, int p) {
  Boundary out;
  out.reserve(b.size() + 2);
  auto shift = [p](int q) { return q >= p ? q + 2 : q; };
  for (std::size_t k = 0; k < b.size(); ++k) {
    if (static_cast<int>(k) == p) {
      out.push_back(p + 1);
      out.push_back(p);
    }
    out.push_back(shift(b[k]));
  }
  if (static_cast<int>(b.size()) == p) {
    out.push_back(p + 1);
    out.push_back(p);
  }
  return out;
}

// Joins points p and p+1; returns the new boundary and whether a loop closed.
std::pair<Boundary, bool> with_cap(const Boundary& b, int p) {
  Boundary joined = b;
  const auto up = static_cast<std::size_t>(p);
  const bool loop = b[up] == p + 1;
  if (!loop) {
    int a = b[up], c = b[up + 1];
    joined[static_cast<std::size_t>(a)] = c;
    joined[static_cast<std::size_t>(c)] = a;
  }
  Boundary out;
  out.reserve(b.size() - 2);
  for (std::size_t k = 0; k < joined.size(); ++k) {
    if (k == up || k == up + 1) continue;
    int q = joined[k];
    out.push_back(q > p + 1 ? q - 2 : q);
  }
  return {out, loop};
}

}  // namespace

LaurentPoly tl_threading(const Tangle& d) {
  require_closed(d);
  const LaurentPoly delta = loop_value();
  BoundaryState state;
  state[Boundary{}] = LaurentPoly(1);
  for (const Layer& l : d.layers()) {
    const int p = l.pos - 1;
    BoundaryState next;
    for (const auto& [b, c] : state) {
      switch (l.kind) {
        case LayerKind::Identity: add_to(next, b, c); break;
        case LayerKind::Cup: add_to(next, with_cup(b, p), c); break;
        case LayerKind::Cap: {
          auto [nb, loop] = with_cap(b, p);
          add_to(next, std::move(nb), loop ? c * delta : c);
          break;
        }
        case LayerKind::Cross: {
          const int e = l.sign == Sign::Positive ? 1 : -1;
          add_to(next, b, c * LaurentPoly::monomial(1, e));
          auto [capped, loop] = with_cap(b, p);
          add_to(next, with_cup(capped, p), (loop ? c * delta : c) * LaurentPoly::monomial(1, -e));
          break;
        }
      }
    }
    state = std::move(next);
  }
  auto it = state.find(Boundary{});
  return it == state.end() ? LaurentPoly() : it->second;
}

BracketValue evaluate_bracket(const Tangle& d, unsigned workers) {
  LaurentPoly oracle = state_sum(d, workers);
  LaurentPoly threaded = tl_threading(d);
  if (!(oracle == threaded))
    throw std::logic_error("bracket evaluators disagree: state sum " + oracle.to_string() +
                           " vs TL threading " + threaded.to_string());
  BracketValue v{oracle, oracle};
  if (!d.layers().empty()) {
    auto q = oracle.divide_exact(loop_value());
    if (!q) throw std::logic_error("bracket of a non-empty diagram is not divisible by the loop value");
    v.normalized = *q;
  }
  return v;
}

R2Check verify_r2(int n, int i) {
  if (n < 2 || i < 1 || i >= n) throw std::invalid_argument("verify_r2: need 1 <= i < n");
  using tl::PlanarMatching;
  const auto id = PlanarMatching::identity(n);
  const auto u = PlanarMatching::generator(n, i);
  struct Term {
    LaurentPoly coeff;
    PlanarMatching d;
  };
  auto A = [](int e) { return LaurentPoly::monomial(1, e); };
  const std::vector<Term> pos{{A(1), id}, {A(-1), u}};
  const std::vector<Term> neg{{A(-1), id}, {A(1), u}};

  // diagram -> loop count -> coefficient in A, before the loop value is substituted
  std::map<PlanarMatching, std::map<int, LaurentPoly>> symbolic;
  for (const auto& a : pos) {
    for (const auto& b : neg) {
      auto [d, loops] = tl::compose(a.d, b.d);
      symbolic[d][loops] += a.coeff * b.coeff;
    }
  }
  R2Check r{false, "", LaurentPoly(), tl::Element(n, loop_value())};
  const LaurentPoly delta = loop_value();
  for (const auto& [d, by_loops] : symbolic) {
    LaurentPoly total;
    for (const auto& [loops, c] : by_loops) total += c * delta.pow(static_cast<unsigned>(loops));
    r.product += tl::Element::diagram(d, total, delta);
  }
  if (auto it = symbolic.find(u); it != symbolic.end()) {
    std::string text;
    for (const auto& [loops, c] : it->second) {
      if (c.is_zero()) continue;
      std::string part = loops == 0 ? c.to_string()
                         : c == LaurentPoly(1)
                             ? (loops == 1 ? "d" : "d^" + std::to_string(loops))
                             : "(" + c.to_string() + ")" +
                                   (loops == 1 ? "d" : "d^" + std::to_string(loops));
      text += (text.empty() ? "" : " + ") + part;
      r.u_coefficient += c * delta.pow(static_cast<unsigned>(loops));
    }
    r.u_coefficient_symbolic = text;
  }
  r.holds = r.product == tl::Element::identity(n, delta);
  return r;
}

}  // namespace symbio::knots
