#include "symbio/protocell.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <thread>

namespace symbio::proto {

namespace {

struct Step {
  Dir dir;
  Dir back;
  int dx, dy;
};
constexpr std::array<Step, 4> kSteps = {{{Right, Left, 1, 0}, {Down, Up, 0, 1}, {Left, Right, -1, 0}, {Up, Down, 0, -1}}};

bool in_unit(double v) { return v >= 0.0 && v <= 1.0; }

}  // namespace

void Params::validate() const {
  if (!in_unit(p_bond) || !in_unit(p_decay) || !in_unit(p_move) || !in_unit(decay_damp))
    throw std::invalid_argument("probabilities must lie in [0, 1]");
  if (bond_boost < 1.0) throw std::invalid_argument("bond boost must be at least 1");
  if (catalyst_radius < 0) throw std::invalid_argument("catalyst radius must be non-negative");
}

State::State(int width, int height, std::uint64_t seed)
    : width_(width), height_(height), rng_(seed) {
  if (width < 1 || height < 1 || width > 4096 || height > 4096)
    throw std::invalid_argument("lattice size out of range");
  content_.assign(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), Content::Empty);
  bonds_.assign(content_.size(), 0);
}

State State::soup(int width, int height, int catalysts, double substrate_fraction, std::uint64_t seed) {
  State s(width, height, seed);
  const std::size_t area = s.content_.size();
  if (catalysts < 0 || static_cast<std::size_t>(catalysts) > area)
    throw std::invalid_argument("catalyst count out of range");
  if (!in_unit(substrate_fraction)) throw std::invalid_argument("substrate fraction must lie in [0, 1]");
  const auto substrate = static_cast<std::size_t>(std::llround(substrate_fraction * static_cast<double>(area)));
  if (substrate + static_cast<std::size_t>(catalysts) > area) throw std::invalid_argument("lattice too small for soup");
  std::vector<std::size_t> order(area);
  std::iota(order.begin(), order.end(), 0);
  // Fisher-Yates with our own draws so the layout does not depend on the library's shuffle.
  for (std::size_t i = area; i > 1; --i) std::swap(order[i - 1], order[s.pick(i)]);
  for (std::size_t i = 0; i < static_cast<std::size_t>(catalysts); ++i) s.content_[order[i]] = Content::Catalyst;
  for (std::size_t i = 0; i < substrate; ++i) s.content_[order[static_cast<std::size_t>(catalysts) + i]] = Content::Substrate;
  return s;
}

double State::uniform() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }

std::size_t State::pick(std::size_t n) { return static_cast<std::size_t>(uniform() * static_cast<double>(n)); }

int State::bond_count(int x, int y) const { return std::popcount(bonds_[index(x, y)]); }

std::size_t State::total_bonds() const {
  std::size_t n = 0;
  for (auto b : bonds_) n += static_cast<std::size_t>(std::popcount(b));
  return n / 2;
}

std::size_t State::count(Content c) const { return static_cast<std::size_t>(std::count(content_.begin(), content_.end(), c)); }

void State::place(int x, int y, Content c) {
  if (!inside(x, y)) throw std::out_of_range("cell outside lattice");
  if (bonds_[index(x, y)] != 0) throw std::logic_error("cannot overwrite a bonded cell");
  content_[index(x, y)] = c;
}

void State::bond(int x0, int y0, int x1, int y1) {
  if (!inside(x0, y0) || !inside(x1, y1)) throw std::out_of_range("cell outside lattice");
  for (const Step& st : kSteps) {
    if (x0 + st.dx != x1 || y0 + st.dy != y1) continue;
    if (at(x0, y0) != Content::Substrate || at(x1, y1) != Content::Substrate)
      throw std::logic_error("only substrate can bond");
    if (bonds_[index(x0, y0)] & st.dir) return;
    if (bond_count(x0, y0) >= 2 || bond_count(x1, y1) >= 2) throw std::logic_error("substrate already holds two bonds");
    bonds_[index(x0, y0)] |= st.dir;
    bonds_[index(x1, y1)] |= st.back;
    return;
  }
  throw std::logic_error("bonded cells must be adjacent");
}

bool State::invariants_hold() const {
  for (int y = 0; y < height_; ++y)
    for (int x = 0; x < width_; ++x) {
      const std::uint8_t b = bonds_[index(x, y)];
      if (b == 0) continue;
      if (at(x, y) != Content::Substrate || std::popcount(b) > 2) return false;
      for (const Step& st : kSteps) {
        if (!(b & st.dir)) continue;
        const int nx = x + st.dx, ny = y + st.dy;
        if (!inside(nx, ny) || !(bonds_[index(nx, ny)] & st.back)) return false;
      }
    }
  return true;
}

std::string State::render() const {
  // Each cell is drawn at even coordinates; bonds fill the odd gaps.
  std::string out;
  for (int y = 0; y < height_; ++y) {
    std::string row, below;
    for (int x = 0; x < width_; ++x) {
      const Content c = at(x, y);
      row.push_back(c == Content::Empty ? '.' : c == Content::Substrate ? 'o' : 'C');
      if (x + 1 < width_) row.push_back(bonds_[index(x, y)] & Right ? '-' : ' ');
      below.push_back(bonds_[index(x, y)] & Down ? '|' : ' ');
      if (x + 1 < width_) below.push_back(' ');
    }
    out += row + '\n';
    if (y + 1 < height_) {
      while (!below.empty() && below.back() == ' ') below.pop_back();
      out += below + '\n';
    }
  }
  return out;
}

bool operator==(const State& a, const State& b) {
  return a.width_ == b.width_ && a.height_ == b.height_ && a.content_ == b.content_ && a.bonds_ == b.bonds_;
}

void step(State& s, const Params& p) {
  const int w = s.width_, h = s.height_;

  // (1) moves
  std::vector<char> moved(s.content_.size(), 0);
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) {
      const std::size_t i = s.index(x, y);
      if (s.content_[i] == Content::Empty || s.bonds_[i] != 0 || moved[i]) continue;
      if (s.uniform() >= p.p_move) continue;
      std::array<std::size_t, 4> empty{};
      std::size_t n = 0;
      for (const Step& st : kSteps) {
        const int nx = x + st.dx, ny = y + st.dy;
        if (s.inside(nx, ny) && s.content_[s.index(nx, ny)] == Content::Empty) empty[n++] = s.index(nx, ny);
      }
      if (n == 0) continue;
      const std::size_t to = empty[s.pick(n)];
      s.content_[to] = s.content_[i];
      s.content_[i] = Content::Empty;
      moved[to] = 1;
    }

  // catalyst neighbourhood after moving
  std::vector<char> near(s.content_.size(), 0);
  const int r = p.catalyst_radius;
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) {
      if (s.at(x, y) != Content::Catalyst) continue;
      for (int dy = -r; dy <= r; ++dy)
        for (int dx = -(r - std::abs(dy)); dx <= r - std::abs(dy); ++dx)
          if (s.inside(x + dx, y + dy)) near[s.index(x + dx, y + dy)] = 1;
    }

  // (2) bonding, right and down neighbours of each cell
  const double boosted = std::min(1.0, p.p_bond * p.bond_boost);
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) {
      const std::size_t i = s.index(x, y);
      if (s.content_[i] != Content::Substrate) continue;
      for (int k = 0; k < 2; ++k) {
        const Step& st = kSteps[static_cast<std::size_t>(k)];
        const int nx = x + st.dx, ny = y + st.dy;
        if (!s.inside(nx, ny)) continue;
        const std::size_t j = s.index(nx, ny);
        if (s.content_[j] != Content::Substrate || (s.bonds_[i] & st.dir)) continue;
        if (std::popcount(s.bonds_[i]) >= 2 || std::popcount(s.bonds_[j]) >= 2) continue;
        const double prob = (near[i] || near[j]) ? boosted : p.p_bond;
        if (s.uniform() < prob) {
          s.bonds_[i] |= st.dir;
          s.bonds_[j] |= st.back;
        }
      }
    }

  // (3) decay
  const double damped = p.p_decay * p.decay_damp;
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) {
      const std::size_t i = s.index(x, y);
      for (int k = 0; k < 2; ++k) {
        const Step& st = kSteps[static_cast<std::size_t>(k)];
        if (!(s.bonds_[i] & st.dir)) continue;
        const std::size_t j = s.index(x + st.dx, y + st.dy);
        const double prob = (near[i] || near[j]) ? damped : p.p_decay;
        if (s.uniform() < prob) {
          s.bonds_[i] &= static_cast<std::uint8_t>(~st.dir);
          s.bonds_[j] &= static_cast<std::uint8_t>(~st.back);
        }
      }
    }
}

int count_membranes(const State& s) {
  const int w = s.width(), h = s.height();
  std::vector<std::pair<int, int>> catalysts;
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x)
      if (s.at(x, y) == Content::Catalyst) catalysts.emplace_back(x, y);
  if (catalysts.empty()) return 0;

  std::vector<char> seen(static_cast<std::size_t>(w) * static_cast<std::size_t>(h), 0);
  int membranes = 0;
  for (int y0 = 0; y0 < h; ++y0)
    for (int x0 = 0; x0 < w; ++x0) {
      const std::size_t start = static_cast<std::size_t>(y0) * static_cast<std::size_t>(w) + static_cast<std::size_t>(x0);
      if (seen[start] || s.bond_count(x0, y0) == 0) continue;
      // Walk the component; with at most two bonds per cell it is a path or a cycle.
      std::vector<std::pair<int, int>> loop;
      bool cycle = true;
      int x = x0, y = y0, px = -1, py = -1;
      while (true) {
        const std::size_t i = static_cast<std::size_t>(y) * static_cast<std::size_t>(w) + static_cast<std::size_t>(x);
        if (seen[i]) break;
        seen[i] = 1;
        loop.emplace_back(x, y);
        if (s.bond_count(x, y) < 2) cycle = false;
        int nx = -1, ny = -1;
        for (const Step& st : kSteps) {
          if (!(s.bonds_at(x, y) & st.dir)) continue;
          const int cx = x + st.dx, cy = y + st.dy;
          if (cx == px && cy == py) continue;
          nx = cx;
          ny = cy;
          break;
        }
        if (nx < 0) break;
        px = x;
        py = y;
        x = nx;
        y = ny;
      }
      if (!cycle) {
        // mark the rest of the path reachable from the start in the other direction
        std::vector<std::pair<int, int>> stack{{x0, y0}};
        while (!stack.empty()) {
          auto [cx, cy] = stack.back();
          stack.pop_back();
          for (const Step& st : kSteps) {
            if (!(s.bonds_at(cx, cy) & st.dir)) continue;
            const int nx = cx + st.dx, ny = cy + st.dy;
            const std::size_t j = static_cast<std::size_t>(ny) * static_cast<std::size_t>(w) + static_cast<std::size_t>(nx);
            if (!seen[j]) {
              seen[j] = 1;
              stack.emplace_back(nx, ny);
            }
          }
        }
        continue;
      }
      if (loop.size() < 8) continue;  // the smallest lattice ring with an interior cell
      bool encloses = false;
      for (auto [cx, cy] : catalysts) {
        // even-odd ray cast toward +x through cell centres, vertices nudged by a half row
        bool inside = false;
        for (std::size_t k = 0, m = loop.size(); k < m; ++k) {
          const auto [ax, ay] = loop[k];
          const int by = loop[(k + 1) % m].second;
          if (ay == by) continue;
          const double ray_y = cy + 0.5;
          if ((ay < ray_y) != (by < ray_y) && ax > cx) inside = !inside;
        }
        if (inside) {
          encloses = true;
          break;
        }
      }
      if (encloses) ++membranes;
    }
  return membranes;
}

RunSummary run(const Experiment& e, const Params& p, std::uint64_t seed) {
  p.validate();
  State s = State::soup(e.width, e.height, e.catalysts, e.substrate_fraction, seed);
  RunSummary out;
  out.seed = seed;
  out.catalysts = e.catalysts;
  long total = 0;
  for (int t = 0; t < e.steps; ++t) {
    step(s, p);
    total += count_membranes(s);
  }
  out.final_membranes = count_membranes(s);
  out.mean_membranes = e.steps > 0 ? static_cast<double>(total) / e.steps : 0.0;
  out.final_bonds = s.total_bonds();
  return out;
}

std::vector<RunSummary> run_many(const Experiment& e, const Params& p, std::uint64_t first_seed, int runs,
                                 unsigned workers) {
  if (runs < 0) throw std::invalid_argument("run count must be non-negative");
  std::vector<RunSummary> out(static_cast<std::size_t>(runs));
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max(runs, 1))));
  auto body = [&](unsigned w) {
    for (std::size_t i = w; i < out.size(); i += workers) out[i] = run(e, p, first_seed + i);
  };
  if (workers == 1) {
    body(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(body, w);
    for (auto& t : threads) t.join();
  }
  return out;
}

}  // namespace symbio::proto
