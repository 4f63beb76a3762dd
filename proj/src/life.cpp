#include "symbio/life.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <unordered_map>

namespace symbio::life {

CellSet::CellSet(std::vector<Cell> cells) : cells_(std::move(cells)) {
  std::sort(cells_.begin(), cells_.end());
  cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
}

bool CellSet::contains(Cell c) const { return std::binary_search(cells_.begin(), cells_.end(), c); }

bool CellSet::contains_all(const CellSet& other) const {
  return std::includes(cells_.begin(), cells_.end(), other.cells_.begin(), other.cells_.end());
}

bool CellSet::disjoint(const CellSet& other) const { return (*this & other).empty(); }

Box CellSet::bounds() const {
  Box b;
  if (cells_.empty()) return b;
  b.min_x = b.max_x = cells_.front().x;
  b.min_y = cells_.front().y;
  b.max_y = cells_.back().y;
  for (const Cell& c : cells_) {
    b.min_x = std::min(b.min_x, c.x);
    b.max_x = std::max(b.max_x, c.x);
  }
  return b;
}

CellSet CellSet::translated(int dx, int dy) const {
  CellSet out;
  out.cells_ = cells_;
  for (Cell& c : out.cells_) {
    c.x += dx;
    c.y += dy;
  }
  return out;
}

CellSet CellSet::normalized() const {
  if (cells_.empty()) return {};
  Box b = bounds();
  return translated(-b.min_x, -b.min_y);
}

CellSet operator|(const CellSet& a, const CellSet& b) {
  CellSet out;
  std::set_union(a.cells_.begin(), a.cells_.end(), b.cells_.begin(), b.cells_.end(),
                 std::back_inserter(out.cells_));
  return out;
}

CellSet operator-(const CellSet& a, const CellSet& b) {
  CellSet out;
  std::set_difference(a.cells_.begin(), a.cells_.end(), b.cells_.begin(), b.cells_.end(),
                      std::back_inserter(out.cells_));
  return out;
}

CellSet operator&(const CellSet& a, const CellSet& b) {
  CellSet out;
  std::set_intersection(a.cells_.begin(), a.cells_.end(), b.cells_.begin(), b.cells_.end(),
                        std::back_inserter(out.cells_));
  return out;
}

const std::array<Linear, 8>& square_symmetries() {
  static const std::array<Linear, 8> syms = {{
      {1, 0, 0, 1},    // identity
      {0, -1, 1, 0},   // rotate 90
      {-1, 0, 0, -1},  // rotate 180
      {0, 1, -1, 0},   // rotate 270
      {-1, 0, 0, 1},   // mirror x
      {1, 0, 0, -1},   // mirror y
      {0, 1, 1, 0},    // transpose
      {0, -1, -1, 0},  // anti-transpose
  }};
  return syms;
}

const char* symmetry_name(const Linear& m) {
  static const std::array<const char*, 8> names = {"identity", "rot90",    "rot180",    "rot270",
                                                   "mirror-x", "mirror-y", "transpose", "anti-transpose"};
  const auto& syms = square_symmetries();
  for (std::size_t i = 0; i < syms.size(); ++i)
    if (syms[i] == m) return names[i];
  return "?";
}

Cell RigidMotion::apply(Cell p) const {
  return {linear.a * p.x + linear.b * p.y + dx, linear.c * p.x + linear.d * p.y + dy};
}

CellSet RigidMotion::apply(const CellSet& s) const {
  std::vector<Cell> out;
  out.reserve(s.size());
  for (const Cell& c : s.cells()) out.push_back(apply(c));
  return CellSet(std::move(out));
}

RigidMotion RigidMotion::compose(const RigidMotion& o) const {
  RigidMotion r;
  const Linear& m = linear;
  const Linear& n = o.linear;
  r.linear = {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d, m.c * n.a + m.d * n.c,
              m.c * n.b + m.d * n.d};
  Cell t = apply(Cell{o.dx, o.dy});
  r.dx = t.x;
  r.dy = t.y;
  return r;
}

RigidMotion RigidMotion::inverse() const {
  // Square symmetries are orthogonal, so the inverse is the transpose.
  RigidMotion r;
  r.linear = {linear.a, linear.c, linear.b, linear.d};
  Cell t = RigidMotion{r.linear, 0, 0}.apply(Cell{dx, dy});
  r.dx = -t.x;
  r.dy = -t.y;
  return r;
}

std::string RigidMotion::to_string() const {
  const std::string shift = "translate(" + std::to_string(dx) + "," + std::to_string(dy) + ")";
  if (is_translation()) return dx == 0 && dy == 0 ? "identity" : shift;
  std::string out = symmetry_name(linear);
  if (dx != 0 || dy != 0) out += " then " + shift;
  return out;
}

namespace {

std::uint64_t key(int x, int y) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(x)) << 32) |
         static_cast<std::uint32_t>(y);
}

}  // namespace

CellSet life_step(const CellSet& cells) {
  std::unordered_map<std::uint64_t, std::uint8_t> counts;
  counts.reserve(cells.size() * 9);
  for (const Cell& c : cells.cells())
    for (int dy = -1; dy <= 1; ++dy)
      for (int dx = -1; dx <= 1; ++dx)
        if (dx || dy) ++counts[key(c.x + dx, c.y + dy)];
  std::vector<Cell> next;
  for (const auto& [k, n] : counts) {
    if (n != 3 && n != 2) continue;
    Cell c{static_cast<int>(static_cast<std::uint32_t>(k >> 32)),
           static_cast<int>(static_cast<std::uint32_t>(k & 0xffffffffu))};
    if (n == 3 || cells.contains(c)) next.push_back(c);
  }
  return CellSet(std::move(next));
}

CellSet life_run(const CellSet& cells, unsigned steps) {
  CellSet cur = cells;
  for (unsigned i = 0; i < steps; ++i) cur = life_step(cur);
  return cur;
}

std::vector<RigidMotion> find_embeddings(const CellSet& x, const CellSet& y, bool allow_residue,
                                         MotionGroup group) {
  std::vector<RigidMotion> out;
  if (!allow_residue && x.size() != y.size()) return out;
  if (x.empty()) {
    out.push_back(RigidMotion::identity());
    return out;
  }
  if (y.size() < x.size()) return out;
  const auto& syms = square_symmetries();
  const std::size_t n_syms = group == MotionGroup::Full ? syms.size() : 1;
  for (std::size_t s = 0; s < n_syms; ++s) {
    CellSet image = RigidMotion{syms[s], 0, 0}.apply(x);
    const Cell anchor = image.cells().front();
    for (const Cell& target : y.cells()) {
      const int dx = target.x - anchor.x, dy = target.y - anchor.y;
      bool fits = std::all_of(image.cells().begin(), image.cells().end(),
                              [&](const Cell& c) { return y.contains({c.x + dx, c.y + dy}); });
      if (fits) out.push_back({syms[s], dx, dy});
    }
  }
  return out;
}

std::optional<PeriodReport> detect_geometric_period(const CellSet& x, unsigned max_steps,
                                                    bool allow_residue, MotionGroup group) {
  if (x.empty()) return std::nullopt;
  max_steps = std::min(max_steps, 1000u);
  CellSet cur = x;
  for (unsigned p = 1; p <= max_steps; ++p) {
    cur = life_step(cur);
    auto found = find_embeddings(x, cur, allow_residue, group);
    if (!found.empty()) {
      const RigidMotion& s = found.front();
      return PeriodReport{p, s, cur - s.apply(x)};
    }
  }
  return std::nullopt;
}

CellSet load_rle(std::string_view text) {
  std::vector<Cell> cells;
  int x = 0, y = 0;
  int run = 0;
  bool header_seen = false, done = false;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size() && !done) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
      if (end == text.size()) break;
      continue;
    }
    if (line[first] == '#') continue;
    if (!header_seen && line[first] == 'x' && cells.empty() && x == 0 && y == 0) {
      header_seen = true;
      std::string lowered;
      for (char ch : line)
        if (!std::isspace(static_cast<unsigned char>(ch)))
          lowered.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
      auto rule_at = lowered.find("rule=");
      if (rule_at != std::string::npos) {
        std::string rule = lowered.substr(rule_at + 5);
        if (rule != "b3/s23" && rule != "23/3")
          throw RleError(line_no, static_cast<int>(first) + 1, "unsupported rule '" + rule + "'");
      }
      continue;
    }
    for (std::size_t i = 0; i < line.size(); ++i) {
      char ch = line[i];
      const int col = static_cast<int>(i) + 1;
      if (std::isspace(static_cast<unsigned char>(ch))) continue;
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        run = run * 10 + (ch - '0');
        if (run > 1'000'000) throw RleError(line_no, col, "run length too large");
        continue;
      }
      const int n = run == 0 ? 1 : run;
      run = 0;
      switch (ch) {
        case 'b':
        case '.': x += n; break;
        case 'o':
        case '*':
          for (int k = 0; k < n; ++k) cells.push_back({x++, y});
          break;
        case '$':
          y += n;
          x = 0;
          break;
        case '!': done = true; break;
        default: throw RleError(line_no, col, "unexpected character '" + std::string(1, ch) + "'");
      }
      if (done) break;
    }
    if (end == text.size()) break;
  }
  if (run != 0) throw RleError(line_no, 0, "dangling run count at end of pattern");
  return CellSet(std::move(cells));
}

CellSet load_rle_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw RleError(0, 0, "cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return load_rle(ss.str());
}

std::string save_rle(const CellSet& cells) {
  CellSet n = cells.normalized();
  Box b = n.bounds();
  const int w = n.empty() ? 0 : b.width(), h = n.empty() ? 0 : b.height();
  std::string body;
  auto emit = [&](int count, char tag) {
    if (count <= 0) return;
    if (count > 1) body += std::to_string(count);
    body.push_back(tag);
  };
  int pending_rows = 0;
  std::size_t i = 0;
  for (int y = 0; y < h; ++y) {
    std::vector<bool> row(static_cast<std::size_t>(w), false);
    while (i < n.size() && n.cells()[i].y == y) row[static_cast<std::size_t>(n.cells()[i++].x)] = true;
    if (y > 0) ++pending_rows;
    if (std::none_of(row.begin(), row.end(), [](bool v) { return v; })) continue;
    emit(pending_rows, '$');
    pending_rows = 0;
    int last = w - 1;
    while (last >= 0 && !row[static_cast<std::size_t>(last)]) --last;
    int x = 0;
    while (x <= last) {
      bool v = row[static_cast<std::size_t>(x)];
      int len = 0;
      while (x <= last && row[static_cast<std::size_t>(x)] == v) {
        ++x;
        ++len;
      }
      emit(len, v ? 'o' : 'b');
    }
  }
  body.push_back('!');
  std::string out = "x = " + std::to_string(w) + ", y = " + std::to_string(h) + ", rule = B3/S23\n";
  // wrap at 70 columns without splitting a run
  std::string line;
  std::string token;
  for (char ch : body) {
    token.push_back(ch);
    if (std::isdigit(static_cast<unsigned char>(ch))) continue;
    if (line.size() + token.size() > 70) {
      out += line + '\n';
      line.clear();
    }
    line += token;
    token.clear();
  }
  out += line + '\n';
  return out;
}

std::string render(const CellSet& cells, int pad) {
  if (cells.empty()) return "";
  Box b = cells.bounds();
  std::string out;
  for (int y = b.min_y - pad; y <= b.max_y + pad; ++y) {
    for (int x = b.min_x - pad; x <= b.max_x + pad; ++x) out.push_back(cells.contains({x, y}) ? '#' : '.');
    out.push_back('\n');
  }
  return out;
}

std::vector<CellSet> components(const CellSet& cells) {
  std::vector<CellSet> out;
  std::vector<char> done(cells.size(), 0);
  const auto& all = cells.cells();
  auto index_of = [&](Cell c) -> std::ptrdiff_t {
    auto it = std::lower_bound(all.begin(), all.end(), c);
    return it != all.end() && *it == c ? it - all.begin() : -1;
  };
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (done[i]) continue;
    std::vector<Cell> part, stack{all[i]};
    done[i] = 1;
    while (!stack.empty()) {
      Cell c = stack.back();
      stack.pop_back();
      part.push_back(c);
      for (int dy = -1; dy <= 1; ++dy)
        for (int dx = -1; dx <= 1; ++dx) {
          auto j = index_of({c.x + dx, c.y + dy});
          if (j >= 0 && !done[static_cast<std::size_t>(j)]) {
            done[static_cast<std::size_t>(j)] = 1;
            stack.push_back(all[static_cast<std::size_t>(j)]);
          }
        }
    }
    out.emplace_back(std::move(part));
  }
  return out;
}

CellSet glider() { return CellSet({{1, 0}, {2, 1}, {0, 2}, {1, 2}, {2, 2}}); }

}  // namespace symbio::life
