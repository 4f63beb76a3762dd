#include "symbio/search.hpp"

#include <algorithm>
#include <bit>
#include <thread>
#include <unordered_set>

namespace symbio::life {

namespace {

using Row = unsigned __int128;

constexpr int kKeySide = 8;

std::uint64_t seed_key(const CellSet& normalized) {
  std::uint64_t key = 0;
  for (const Cell& c : normalized.cells()) key |= std::uint64_t{1} << (c.y * kKeySide + c.x);
  return key;
}

CellSet key_cells(std::uint64_t key) {
  std::vector<Cell> cells;
  while (key) {
    int b = std::countr_zero(key);
    cells.push_back({b % kKeySide, b / kKeySide});
    key &= key - 1;
  }
  return CellSet(std::move(cells));
}

std::uint64_t canonical_key(const CellSet& seed) {
  std::uint64_t best = ~std::uint64_t{0};
  for (const Linear& m : square_symmetries())
    best = std::min(best, seed_key(RigidMotion{m, 0, 0}.apply(seed).normalized()));
  return best;
}

/// Fixed-size board of 128-bit rows with a dead frame around the live area.
class Board {
 public:
  Board(int rows, int origin_x, int origin_y)
      : rows_(static_cast<std::size_t>(rows), 0), next_(rows_.size(), 0), ox_(origin_x), oy_(origin_y) {}

  void load(const CellSet& cells) {
    std::fill(rows_.begin(), rows_.end(), Row{0});
    lo_ = static_cast<int>(rows_.size());
    hi_ = -1;
    for (const Cell& c : cells.cells()) {
      int r = c.y + oy_;
      rows_[static_cast<std::size_t>(r)] |= Row{1} << (c.x + ox_);
      lo_ = std::min(lo_, r);
      hi_ = std::max(hi_, r);
    }
  }

  bool empty() const { return hi_ < lo_; }

  void step() {
    if (empty()) return;
    const int from = lo_ - 1, to = hi_ + 1;
    int new_lo = static_cast<int>(rows_.size()), new_hi = -1;
    for (int r = from; r <= to; ++r) {
      const Row up = rows_[static_cast<std::size_t>(r - 1)];
      const Row mid = rows_[static_cast<std::size_t>(r)];
      const Row down = rows_[static_cast<std::size_t>(r + 1)];
      Row s0 = 0, s1 = 0, s2 = 0;
      auto add = [&](Row x) {
        Row c0 = s0 & x;
        s0 ^= x;
        Row c1 = s1 & c0;
        s1 ^= c0;
        s2 |= c1;
      };
      add(up << 1);
      add(up);
      add(up >> 1);
      add(mid << 1);
      add(mid >> 1);
      add(down << 1);
      add(down);
      add(down >> 1);
      Row out = ~s2 & s1 & (s0 | mid);
      next_[static_cast<std::size_t>(r)] = out;
      if (out) {
        new_lo = std::min(new_lo, r);
        new_hi = std::max(new_hi, r);
      }
    }
    for (int r = from; r <= to; ++r) rows_[static_cast<std::size_t>(r)] = next_[static_cast<std::size_t>(r)];
    lo_ = new_lo;
    hi_ = new_hi;
  }

  bool same_as(const Board& o) const {
    if (lo_ != o.lo_ || hi_ != o.hi_) return false;
    for (int r = lo_; r <= hi_; ++r)
      if (rows_[static_cast<std::size_t>(r)] != o.rows_[static_cast<std::size_t>(r)]) return false;
    return true;
  }

  void copy_from(const Board& o) {
    int a = std::min(lo_, o.lo_), b = std::max(hi_, o.hi_);
    for (int r = std::max(a, 0); r <= b; ++r) rows_[static_cast<std::size_t>(r)] = o.rows_[static_cast<std::size_t>(r)];
    lo_ = o.lo_;
    hi_ = o.hi_;
  }

  CellSet cells() const {
    std::vector<Cell> out;
    for (int r = lo_; r <= hi_; ++r) {
      Row bits = rows_[static_cast<std::size_t>(r)];
      while (bits) {
        auto low = static_cast<std::uint64_t>(bits);
        int b = low ? std::countr_zero(low) : 64 + std::countr_zero(static_cast<std::uint64_t>(bits >> 64));
        out.push_back({b - ox_, r - oy_});
        bits &= bits - 1;
      }
    }
    return CellSet(std::move(out));
  }

 private:
  std::vector<Row> rows_, next_;
  int ox_, oy_;
  int lo_ = 0, hi_ = -1;
};

struct Worker {
  const SearchOptions& options;
  Board board, prev1, prev2;
  SearchStats stats;
  std::vector<std::pair<std::uint64_t, SearchHit>> hits;

  explicit Worker(const SearchOptions& o)
      : options(o),
        board(rows(o), o.padding + 1, o.padding + 1),
        prev1(rows(o), o.padding + 1, o.padding + 1),
        prev2(rows(o), o.padding + 1, o.padding + 1) {}

  static int rows(const SearchOptions& o) { return std::max(o.width, o.height) + 2 * o.padding + 2; }

  void run(std::uint64_t key) {
    const CellSet seed = key_cells(key);
    board.load(seed);
    prev1.load(CellSet{});
    prev2.load(CellSet{});
    for (unsigned t = 1; t <= options.period; ++t) {
      prev2.copy_from(prev1);
      prev1.copy_from(board);
      board.step();
      if (board.empty()) {
        ++stats.died;
        return;
      }
      // A repeat at t <= period means any embedding at `period` recurs earlier.
      if (board.same_as(prev1) || (t >= 2 && board.same_as(prev2))) {
        ++stats.settled;
        return;
      }
    }
    ++stats.reached_period;
    const CellSet image = board.cells();
    auto motions = find_embeddings(seed, image, true, MotionGroup::Full);
    auto it = std::find_if(motions.begin(), motions.end(), [](const RigidMotion& m) { return !m.is_identity(); });
    if (it == motions.end()) return;
    ++stats.embedded;
    auto least = detect_geometric_period(seed, options.period, true, MotionGroup::Full);
    if (!least || least->period != options.period) return;
    hits.push_back({key, SearchHit{seed, PeriodReport{options.period, *it, image - it->apply(seed)}}});
  }
};

}  // namespace

std::uint64_t binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

CellSet canonical_seed(const CellSet& seed) { return key_cells(canonical_key(seed)); }

SearchReport search_period(const SearchOptions& options) {
  if (options.width < 1 || options.height < 1 || options.width > kKeySide || options.height > kKeySide)
    throw SearchBudgetError("search box must be between 1x1 and 8x8");
  const unsigned area = static_cast<unsigned>(options.width * options.height);
  if (options.live < 1 || static_cast<unsigned>(options.live) > area)
    throw SearchBudgetError("live count must be between 1 and the box area");
  if (options.padding < static_cast<int>(options.period) + 1)
    throw SearchBudgetError("padding must exceed the period");
  if (std::max(options.width, options.height) + 2 * options.padding + 2 > 126)
    throw SearchBudgetError("board does not fit in 128-bit rows");
  const std::uint64_t total = binomial(area, static_cast<unsigned>(options.live));
  if (total > options.budget)
    throw SearchBudgetError("candidate count " + std::to_string(total) + " exceeds budget " +
                            std::to_string(options.budget));

  SearchReport report;
  report.options = options;
  std::vector<std::uint64_t> classes;
  std::unordered_set<std::uint64_t> seen;
  std::vector<Cell> cells;
  for (std::uint32_t mask = (1u << options.live) - 1; mask < (1u << area);) {
    ++report.stats.candidates;
    cells.clear();
    for (unsigned b = 0; b < area; ++b)
      if (mask >> b & 1u) cells.push_back({static_cast<int>(b) % options.width, static_cast<int>(b) / options.width});
    std::uint64_t key = canonical_key(CellSet(cells));
    if (seen.insert(key).second) classes.push_back(key);
    // next mask with the same popcount
    std::uint32_t c = mask & (~mask + 1u), r = mask + c;
    mask = (((r ^ mask) >> 2) / c) | r;
  }
  std::sort(classes.begin(), classes.end());
  report.stats.classes = classes.size();

  const unsigned n_workers = std::max(1u, options.workers);
  std::vector<Worker> workers;
  workers.reserve(n_workers);
  for (unsigned w = 0; w < n_workers; ++w) workers.emplace_back(options);
  auto body = [&](unsigned w) {
    for (std::size_t i = w; i < classes.size(); i += n_workers) workers[w].run(classes[i]);
  };
  if (n_workers == 1) {
    body(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < n_workers; ++w) threads.emplace_back(body, w);
    for (auto& t : threads) t.join();
  }

  std::vector<std::pair<std::uint64_t, SearchHit>> merged;
  for (Worker& w : workers) {
    report.stats.died += w.stats.died;
    report.stats.settled += w.stats.settled;
    report.stats.reached_period += w.stats.reached_period;
    report.stats.embedded += w.stats.embedded;
    for (auto& h : w.hits) merged.push_back(std::move(h));
  }
  std::sort(merged.begin(), merged.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [key, hit] : merged) report.hits.push_back(std::move(hit));
  return report;
}

}  // namespace symbio::life
