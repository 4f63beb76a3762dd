#include "symbio/gun.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace symbio::life {

namespace {

bool is_reflection(const Linear& m) { return m.a * m.d - m.b * m.c == -1; }

std::optional<RigidMotion> first_motion(const CellSet& x, const CellSet& y, bool reflections_only) {
  for (const RigidMotion& m : find_embeddings(x, y, true, MotionGroup::Full))
    if (!reflections_only || is_reflection(m.linear)) return m;
  return std::nullopt;
}

std::vector<CellSet> blocks_in(const CellSet& cells) {
  std::vector<CellSet> out;
  for (const Cell& c : cells.cells()) {
    CellSet b({c, {c.x + 1, c.y}, {c.x, c.y + 1}, {c.x + 1, c.y + 1}});
    if (cells.contains_all(b)) out.push_back(b);
  }
  return out;
}

const std::array<CellSet, 4>& glider_phases() {
  static const std::array<CellSet, 4> phases = [] {
    std::array<CellSet, 4> p;
    CellSet g = glider();
    for (auto& ph : p) {
      ph = g.normalized();
      g = life_step(g);
    }
    return p;
  }();
  return phases;
}

SubCheck missing(std::string name, unsigned steps, std::string why) {
  SubCheck s;
  s.name = std::move(name);
  s.steps = steps;
  s.detail = std::move(why);
  return s;
}

}  // namespace

bool CutResult::all_hold() const {
  return std::all_of(checks.begin(), checks.end(), [](const SubCheck& c) { return c.holds; });
}

std::vector<int> GunReport::passing_cuts() const {
  std::vector<int> out;
  for (const CutResult& c : cuts)
    if (c.all_hold()) out.push_back(c.cut);
  return out;
}

std::optional<RigidMotion> find_glider(const CellSet& cells, int* phase) {
  const auto& phases = glider_phases();
  for (std::size_t i = 0; i < phases.size(); ++i) {
    auto m = first_motion(phases[i], cells, false);
    if (m) {
      if (phase) *phase = static_cast<int>(i);
      return m;
    }
  }
  return std::nullopt;
}

GunEmission verify_gun(const CellSet& gun, unsigned cycles) {
  GunEmission out;
  out.cycles = cycles;
  const CellSet after = life_run(gun, 30);
  out.restored = after.contains_all(gun);
  out.residue = after - gun;
  out.residue_is_glider = out.residue.size() == 5 && find_glider(out.residue).has_value();
  CellSet later = life_run(after, 30 * (cycles > 0 ? cycles - 1 : 0));
  if (cycles == 0) later = gun;
  if (!later.contains_all(gun)) return out;
  for (const CellSet& part : components(later - gun))
    if (part.size() == 5 && find_glider(part)) ++out.gliders;
  return out;
}

GunReport verify_gun_decomposition(const CellSet& gun, std::optional<int> cut) {
  GunReport report;
  const CellSet after = life_run(gun, 30);
  if (!after.contains_all(gun)) throw GunError("gun is not restored after 30 steps");
  const CellSet emitted = after - gun;
  if (emitted.size() != 5 || !find_glider(emitted)) throw GunError("30-step residue is not a single glider");
  report.emission = PeriodReport{30, RigidMotion::identity(), emitted};

  auto blocks = blocks_in(gun);
  if (blocks.size() < 2) throw GunError("gun has no pair of end blocks");
  auto min_x = [](const CellSet& s) { return s.bounds().min_x; };
  report.left_block = *std::min_element(blocks.begin(), blocks.end(),
                                        [&](const CellSet& a, const CellSet& b) { return min_x(a) < min_x(b); });
  report.right_block = *std::max_element(blocks.begin(), blocks.end(),
                                         [&](const CellSet& a, const CellSet& b) { return min_x(a) < min_x(b); });
  if (!report.left_block.disjoint(report.right_block)) throw GunError("end blocks overlap");
  const CellSet core = gun - report.left_block - report.right_block;
  const Box box = core.bounds();

  std::vector<int> cuts;
  if (cut) {
    cuts.push_back(*cut);
  } else {
    for (int c = box.min_x; c <= box.max_x + 1; ++c) cuts.push_back(c);
  }

  for (int c : cuts) {
    CutResult r;
    r.cut = c;
    std::vector<Cell> left, right;
    for (const Cell& cell : core.cells()) (cell.x < c ? left : right).push_back(cell);
    const CellSet p(std::move(left)), q(std::move(right));
    r.p_cells = p.size();
    r.q_cells = q.size();

    // 1. L^15(P) = P* + B
    std::optional<CellSet> block;
    if (p.empty()) {
      r.checks.push_back(missing("L^15(P) contains mirror(P) + block", 15, "P is empty"));
    } else {
      SubCheck s;
      s.name = "L^15(P) contains mirror(P) + block";
      s.steps = 15;
      const CellSet img = life_run(p, 15);
      s.motion = first_motion(p, img, true);
      if (s.motion) {
        const CellSet residue = img - s.motion->apply(p);
        s.residue = residue.size();
        auto found = blocks_in(residue);
        if (!found.empty()) block = found.front();
        s.holds = block.has_value();
        s.detail = block ? "block found in residue" : "no 2x2 block in residue";
      } else {
        s.detail = "no reflected copy of P";
      }
      r.checks.push_back(std::move(s));
    }

    // 2. L^15(Q) = Q* + B'
    std::optional<CellSet> q_star;
    if (q.empty()) {
      r.checks.push_back(missing("L^15(Q) contains mirror(Q)", 15, "Q is empty"));
    } else {
      SubCheck s;
      s.name = "L^15(Q) contains mirror(Q)";
      s.steps = 15;
      const CellSet img = life_run(q, 15);
      s.motion = first_motion(q, img, true);
      if (s.motion) {
        q_star = s.motion->apply(q);
        s.residue = (img - *q_star).size();
        s.holds = true;
      } else {
        s.detail = "no reflected copy of Q";
      }
      r.checks.push_back(std::move(s));
    }

    // 3. L^10(Q) is a version of P plus residue
    if (p.empty() || q.empty()) {
      r.checks.push_back(missing("L^10(Q) contains a copy of P", 10, "P or Q is empty"));
    } else {
      SubCheck s;
      s.name = "L^10(Q) contains a copy of P";
      s.steps = 10;
      const CellSet img = life_run(q, 10);
      s.motion = first_motion(p, img, false);
      if (s.motion) s.residue = (img - s.motion->apply(p)).size();
      s.holds = s.motion.has_value();
      if (!s.holds) s.detail = "no copy of P";
      r.checks.push_back(std::move(s));
    }

    // 4. L^15(B + Q*) = GLIDER + Q + residue
    if (!block || !q_star) {
      r.checks.push_back(missing("L^15(B + Q*) contains glider + Q", 15, "needs B from check 1 and Q* from check 2"));
    } else {
      SubCheck s;
      s.name = "L^15(B + Q*) contains glider + Q";
      s.steps = 15;
      const CellSet img = life_run(*block | *q_star, 15);
      s.motion = first_motion(q, img, false);
      if (s.motion) {
        const CellSet rest = img - s.motion->apply(q);
        auto g = find_glider(rest);
        s.residue = rest.size() - (g ? 5 : 0);
        s.holds = g.has_value();
        s.detail = g ? "glider " + g->to_string() : "no glider beside Q";
      } else {
        s.detail = "no copy of Q";
      }
      r.checks.push_back(std::move(s));
    }
    report.cuts.push_back(std::move(r));
  }
  return report;
}

std::string to_text(const GunReport& report) {
  std::ostringstream out;
  out << "L^30(gun) = gun + glider: residue " << report.emission.residue.size() << " cells\n";
  out << "end blocks at x=" << report.left_block.bounds().min_x << " and x=" << report.right_block.bounds().min_x
      << "\n";
  for (const CutResult& c : report.cuts) {
    out << "cut " << c.cut << " (P " << c.p_cells << ", Q " << c.q_cells << ")" << (c.all_hold() ? " all hold" : "")
        << "\n";
    for (const SubCheck& s : c.checks) {
      out << "  [" << (s.holds ? "yes" : "no ") << "] " << s.name;
      if (s.motion) out << "  motion " << s.motion->to_string() << "  residue " << s.residue;
      if (!s.detail.empty()) out << "  (" << s.detail << ")";
      out << "\n";
    }
  }
  auto passing = report.passing_cuts();
  out << "cuts satisfying all four checks:";
  if (passing.empty()) out << " none";
  for (int c : passing) out << " " << c;
  out << "\n";
  return out.str();
}

}  // namespace symbio::life
