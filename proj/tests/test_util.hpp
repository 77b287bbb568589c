#pragma once

#include <algorithm>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "knotmosaic/invariants.hpp"
#include "knotmosaic/knottable.hpp"
#include "knotmosaic/layouts.hpp"
#include "knotmosaic/mosaic.hpp"
#include "knotmosaic/moves.hpp"

namespace testutil {

using namespace knotmosaic;

inline std::string data_path(const std::string& rel) { return std::string(KNOTMOSAIC_DATA_DIR) + "/" + rel; }

inline std::string reference_csv() { return std::string(KNOTMOSAIC_TEST_DATA) + "/reference_invariants.csv"; }

inline std::string read_text(const std::string& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

inline Mosaic fixture(const std::string& name) { return parse_mosaic(read_text(data_path("fixtures/" + name))); }

inline const KnotTable& table() {
  static const KnotTable t = load_table_file(data_path("knots.csv"));
  return t;
}

inline const Mosaic kUnknot = parse_mosaic("2 1\n3 4");
inline const Mosaic kTrefoil = parse_mosaic("0 2 1 0\n2 8 9 1\n3 9 10 4\n0 3 4 0");

/// A one-component mosaic: a catalog layout with its X4 cells filled at
/// random from T7-T10 (crossing with probability `p_cross`).
inline Mosaic random_knot(std::mt19937& rng, double p_cross = 0.7, int max_crossings = 99) {
  const auto& catalog = layout_catalog();
  std::uniform_real_distribution<double> u(0, 1);
  for (;;) {
    Mosaic m = catalog[rng() % catalog.size()].cells;
    int k = 0;
    for (int i = 0; i < m.size(); ++i)
      for (int j = 0; j < m.size(); ++j)
        if (m.at(i, j) == Cell(Domain::FourPoint)) {
          const bool cross = u(rng) < p_cross && k < max_crossings;
          k += cross;
          m.set(i, j, cross ? Tile(9 + rng() % 2) : Tile(7 + rng() % 2));
        }
    if (trace(m).size() == 1) return m;
  }
}

/// A random suitably connected one-component n-mosaic with crossings in
/// [min_crossings, max_crossings], built cell by cell with backtracking.
inline Mosaic random_mosaic(std::mt19937& rng, int n, int min_crossings = 2, int max_crossings = 10) {
  for (;;) {
    Mosaic m(n);
    std::function<bool(int)> fill = [&](int k) {
      if (k == n * n) return true;
      const int i = k / n, j = k % n;
      std::array<int, kTileCount> order;
      for (int t = 0; t < kTileCount; ++t) order[t] = t;
      std::shuffle(order.begin(), order.end(), rng);
      for (int t : order) {
        const SideSet s = connection_points(Tile(t));
        const bool top = i > 0 && connection_points(m.at(i - 1, j).tile()).contains(Side::Bottom);
        const bool left = j > 0 && connection_points(m.at(i, j - 1).tile()).contains(Side::Right);
        if (s.contains(Side::Top) != top || s.contains(Side::Left) != left) continue;
        if ((i == n - 1 && s.contains(Side::Bottom)) || (j == n - 1 && s.contains(Side::Right))) continue;
        m.set(i, j, Tile(t));
        if (fill(k + 1)) return true;
      }
      m.set(i, j, Tile::T0);
      return false;
    };
    if (!fill(0)) continue;
    const int k = m.crossing_count();
    if (k >= min_crossings && k <= max_crossings && trace(m).size() == 1) return m;
  }
}

struct WalkStats {
  int applied = 0;
  int violations = 0;
  std::string first;  ///< rule and mosaic of the first violation
};

/// Random move sequences of up to `steps` moves from `count` random 6- to
/// 9-mosaics. A move violates when the result is not a suitably connected
/// knot with the same fingerprint, or its tile change differs from the
/// match's delta.
inline WalkStats random_walks(std::mt19937& rng, int count, int steps) {
  WalkStats w;
  for (int k = 0; k < count; ++k) {
    Mosaic m = random_mosaic(rng, 6 + k % 4, 3, 12);
    const std::string key = fingerprint(to_diagram_code(m)).key();
    for (int s = 0; s < steps; ++s) {
      const auto mm = match_moves(m);
      if (mm.empty()) break;
      const MoveMatch& pick = mm[rng() % mm.size()];
      const Mosaic next = apply_move(m, *pick.rule, pick.anchor);
      ++w.applied;
      const bool ok = is_suitably_connected(next) && trace(next).size() == 1 &&
                      fingerprint(to_diagram_code(next)).key() == key &&
                      next.non_blank_count() - m.non_blank_count() == pick.delta;
      if (!ok && w.violations++ == 0) w.first = pick.rule->name + "\n" + serialize(m);
      m = next;
    }
  }
  return w;
}

}  // namespace testutil
