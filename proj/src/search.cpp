#include "knotmosaic/search.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

#include "json.hpp"

namespace knotmosaic {

namespace {

struct Slot {
  std::vector<std::vector<std::pair<int, Cell>>> options;  // (cell index, value)
  int max_crossings = 0;
};

std::vector<Slot> fill_slots(const Layout& layout) {
  const Mosaic& cells = layout.cells;
  const int n = cells.size();
  std::vector<Slot> slots;
  std::vector<char> covered(n * n, 0);
  std::set<std::set<int>> corners;
  for (Symmetry g : block_corners(cells)) {
    std::set<int> area;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        const Pos p = transform_pos({i, j}, n, g);
        area.insert(p.row * n + p.col);
      }
    if (!corners.insert(area).second) continue;
    Slot slot;
    for (const BuildingBlock& b : building_blocks()) {
      std::vector<std::pair<int, Cell>> option;
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          const Pos p = transform_pos({i, j}, n, g);
          if (cells.at(p) == Cell(Domain::FourPoint)) option.push_back({p.row * n + p.col, transform_cell(b.cells.at(i, j), g)});
        }
      slot.options.push_back(std::move(option));
      slot.max_crossings = std::max(slot.max_crossings, b.crossings);
    }
    for (int k : area) covered[k] = 1;
    slots.push_back(std::move(slot));
  }
  for (int k = 0; k < n * n; ++k) {
    if (covered[k] || cells.at(k / n, k % n) != Cell(Domain::FourPoint)) continue;
    Slot slot;
    for (Cell c : {Cell(Tile::T7), Cell(Tile::T8), Cell(Domain::Crossing)}) slot.options.push_back({{k, c}});
    slot.max_crossings = 1;
    slots.push_back(std::move(slot));
  }
  return slots;
}

std::vector<Symmetry> stabilizer(const Mosaic& m) {
  std::vector<Symmetry> out;
  for (Symmetry g : all_symmetries())
    if ((g.rotation != 0 || g.reflect) && transform(m, g) == m) out.push_back(g);
  return out;
}

Mosaic with_t9(const Mosaic& m) {
  Mosaic out = m;
  for (int i = 0; i < m.size(); ++i)
    for (int j = 0; j < m.size(); ++j)
      if (m.at(i, j) == Cell(Domain::Crossing)) out.set(i, j, Tile::T9);
  return out;
}

// Crossing choice for a strand passing `entry` that should go over or under.
Tile crossing_for(Side entry, bool over) {
  const bool horizontal = entry == Side::Left || entry == Side::Right;
  return horizontal == over ? Tile::T9 : Tile::T10;
}

void assign_impl(const Mosaic& shadow, const std::function<void(const Mosaic&, const Mosaic&)>& emit) {
  const int n = shadow.size();
  std::vector<int> slots;
  for (int k = 0; k < n * n; ++k)
    if (shadow.at(k / n, k % n) == Cell(Domain::Crossing)) slots.push_back(k);
  const auto strands = trace(with_t9(shadow));
  if (strands.size() != 1) throw std::invalid_argument("shadow has " + std::to_string(strands.size()) + " components");

  Mosaic alternating = with_t9(shadow);
  bool over = true;
  for (const StrandStep& s : strands[0]) {
    if (!s.crossing) continue;
    if (shadow.at(s.pos) == Cell(Domain::Crossing)) alternating.set(s.pos, crossing_for(s.entry, over));
    over = !over;
  }

  std::set<Mosaic> seen;
  auto offer = [&](const Mosaic& d) {
    Mosaic canon = canonical_form(d, true);
    if (seen.insert(canon).second) emit(d, canon);
  };
  // The mirror shares the first one's canonical form but is still listed.
  offer(alternating);
  const Mosaic mirror = flip_crossings(alternating);
  if (mirror != alternating) emit(mirror, canonical_form(mirror, true));
  const int k = static_cast<int>(slots.size());
  Mosaic d = shadow;
  for (long bits = 0; bits < (1L << k); ++bits) {
    for (int i = 0; i < k; ++i) d.set(slots[i] / n, slots[i] % n, (bits >> i) & 1 ? Tile::T10 : Tile::T9);
    offer(d);
  }
}

std::string join(const std::vector<std::string>& names, char sep) {
  std::string out;
  for (const auto& s : names) {
    if (!out.empty()) out += sep;
    out += s;
  }
  return out;
}

std::string result_key(const SurveyResult& r) { return r.knot.empty() ? "?" + r.fp.key() : join(r.knot, '/'); }

}  // namespace

void enumerate_fills(const Layout& layout, int min_crossings, const std::function<void(const Mosaic&)>& emit) {
  const auto slots = fill_slots(layout);
  const auto sym = stabilizer(layout.cells);
  const int n = layout.cells.size();
  std::vector<int> reach(slots.size() + 1, 0);
  for (int s = static_cast<int>(slots.size()) - 1; s >= 0; --s) reach[s] = reach[s + 1] + slots[s].max_crossings;
  Mosaic m = layout.cells;
  std::vector<char> fixed(n * n, 0);

  std::function<void(std::size_t, int)> rec = [&](std::size_t s, int crossings) {
    if (crossings + reach[s] < min_crossings) return;
    if (s == slots.size()) {
      for (Symmetry g : sym)
        if (transform(m, g) < m) return;
      emit(m);
      return;
    }
    for (const auto& option : slots[s].options) {
      std::vector<int> placed;
      bool ok = true;
      int added = 0;
      for (const auto& [k, c] : option) {
        if (fixed[k]) {
          ok = ok && m.at(k / n, k % n) == c;
          continue;
        }
        m.set(k / n, k % n, c);
        fixed[k] = 1;
        placed.push_back(k);
        added += c == Cell(Domain::Crossing);
      }
      if (ok) rec(s + 1, crossings + added);
      for (int k : placed) {
        fixed[k] = 0;
        m.set(k / n, k % n, layout.cells.at(k / n, k % n));
      }
    }
  };
  rec(0, 0);
}

std::vector<Mosaic> enumerate_fills(const Layout& layout, int min_crossings) {
  std::vector<Mosaic> out;
  enumerate_fills(layout, min_crossings, [&](const Mosaic& m) { out.push_back(m); });
  return out;
}

void assign_crossings(const Mosaic& shadow, const std::function<void(const Mosaic&)>& emit) {
  assign_impl(shadow, [&](const Mosaic& d, const Mosaic&) { emit(d); });
}

std::vector<Mosaic> assign_crossings(const Mosaic& shadow) {
  std::vector<Mosaic> out;
  assign_crossings(shadow, [&](const Mosaic& m) { out.push_back(m); });
  return out;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Keep: return "keep";
    case Verdict::Link: return "link";
    case Verdict::Composite: return "composite";
    case Verdict::Reducible: return "reducible";
  }
  return "?";
}

PruneResult prune(const Mosaic& m, int reducer_budget) {
  PruneResult r;
  const Mosaic rep = with_t9(m);
  const auto strands = trace(rep);
  r.components = static_cast<int>(strands.size());
  if (r.components >= 2) {
    r.verdict = Verdict::Link;
    r.witness = std::to_string(r.components) + " components";
    return r;
  }
  if (auto cut = straight_cut_split(rep)) {
    r.verdict = Verdict::Composite;
    r.witness = std::string(cut->horizontal ? "row" : "column") + " cut before " + std::to_string(cut->line);
    return r;
  }
  const DiagramCode code = to_diagram_code(rep);
  if (is_connected_sum(code)) {
    r.verdict = Verdict::Composite;
    r.witness = "Gauss interval closed under pairing";
    return r;
  }
  const Reduction red = reduce(rep, reducer_budget);
  if (red.result.non_blank_count() < rep.non_blank_count()) {
    r.verdict = Verdict::Reducible;
    r.steps = red.steps;
    r.witness = std::to_string(rep.non_blank_count()) + " -> " + std::to_string(red.result.non_blank_count()) + " tiles";
    return r;
  }
  const auto nugatory = nugatory_crossings(code);
  if (!nugatory.empty()) {
    const Pos p = code.cells[nugatory.front()];
    r.verdict = Verdict::Reducible;
    r.witness = "crossing at (" + std::to_string(p.row) + "," + std::to_string(p.col) + ") untwists";
    return r;
  }
  return r;
}

Survey run_survey(const SurveyOptions& options, const KnotTable& table) {
  Survey survey;
  std::map<std::string, SurveyResult> merged;
  std::vector<int> ids = options.layouts;
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  const int jobs = std::max(1, options.jobs);

  for (int id : ids) {
    const Layout& layout = catalog_layout(id);
    const auto fills = enumerate_fills(layout, options.min_crossings);
    LayoutStats& stats = survey.stats[id];
    stats.fills = static_cast<long>(fills.size());

    struct Local {
      LayoutStats stats;
      std::map<std::string, SurveyResult> results;
    };
    std::vector<Local> locals(jobs);
    auto work = [&](int w) {
      Local& local = locals[w];
      for (std::size_t f = w; f < fills.size(); f += jobs) {
        const PruneResult pr = prune(fills[f]);
        switch (pr.verdict) {
          case Verdict::Link: ++local.stats.links; continue;
          case Verdict::Composite: ++local.stats.composites; continue;
          case Verdict::Reducible: ++local.stats.reducibles; continue;
          case Verdict::Keep: break;
        }
        ++local.stats.shadows;
        assign_impl(fills[f], [&](const Mosaic& d, const Mosaic& canon) {
          ++local.stats.diagrams;
          const DiagramCode code = to_diagram_code(d);
          SurveyResult r;
          r.fp = fingerprint(code);
          if (options.on_diagram) options.on_diagram(d, r.fp);
          r.knot = table.identify(r.fp, code);
          if (r.knot.empty() && r.fp.jones == Laurent(1) && r.fp.alexander == Laurent(1)) r.knot = {"0_1"};
          const std::string key = result_key(r);
          auto [it, fresh] = local.results.emplace(key, std::move(r));
          SurveyResult& slot = it->second;
          if (fresh || canon < slot.mosaic) {
            slot.mosaic = canon;
            slot.crossings = canon.crossing_count();
            slot.tiles = canon.non_blank_count();
          }
          slot.layout = id;
          slot.layouts.insert(id);
          ++slot.diagrams;
        });
      }
    };
    if (jobs == 1) {
      work(0);
    } else {
      std::vector<std::thread> threads;
      for (int w = 0; w < jobs; ++w) threads.emplace_back(work, w);
      for (auto& t : threads) t.join();
    }
    for (Local& local : locals) {
      stats.links += local.stats.links;
      stats.composites += local.stats.composites;
      stats.reducibles += local.stats.reducibles;
      stats.shadows += local.stats.shadows;
      stats.diagrams += local.stats.diagrams;
      for (auto& [key, r] : local.results) {
        auto [it, fresh] = merged.emplace(key, r);
        if (fresh) continue;
        SurveyResult& slot = it->second;
        // Layouts run in increasing id order, so an existing entry from an
        // earlier layout keeps its representative.
        if (slot.layout == id && r.mosaic < slot.mosaic) {
          slot.mosaic = r.mosaic;
          slot.crossings = r.crossings;
          slot.tiles = r.tiles;
        }
        if (!slot.layouts.count(id)) slot.layout = std::min(slot.layout, id);
        slot.layouts.insert(id);
        slot.diagrams += r.diagrams;
      }
    }
  }
  for (auto& [key, r] : merged) {
    r.layout = *r.layouts.begin();
    if (r.knot.size() == 1) r.crossing_number = name_crossings(r.knot[0]);
    if (r.knot.empty()) r.flags.push_back("unknown");
    if (r.knot.size() > 1) r.flags.push_back("ambiguous");
    if (r.knot.size() == 1 && r.crossing_number < options.min_crossings) r.flags.push_back("low-crossing");
    if (r.knot.size() == 1 && options.exclusion.count(r.knot[0])) r.flags.push_back("excluded");
    survey.results.push_back(std::move(r));
  }
  return survey;
}

std::set<std::string> survey_names(const Survey& survey) {
  std::set<std::string> out;
  for (const auto& r : survey.results)
    if (r.flags.empty() && r.knot.size() == 1) out.insert(r.knot[0]);
  return out;
}

std::set<std::string> survey_names(const Survey& survey, int layout) {
  std::set<std::string> out;
  for (const auto& r : survey.results)
    if (r.flags.empty() && r.knot.size() == 1 && r.layouts.count(layout)) out.insert(r.knot[0]);
  return out;
}

std::string to_jsonl(const Survey& survey) {
  std::string out;
  for (const auto& r : survey.results) {
    nlohmann::ordered_json j;
    j["mosaic"] = row_strings(r.mosaic);
    if (r.knot.size() == 1)
      j["knot"] = r.knot[0];
    else if (r.knot.empty())
      j["knot"] = nullptr;
    else
      j["knot"] = r.knot;
    j["tiles"] = r.tiles;
    j["crossings"] = r.crossings;
    j["jones"] = r.fp.jones.to_string();
    j["alexander"] = r.fp.alexander.to_string();
    j["determinant"] = r.fp.determinant;
    j["layout"] = r.layout;
    j["layouts"] = r.layouts;
    j["diagrams"] = r.diagrams;
    j["flags"] = r.flags;
    out += j.dump() + '\n';
  }
  return out;
}

Survey parse_jsonl(std::string_view text) {
  Survey survey;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(start, end - start);
    start = end + 1;
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    const auto j = nlohmann::json::parse(line);
    SurveyResult r;
    std::string rows;
    for (const auto& row : j.at("mosaic")) rows += row.get<std::string>() + '\n';
    r.mosaic = parse_mosaic(rows);
    if (j.at("knot").is_string())
      r.knot = {j.at("knot").get<std::string>()};
    else if (j.at("knot").is_array())
      r.knot = j.at("knot").get<std::vector<std::string>>();
    r.tiles = j.at("tiles").get<int>();
    r.crossings = j.at("crossings").get<int>();
    r.fp.jones = Laurent::parse(j.at("jones").get<std::string>());
    r.fp.alexander = Laurent::parse(j.at("alexander").get<std::string>());
    r.fp.determinant = j.at("determinant").get<std::int64_t>();
    r.layout = j.at("layout").get<int>();
    if (j.contains("layouts")) r.layouts = j.at("layouts").get<std::set<int>>();
    if (j.contains("diagrams")) r.diagrams = j.at("diagrams").get<long>();
    r.flags = j.at("flags").get<std::vector<std::string>>();
    if (r.knot.size() == 1) r.crossing_number = name_crossings(r.knot[0]);
    survey.results.push_back(std::move(r));
  }
  return survey;
}

}  // namespace knotmosaic
