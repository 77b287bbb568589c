#include "knotmosaic/render.hpp"

#include <array>
#include <sstream>

namespace knotmosaic {

namespace {

char centre(Cell c) {
  if (!c.is_tile()) {
    switch (c.domain()) {
      case Domain::FourPoint: return '?';
      case Domain::Crossing: return 'X';
      case Domain::SegmentOrArc: return '~';
    }
  }
  switch (c.tile()) {
    case Tile::T0: return ' ';
    case Tile::T1:
    case Tile::T2: return '.';
    case Tile::T3:
    case Tile::T4: return '\'';
    case Tile::T5: return '-';
    case Tile::T6: return '|';
    case Tile::T7: return '/';
    case Tile::T8: return '\\';
    case Tile::T9: return '-';
    case Tile::T10: return '|';
  }
  return ' ';
}

}  // namespace

std::string render_ascii(const Mosaic& m) {
  const int n = m.size();
  std::vector<std::string> lines(3 * n, std::string(3 * n, ' '));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Cell c = m.at(i, j);
      const SideSet cp = c.connection_points().value_or(SideSet{});
      const int r = 3 * i + 1, k = 3 * j + 1;
      if (cp.contains(Side::Top)) lines[r - 1][k] = '|';
      if (cp.contains(Side::Bottom)) lines[r + 1][k] = '|';
      if (cp.contains(Side::Left)) lines[r][k - 1] = '-';
      if (cp.contains(Side::Right)) lines[r][k + 1] = '-';
      lines[r][k] = centre(c);
    }
  std::string out;
  for (auto& l : lines) {
    l.erase(l.find_last_not_of(' ') + 1);
    out += l + '\n';
  }
  return out;
}

std::string render_svg(const Mosaic& m, int cell, double gap) {
  const int n = m.size();
  const double h = cell / 2.0;
  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << n * cell << "\" height=\"" << n * cell
    << "\" viewBox=\"0 0 " << n * cell << ' ' << n * cell << "\">\n";
  s << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  s << "<g fill=\"none\" stroke=\"black\" stroke-width=\"" << cell / 10.0 << "\">\n";
  auto mid = [&](int i, int j, Side side, double& x, double& y) {
    x = j * cell + h;
    y = i * cell + h;
    switch (side) {
      case Side::Top: y -= h; break;
      case Side::Bottom: y += h; break;
      case Side::Left: x -= h; break;
      case Side::Right: x += h; break;
    }
  };
  auto arc = [&](int i, int j, Side a, Side b) {
    double x1, y1, x2, y2;
    mid(i, j, a, x1, y1);
    mid(i, j, b, x2, y2);
    s << "<path class=\"strand\" d=\"M " << x1 << ' ' << y1 << " A " << h << ' ' << h << " 0 0 1 " << x2 << ' ' << y2
      << "\"/>\n";
  };
  auto line = [&](int i, int j, Side a, Side b) {
    double x1, y1, x2, y2;
    mid(i, j, a, x1, y1);
    mid(i, j, b, x2, y2);
    s << "<path class=\"strand\" d=\"M " << x1 << ' ' << y1 << " L " << x2 << ' ' << y2 << "\"/>\n";
  };
  auto broken = [&](int i, int j, Side a, Side b) {
    double x1, y1, x2, y2;
    mid(i, j, a, x1, y1);
    mid(i, j, b, x2, y2);
    const double cx = j * cell + h, cy = i * cell + h, g = gap * cell / 2.0;
    const double dx = (x2 > x1) - (x2 < x1), dy = (y2 > y1) - (y2 < y1);
    s << "<path class=\"strand\" d=\"M " << x1 << ' ' << y1 << " L " << cx - dx * g << ' ' << cy - dy * g << " M "
      << cx + dx * g << ' ' << cy + dy * g << " L " << x2 << ' ' << y2 << "\"/>\n";
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Cell c = m.at(i, j);
      if (!c.is_tile()) {
        s << "<text x=\"" << j * cell + h << "\" y=\"" << i * cell + h << "\" stroke=\"none\" fill=\"black\" "
          << "text-anchor=\"middle\" dominant-baseline=\"middle\">" << to_token(c) << "</text>\n";
        continue;
      }
      switch (c.tile()) {
        case Tile::T0: break;
        case Tile::T1: arc(i, j, Side::Left, Side::Bottom); break;
        case Tile::T2: arc(i, j, Side::Bottom, Side::Right); break;
        case Tile::T3: arc(i, j, Side::Right, Side::Top); break;
        case Tile::T4: arc(i, j, Side::Top, Side::Left); break;
        case Tile::T5: line(i, j, Side::Left, Side::Right); break;
        case Tile::T6: line(i, j, Side::Top, Side::Bottom); break;
        case Tile::T7:
          arc(i, j, Side::Left, Side::Bottom);
          arc(i, j, Side::Right, Side::Top);
          break;
        case Tile::T8:
          arc(i, j, Side::Bottom, Side::Right);
          arc(i, j, Side::Top, Side::Left);
          break;
        case Tile::T9:
          line(i, j, Side::Left, Side::Right);
          broken(i, j, Side::Top, Side::Bottom);
          break;
        case Tile::T10:
          line(i, j, Side::Top, Side::Bottom);
          broken(i, j, Side::Left, Side::Right);
          break;
      }
    }
  s << "</g>\n</svg>\n";
  return s.str();
}

}  // namespace knotmosaic
