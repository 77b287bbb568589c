#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "knotmosaic/mosaic.hpp"
#include "knotmosaic/polynomial.hpp"

namespace knotmosaic {

/// One crossing in planar-diagram form: arc labels listed counterclockwise,
/// starting with the incoming under-arc (so the under-strand runs pd[0] ->
/// pd[2]). `sign` is +1 when the over-strand runs pd[3] -> pd[1].
struct PdCrossing {
  std::array<int, 4> pd{};
  int sign = 1;
  friend bool operator==(const PdCrossing&, const PdCrossing&) = default;
};

/// A knot diagram with arcs labelled 1..2k along the orientation.
struct DiagramCode {
  std::vector<PdCrossing> crossings;
  /// Grid cell of each crossing when the code was read from a mosaic.
  std::vector<Pos> cells;

  int size() const { return static_cast<int>(crossings.size()); }
  friend bool operator==(const DiagramCode& a, const DiagramCode& b) { return a.crossings == b.crossings; }
};

struct DiagramError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Reads the code off a one-component mosaic. Labels start at 1 on the arc
/// holding the first traced step.
DiagramCode to_diagram_code(const Mosaic& m);

/// Builds a code from bare PD tuples, deriving each sign from the labels.
/// Throws DiagramError unless every label 1..2k occurs exactly twice and each
/// crossing has consecutive under labels and consecutive over labels.
DiagramCode from_pd(const std::vector<std::array<int, 4>>& pd);
/// Parses "[a b c d][a b c d]...". An empty string is the unknot.
DiagramCode parse_pd(std::string_view text);
std::string format_pd(const DiagramCode& code);

/// Checks the label invariants; throws DiagramError on failure.
void validate(const DiagramCode& code);

/// Signed Gauss sequence in traversal order: +c for an over-pass of crossing
/// c (1-based), -c for an under-pass.
std::vector<int> gauss_sequence(const DiagramCode& code);

/// Kauffman bracket in A, normalized so the unknot is 1. Contracts the diagram
/// crossing by crossing, keeping one polynomial per planar matching of the
/// open arc ends.
Laurent kauffman_bracket(const DiagramCode& code);
int writhe(const DiagramCode& code);
/// Jones polynomial in t.
Laurent jones(const DiagramCode& code);
/// Kauffman bracket of the 2-parallel cable with a Jones-Wenzl projector,
/// framing-corrected; an invariant in A, unnormalized. Used to split knots
/// whose Jones and Alexander polynomials coincide.
Laurent colored_jones2(const DiagramCode& code);
/// Alexander polynomial, shifted to lowest degree 0 with positive leading
/// coefficient.
Laurent alexander(const DiagramCode& code);
std::int64_t determinant(const DiagramCode& code);

/// Code of the mirror image (every crossing switched).
DiagramCode mirror(const DiagramCode& code);

struct Fingerprint {
  Laurent jones;  ///< lesser of V(t) and V(1/t) by serialization
  Laurent alexander;
  std::int64_t determinant = 1;

  /// "jones|alexander|determinant"
  std::string key() const;
  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const DiagramCode& code);
/// Fingerprint from an already computed Jones and Alexander pair.
Fingerprint make_fingerprint(const Laurent& jones, const Laurent& alexander);

/// Jones and 2-colored Jones taken together, mirror-canonical: the lesser of
/// "V(t)|J2(A)" and "V(1/t)|J2(1/A)". Splits fingerprint collisions.
std::string refinement_key(const DiagramCode& code);

/// True when some proper cyclic interval of the Gauss sequence, holding at
/// least one crossing and leaving at least one outside, contains both visits
/// of every crossing it touches.
bool is_connected_sum(const DiagramCode& code);

/// Crossings (0-based) whose two visits bound a pairing-closed interval; such
/// crossings can be untwisted by a Reidemeister I move.
std::vector<int> nugatory_crossings(const DiagramCode& code);

}  // namespace knotmosaic
