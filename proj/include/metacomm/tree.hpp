#pragma once

// Bruhat-Tits tree of GL2(Q_p). A vertex is the homothety class of the
// row lattice L0 * g, stored in Hermite normal form.

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "metacomm/eichler.hpp"
#include "metacomm/padic.hpp"

namespace metacomm {

/// Class of L0 * [[p^a, r], [0, p^b]] with 0 <= r < p^b and
/// min(a, val(r), b) = 0.
struct TreeVertex {
  int a = 0;
  std::uint64_t r = 0;
  int b = 0;

  static TreeVertex root() { return {}; }

  /// The Hermite representative over the given modulus.
  Mat2 representative(const Modulus& mod) const;
  /// "a,r,b"
  std::string to_string() const;

  friend auto operator<=>(const TreeVertex&, const TreeVertex&) = default;
};

struct Segment {
  TreeVertex from;
  TreeVertex to;
  std::vector<TreeVertex> path;

  std::size_t length() const { return path.empty() ? 0 : path.size() - 1; }
  /// Same vertex set regardless of orientation.
  bool same_support(const Segment& other) const;
};

TreeVertex canonical_vertex(const Mat2& g);
int distance(const TreeVertex& v1, const TreeVertex& v2, const Modulus& mod);
/// Class of L * g where v = [L].
TreeVertex act(const TreeVertex& v, const Mat2& g);
/// The p + 1 classes of index-p sublattices, in order alpha_0..alpha_{p-1}, diag(p, 1).
std::vector<TreeVertex> neighbors(const TreeVertex& v, const Modulus& mod);
Segment geodesic(const TreeVertex& v1, const TreeVertex& v2, const Modulus& mod);

/// Vertices [L0 gamma_i], i = 0..n: the segment of O itself.
Segment order_segment(const EichlerContext& ctx);
/// Geodesic from [L0 g] to [L0 gamma g] for the ideal O g.
Segment segment_of_ideal(const EichlerContext& ctx, const NormPIdeal& ideal);

/// Vertices within `radius` of any center, sorted.
std::vector<TreeVertex> ball(const std::vector<TreeVertex>& centers, int radius, const Modulus& mod);

struct HighlightedSegment {
  std::string name;
  Side side;
  Segment segment;
};

/// DOT graph of the ball around `centers`, with O's segment edges bold and each
/// highlighted segment overlaid as labelled parallel edges.
std::string render_dot(const std::vector<TreeVertex>& centers, int radius, const Modulus& mod,
                       const std::vector<TreeVertex>& bold_path,
                       const std::vector<HighlightedSegment>& highlights);

/// Ball of `radius` around O's segment, highlighting the given census ideals.
std::string export_dot(const EichlerContext& ctx, int radius, const std::vector<IdealLabel>& highlight);

}  // namespace metacomm
