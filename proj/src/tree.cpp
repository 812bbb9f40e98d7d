#include "metacomm/tree.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace metacomm {

Mat2 TreeVertex::representative(const Modulus& mod) const {
  if (a + b >= mod.precision()) {
    throw Error(ErrorKind::PrecisionExhausted, "vertex " + to_string() + " exceeds precision");
  }
  return Mat2(PAdicScalar::from_residue(mod, mod.power(a)), PAdicScalar::from_residue(mod, r),
              PAdicScalar(mod, 0), PAdicScalar::from_residue(mod, mod.power(b)));
}

std::string TreeVertex::to_string() const {
  return std::to_string(a) + "," + std::to_string(r) + "," + std::to_string(b);
}

bool Segment::same_support(const Segment& other) const {
  auto lhs = path;
  auto rhs = other.path;
  std::sort(lhs.begin(), lhs.end());
  std::sort(rhs.begin(), rhs.end());
  return lhs == rhs;
}

TreeVertex canonical_vertex(const Mat2& g) {
  const Modulus& mod = g.modulus();
  const PAdicScalar det = g.det();
  if (det.is_zero()) {
    throw Error(ErrorKind::SingularInput, g.to_string() + " has determinant 0 at this precision");
  }
  const int det_val = det.val();

  // Row-reduce the first column with the minimal-valuation entry as pivot.
  PAdicScalar x11 = g.at(0, 0), x12 = g.at(0, 1), x21 = g.at(1, 0), x22 = g.at(1, 1);
  if (x21.val() < x11.val()) {
    std::swap(x11, x21);
    std::swap(x12, x22);
  }
  const int a = x11.val();
  const PAdicScalar u_inv = unit_inv(x11.div_p_pow(a));
  const PAdicScalar q = x21.div_p_pow(a) * u_inv;
  x22 -= q * x12;

  // x11 * x22 = +-det, so x22 has valuation det_val - a. Row 2 scales to
  // [0, p^b]; row 1 scales by u^-1 and reduces modulo row 2.
  const int b = det_val - a;
  if (x22.val() != b) {
    throw Error(ErrorKind::PrecisionExhausted, "lost precision reducing " + g.to_string());
  }
  std::uint64_t r = (x12 * u_inv).residue_mod_p_pow(b);

  // Homothety: divide out the common power of p.
  int shift = std::min(a, b);
  if (r != 0) {
    int vr = PAdicScalar::from_residue(mod, r).val();
    shift = std::min(shift, vr);
  }
  TreeVertex v;
  v.a = a - shift;
  v.b = b - shift;
  v.r = r / mod.power(shift);
  return v;
}

int distance(const TreeVertex& v1, const TreeVertex& v2, const Modulus& mod) {
  const int det_val = v1.a + v1.b + v2.a + v2.b;
  if (det_val >= mod.precision()) {
    throw Error(ErrorKind::PrecisionExhausted, "distance between " + v1.to_string() + " and " +
                                                   v2.to_string() + " exceeds precision");
  }
  const Mat2 h = v2.representative(mod) * v1.representative(mod).adjugate();
  int e1 = kInfiniteValuation;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) e1 = std::min(e1, h.at(i, j).val());
  }
  // Elementary divisors p^e1 | p^e2 with e1 + e2 = det_val.
  return det_val - 2 * e1;
}

TreeVertex act(const TreeVertex& v, const Mat2& g) {
  return canonical_vertex(v.representative(g.modulus()) * g);
}

std::vector<TreeVertex> neighbors(const TreeVertex& v, const Modulus& mod) {
  const Mat2 rep = v.representative(mod);
  const auto p = static_cast<std::int64_t>(mod.prime());
  std::vector<TreeVertex> out;
  out.reserve(mod.prime() + 1);
  for (std::int64_t j = 0; j < p; ++j) out.push_back(canonical_vertex(Mat2(mod, 1, j, 0, p) * rep));
  out.push_back(canonical_vertex(Mat2(mod, p, 0, 0, 1) * rep));
  return out;
}

Segment geodesic(const TreeVertex& v1, const TreeVertex& v2, const Modulus& mod) {
  Segment seg{v1, v2, {v1}};
  TreeVertex cur = v1;
  int d = distance(cur, v2, mod);
  while (d > 0) {
    bool stepped = false;
    for (const auto& w : neighbors(cur, mod)) {
      if (distance(w, v2, mod) < d) {
        cur = w;
        --d;
        stepped = true;
        break;
      }
    }
    if (!stepped) {
      throw Error(ErrorKind::PrecisionExhausted, "no neighbor of " + cur.to_string() +
                                                     " approaches " + v2.to_string());
    }
    seg.path.push_back(cur);
  }
  return seg;
}

Segment order_segment(const EichlerContext& ctx) {
  Segment seg;
  for (int i = 0; i <= ctx.n(); ++i) seg.path.push_back(canonical_vertex(gamma_i(ctx, i)));
  seg.from = seg.path.front();
  seg.to = seg.path.back();
  return seg;
}

Segment segment_of_ideal(const EichlerContext& ctx, const NormPIdeal& ideal) {
  const TreeVertex start = act(TreeVertex::root(), ideal.generator);
  const TreeVertex end = canonical_vertex(gamma_of(ctx) * ideal.generator);
  return geodesic(start, end, ctx.modulus());
}

std::vector<TreeVertex> ball(const std::vector<TreeVertex>& centers, int radius,
                             const Modulus& mod) {
  std::map<TreeVertex, int> depth;
  std::deque<TreeVertex> queue;
  for (const auto& c : centers) {
    if (depth.emplace(c, 0).second) queue.push_back(c);
  }
  while (!queue.empty()) {
    TreeVertex v = queue.front();
    queue.pop_front();
    const int dv = depth[v];
    if (dv == radius) continue;
    for (const auto& w : neighbors(v, mod)) {
      if (depth.emplace(w, dv + 1).second) queue.push_back(w);
    }
  }
  std::vector<TreeVertex> out;
  out.reserve(depth.size());
  for (const auto& [v, d] : depth) out.push_back(v);
  return out;
}

namespace {

std::string quoted(const TreeVertex& v) { return "\"" + v.to_string() + "\""; }

std::string highlight_attributes(const HighlightedSegment& h) {
  switch (h.side) {
    case Side::S1: return "color=blue, style=solid, label=\"" + h.name + "\"";
    case Side::S2: return "color=red, style=solid, label=\"" + h.name + "\"";
    case Side::Rad: return "color=black, style=dashed, label=\"" + h.name + "\"";
  }
  return "";
}

}  // namespace

std::string render_dot(const std::vector<TreeVertex>& centers, int radius, const Modulus& mod,
                       const std::vector<TreeVertex>& bold_path,
                       const std::vector<HighlightedSegment>& highlights) {
  if (radius < 0) throw Error(ErrorKind::InvalidArgument, "radius must be >= 0");
  std::vector<TreeVertex> ball_vertices = ball(centers, radius, mod);
  std::set<TreeVertex> vertices(ball_vertices.begin(), ball_vertices.end());
  for (const auto& h : highlights) vertices.insert(h.segment.path.begin(), h.segment.path.end());

  std::set<std::pair<TreeVertex, TreeVertex>> bold;
  for (std::size_t i = 0; i + 1 < bold_path.size(); ++i) {
    bold.insert(std::minmax(bold_path[i], bold_path[i + 1]));
  }

  std::ostringstream os;
  os << "graph bruhat_tits {\n";
  os << "  node [shape=ellipse, fontsize=10];\n";
  for (const auto& v : vertices) os << "  " << quoted(v) << ";\n";
  for (const auto& v : vertices) {
    for (const auto& w : neighbors(v, mod)) {
      if (!(v < w) || !vertices.contains(w)) continue;
      os << "  " << quoted(v) << " -- " << quoted(w);
      if (bold.contains({v, w})) os << " [style=bold]";
      os << ";\n";
    }
  }
  for (const auto& h : highlights) {
    const auto& path = h.segment.path;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      os << "  " << quoted(path[i]) << " -- " << quoted(path[i + 1]) << " ["
         << highlight_attributes(h) << "];\n";
    }
  }
  os << "}\n";
  return os.str();
}

std::string export_dot(const EichlerContext& ctx, int radius,
                       const std::vector<IdealLabel>& highlight) {
  const Segment o_segment = order_segment(ctx);
  std::vector<HighlightedSegment> highlights;
  highlights.reserve(highlight.size());
  for (const auto& label : highlight) {
    const NormPIdeal& ideal = ctx.census()[ctx.index_of(label)];
    highlights.push_back({label.to_string(), label.side, segment_of_ideal(ctx, ideal)});
  }
  return render_dot(o_segment.path, radius, ctx.modulus(), o_segment.path, highlights);
}

}  // namespace metacomm
