#include <algorithm>
#include <map>
#include <queue>
#include <regex>
#include <sstream>

#include "doctest.h"
#include "generators.hpp"
#include "metacomm/tree.hpp"

using namespace metacomm;

namespace {

// Graph distance by breadth-first search over neighbors, bounded by `limit`.
int bfs_distance(const TreeVertex& from, const TreeVertex& to, const Modulus& mod, int limit) {
  std::map<TreeVertex, int> seen{{from, 0}};
  std::queue<TreeVertex> todo;
  todo.push(from);
  while (!todo.empty()) {
    const TreeVertex v = todo.front();
    todo.pop();
    const int d = seen[v];
    if (v == to) return d;
    if (d == limit) continue;
    for (const auto& w : neighbors(v, mod)) {
      if (seen.emplace(w, d + 1).second) todo.push(w);
    }
  }
  return -1;
}

}  // namespace

TEST_CASE("canonical vertex examples") {
  const EichlerContext ctx(3, 1);
  CHECK(canonical_vertex(Mat2::identity(ctx.modulus())) == TreeVertex::root());
  CHECK(canonical_vertex(ctx.matrix(3, 0, 0, 3)) == TreeVertex::root());
  const TreeVertex top{1, 0, 0};
  CHECK(canonical_vertex(ctx.matrix(3, 0, 3, 1)) == top);
  CHECK(canonical_vertex(gamma_of(ctx)) == top);
  CHECK(act(TreeVertex::root(), gamma_of(ctx)) == top);
  CHECK(top.to_string() == "1,0,0");
  CHECK_THROWS_AS(canonical_vertex(ctx.matrix(1, 0, 0, 0)), Error);
}

TEST_CASE("canonical vertex is stable under units and homothety") {
  auto r = gen::rng(17);
  for (const auto& level : gen::small_levels()) {
    const EichlerContext ctx(level.p, level.n);
    const Mat2 pI = Mat2::scalar(ctx.scalar(static_cast<std::int64_t>(ctx.p())));
    for (int i = 0; i < 50; ++i) {
      // Random g with small p-power determinant.
      Mat2 g = gen::gl2_unit(ctx, r);
      const int steps = static_cast<int>(r() % 4);
      for (int k = 0; k < steps; ++k) g = alpha_gen(ctx, r() % ctx.p()) * g;
      const TreeVertex v = canonical_vertex(g);
      Mat2 moved = gen::gl2_unit(ctx, r) * g;
      for (int k = 0; k <= 2; ++k) {
        CHECK(canonical_vertex(moved) == v);
        moved = pI * moved;
      }
      CHECK(canonical_vertex(v.representative(ctx.modulus())) == v);
    }
  }
}

TEST_CASE("distance examples") {
  for (int n = 1; n <= 3; ++n) {
    const EichlerContext ctx(3, n);
    const auto& mod = ctx.modulus();
    const TreeVertex root = TreeVertex::root();
    CHECK(distance(root, root, mod) == 0);
    CHECK(distance(root, canonical_vertex(gamma_of(ctx)), mod) == n);
    for (std::uint64_t s = 0; s < 3; ++s) {
      CHECK(distance(root, canonical_vertex(alpha_gen(ctx, s) * gamma_of(ctx)), mod) == n + 1);
    }
  }
}

TEST_CASE("distance agrees with graph search") {
  auto r = gen::rng(23);
  for (std::uint64_t p : {2ULL, 3ULL}) {
    const EichlerContext ctx(p, 1);
    const auto& mod = ctx.modulus();
    const auto vertices = ball({TreeVertex::root()}, 3, mod);
    for (int i = 0; i < 40; ++i) {
      const auto& v = vertices[r() % vertices.size()];
      const auto& w = vertices[r() % vertices.size()];
      CHECK(distance(v, w, mod) == bfs_distance(v, w, mod, 6));
    }
  }
}

TEST_CASE("neighbors") {
  const EichlerContext ctx(3, 1);
  const auto& mod = ctx.modulus();
  const auto adj = neighbors(TreeVertex::root(), mod);
  const std::vector<TreeVertex> expected = {
      canonical_vertex(alpha_gen(ctx, 0)), canonical_vertex(alpha_gen(ctx, 1)),
      canonical_vertex(alpha_gen(ctx, 2)), canonical_vertex(gamma_i(ctx, 1))};
  CHECK(adj == expected);
  auto r = gen::rng(29);
  for (const auto& level : gen::small_levels()) {
    const EichlerContext c(level.p, level.n);
    const auto vertices = ball({TreeVertex::root()}, 2, c.modulus());
    for (int i = 0; i < 10; ++i) {
      const auto& v = vertices[r() % vertices.size()];
      auto around = neighbors(v, c.modulus());
      CHECK(around.size() == c.p() + 1);
      std::sort(around.begin(), around.end());
      CHECK(std::adjacent_find(around.begin(), around.end()) == around.end());
      for (const auto& w : around) {
        CHECK(distance(v, w, c.modulus()) == 1);
        const auto back = neighbors(w, c.modulus());
        CHECK(std::find(back.begin(), back.end(), v) != back.end());
      }
    }
  }
}

TEST_CASE("geodesics") {
  const EichlerContext ctx(3, 2);
  const auto& mod = ctx.modulus();
  const TreeVertex root = TreeVertex::root();
  CHECK(geodesic(root, root, mod).path == std::vector<TreeVertex>{root});
  const Segment seg = geodesic(root, canonical_vertex(gamma_of(ctx)), mod);
  REQUIRE(seg.path.size() == 3);
  CHECK(seg.path[1] == canonical_vertex(gamma_i(ctx, 1)));
  CHECK(order_segment(ctx).same_support(seg));
}

TEST_CASE("isometry of unit and gamma actions") {
  auto r = gen::rng(31);
  for (const auto& level : gen::small_levels()) {
    const EichlerContext ctx(level.p, level.n);
    const auto& mod = ctx.modulus();
    const auto vertices = ball({TreeVertex::root()}, 2, mod);
    for (int i = 0; i < 20; ++i) {
      const auto& v = vertices[r() % vertices.size()];
      const auto& w = vertices[r() % vertices.size()];
      const int d = distance(v, w, mod);
      const Mat2 u = gen::gl2_unit(ctx, r);
      CHECK(distance(act(v, u), act(w, u), mod) == d);
      CHECK(distance(act(v, gamma_of(ctx)), act(w, gamma_of(ctx)), mod) == d);
      const Mat2 pI = Mat2::scalar(ctx.scalar(static_cast<std::int64_t>(ctx.p())));
      CHECK(act(v, pI) == v);
    }
  }
}

TEST_CASE("segments of census ideals") {
  const EichlerContext ctx(3, 1);
  const auto& mod = ctx.modulus();
  const TreeVertex root = TreeVertex::root();
  const TreeVertex top = canonical_vertex(gamma_of(ctx));

  const Segment s1 = segment_of_ideal(ctx, ctx.census()[ctx.index_of(IdealLabel::s1(1))]);
  CHECK(s1.from == canonical_vertex(alpha_gen(ctx, 1)));
  CHECK(s1.to == root);

  const Segment s2 = segment_of_ideal(ctx, ctx.census()[ctx.index_of(IdealLabel::s2(1))]);
  CHECK(s2.from == top);
  CHECK(s2.to == canonical_vertex(alpha_gen(ctx, 1) * gamma_of(ctx)));

  const Segment rad = segment_of_ideal(ctx, ctx.census()[ctx.index_of(IdealLabel::rad())]);
  CHECK(rad.same_support(order_segment(ctx)));
  CHECK(rad.length() == 1);
  CHECK(distance(root, top, mod) == 1);
}

TEST_CASE("dot export") {
  const EichlerContext ctx(3, 1);
  const auto& mod = ctx.modulus();
  CHECK(ball({TreeVertex::root()}, 1, mod).size() == 5);

  const std::string around_root = render_dot({TreeVertex::root()}, 1, mod, {}, {});
  const std::regex node_line(R"(^  "\d+,\d+,\d+";$)");
  std::size_t nodes = 0;
  std::istringstream lines(around_root);
  for (std::string line; std::getline(lines, line);) nodes += std::regex_match(line, node_line);
  CHECK(nodes == 5);

  std::vector<IdealLabel> all;
  for (const auto& ideal : ctx.census()) all.push_back(ideal.label);
  const std::string dot = export_dot(ctx, 1, all);
  CHECK(dot.rfind("graph bruhat_tits {", 0) == 0);
  CHECK(dot.back() == '\n');
  std::size_t styled = 0;
  const std::regex overlay(R"(label="(S1|S2)\(\d+\)\"|label="Rad")");
  for (auto it = std::sregex_iterator(dot.begin(), dot.end(), overlay); it != std::sregex_iterator(); ++it) {
    ++styled;
  }
  CHECK(styled == 7);
  CHECK(dot.find("style=bold") != std::string::npos);
  CHECK(dot.find("style=dashed") != std::string::npos);
  CHECK(export_dot(ctx, 1, all) == dot);
  // Balanced braces and quotes as a syntactic sanity check.
  CHECK(std::count(dot.begin(), dot.end(), '{') == std::count(dot.begin(), dot.end(), '}'));
  CHECK(std::count(dot.begin(), dot.end(), '"') % 2 == 0);
}
