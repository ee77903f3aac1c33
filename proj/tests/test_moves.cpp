#include <algorithm>
#include <random>
#include <vector>

#include "doctest.h"
#include "singlink/moves.hpp"

using namespace singlink;

namespace {

bool lists(const std::vector<Move>& ms, const Move& mv) {
  return std::find(ms.begin(), ms.end(), mv) != ms.end();
}

std::vector<IVec3> verts_of(const Diagram& d) { return d.verts; }

}  // namespace

TEST_CASE("segment diagram admits only face additions") {
  Diagram seg = newton_boundary({{0, 1, 1}, {3, 0, 0}});
  std::vector<Move> ms = enumerate_moves(seg);
  REQUIRE(!ms.empty());
  for (const Move& mv : ms) CHECK(mv.kind == MoveKind::M1Plus);

  Move hang{MoveKind::M1Plus, {0, 1, 1}, {3, 0, 0}, {{1, 0, 1}}, {}};
  CHECK(lists(ms, hang));

  Diagram r = apply_move(seg, hang);
  REQUIRE(r.n_compact == 1);
  CHECK(r.faces[0].n == IVec3{1, 1, 2});
  CHECK(r.faces[0].m == 3);
  CHECK(verts_of(r) == std::vector<IVec3>{{0, 1, 1}, {1, 0, 1}, {3, 0, 0}});

  Move back = inverse_move(seg, hang, r);
  CHECK(back.kind == MoveKind::M1Minus);
  CHECK(back.removed == std::vector<IVec3>{{1, 0, 1}});
  CHECK(same_boundary(apply_move(r, back), seg));

  // removing the hanging face is the only reduction of the extended diagram
  std::vector<Move> downs =
      enumerate_moves(r, {MoveKind::M1Minus, MoveKind::M2Minus});
  REQUIRE(downs.size() == 1);
  CHECK(downs[0] == back);
  CHECK(verts_of(m1_exhaust(r)) == verts_of(seg));
}

TEST_CASE("segment class recognition and reduction") {
  Diagram t = newton_boundary({{2, 0, 1}, {0, 1, 1}, {1, 1, 0}});
  CHECK(segment_class(t));
  CHECK(segment_class_n(t) == 3);

  Move grow{MoveKind::M2Plus, {1, 1, 0}, {2, 0, 1}, {{3, 0, 0}}, {}};
  CHECK(lists(enumerate_moves(t, {MoveKind::M2Plus}), grow));
  Diagram q = apply_move(t, grow);
  REQUIRE(q.n_compact == 1);
  CHECK(q.faces[0].verts.size() == 4);

  Move back = inverse_move(t, grow, q);
  CHECK(back.kind == MoveKind::M2Minus);
  CHECK(same_boundary(apply_move(q, back), t));

  Diagram seg = newton_boundary({{0, 1, 1}, {3, 0, 0}});
  Perm np{9, 9, 9};
  Diagram dm = d_minimal(t, &np);
  CHECK(verts_of(dm) == verts_of(seg));
  CHECK(np == Perm{0, 1, 2});
  CHECK(equivalent(t, seg));

  // permuted segments land on the same named representative
  CHECK(equivalent(seg, newton_boundary({{1, 0, 1}, {0, 3, 0}})));
  CHECK(equivalent(seg, newton_boundary({{0, 1, 1}, {3, 0, 0}, {1, 0, 1}})));
  CHECK(!equivalent(seg, newton_boundary({{0, 1, 1}, {4, 0, 0}})));

  CHECK(!det_criterion_check(t));
  CHECK(det_criterion_check(seg));
  REQUIRE(seg.edges.size() == 1);
  CHECK(seg.edges[0].det == 3);

  CHECK_THROWS_AS(canonical(t), input_error);
}

TEST_CASE("brieskorn diagram is rigid") {
  Diagram b = newton_boundary({{5, 0, 0}, {0, 3, 0}, {0, 0, 2}});
  CHECK(enumerate_moves(b).empty());
  CHECK(!segment_class(b));
  CHECK_THROWS_AS(segment_class_n(b), construction_error);
  CHECK(same_boundary(canonical(b), b));
  Perm np{9, 9, 9};
  Diagram dm = d_minimal(b, &np);
  CHECK(verts_of(dm) == verts_of(b));
  CHECK(np == Perm{0, 1, 2});
  CHECK(det_criterion_check(b));
}

TEST_CASE("illegal moves are rejected") {
  Diagram seg = newton_boundary({{0, 1, 1}, {3, 0, 0}});
  // apex outside every frame of the axis
  CHECK_THROWS_AS(
      apply_move(seg,
                 Move{MoveKind::M1Plus, {0, 1, 1}, {3, 0, 0}, {{0, 0, 1}}, {}}),
      input_error);
  // no such axis edge
  CHECK_THROWS_AS(
      apply_move(seg,
                 Move{MoveKind::M1Plus, {0, 1, 1}, {2, 0, 0}, {{1, 0, 1}}, {}}),
      input_error);

  // cutting the top corner of the canonical quadrilateral strands the
  // remaining points too far from the first axis
  Diagram tc = newton_boundary({{1, 0, 2}, {0, 2, 2}, {0, 5, 0}, {2, 1, 0}});
  CHECK_THROWS_AS(
      apply_move(tc, Move{MoveKind::M2Minus,
                          {0, 2, 2},
                          {2, 1, 0},
                          {},
                          {{1, 0, 2}}}),
      input_error);

  // valid diagram required
  CHECK_THROWS_AS(
      apply_move(newton_boundary({{2, 2, 0}, {0, 0, 3}}),
                 Move{MoveKind::M1Plus, {0, 0, 3}, {2, 2, 0}, {{1, 0, 1}}, {}}),
      construction_error);
  CHECK_THROWS_AS(d_minimal(newton_boundary({{2, 2, 0}, {0, 0, 3}})),
                  construction_error);
}

TEST_CASE("canonical representative of the quadrilateral class") {
  Diagram q = newton_boundary({{1, 0, 3}, {0, 1, 3}, {0, 3, 0}, {3, 0, 0}});
  Diagram twin = newton_boundary({{0, 1, 3}, {1, 2, 0}, {3, 0, 0}});
  Diagram twin2 = newton_boundary({{1, 0, 3}, {2, 1, 0}, {0, 3, 0}});

  // the full trapezoid is the common maximal representative
  CHECK(same_boundary(canonical(q), q));
  CHECK(same_boundary(canonical(twin), q));
  CHECK(same_boundary(canonical(twin2), q));

  std::vector<IVec3> want{{0, 0, 3}, {0, 2, 1}, {3, 1, 0}};
  CHECK(verts_of(d_minimal(q)) == want);
  CHECK(verts_of(d_minimal(twin)) == want);
  CHECK(verts_of(d_minimal(twin2)) == want);
  CHECK(equivalent(q, twin));
  CHECK(equivalent(twin, twin2));

  // an intermediate representative of the same class
  Diagram mid =
      newton_boundary({{0, 1, 3}, {1, 0, 3}, {2, 1, 0}, {1, 2, 0}});
  CHECK(verts_of(d_minimal(mid)) == want);
}

TEST_CASE("ambiguous reduction of a removable trapezoid") {
  Diagram tc = newton_boundary({{1, 0, 2}, {0, 2, 2}, {0, 5, 0}, {2, 1, 0}});

  // two competing cuts: one reaches a one-face representative, the other a
  // trapezoid that cannot shrink further
  std::vector<Move> cuts = enumerate_moves(tc, {MoveKind::M2Minus});
  REQUIRE(cuts.size() == 2);
  Move drop_top{MoveKind::M2Minus, {0, 5, 0}, {1, 0, 2}, {}, {{0, 2, 2}}};
  Move drop_far{MoveKind::M2Minus, {0, 2, 2}, {1, 3, 0}, {}, {{0, 5, 0}}};
  CHECK(lists(cuts, drop_top));
  CHECK(lists(cuts, drop_far));

  std::vector<IVec3> want{{0, 0, 5}, {0, 2, 1}, {2, 1, 0}};
  Perm np{9, 9, 9};
  CHECK(verts_of(d_minimal(tc, &np)) == want);
  CHECK(np == Perm{2, 0, 1});

  // both reduction paths meet at the same distinguished representative
  Diagram trap = apply_move(tc, drop_far);
  CHECK(same_boundary(canonical(trap), tc));
  CHECK(verts_of(d_minimal(trap)) == want);
  CHECK(equivalent(tc, trap));
}

TEST_CASE("sliding base reaches the far axis") {
  Diagram m = newton_boundary({{0, 0, 3}, {2, 0, 1}, {0, 3, 1}, {4, 1, 0}});

  std::vector<Move> ups = enumerate_moves(m, {MoveKind::M2Plus});
  REQUIRE(ups.size() == 2);
  Move one{MoveKind::M2Plus, {0, 3, 1}, {4, 1, 0}, {{2, 4, 0}}, {}};
  Move two{MoveKind::M2Plus, {0, 3, 1}, {4, 1, 0}, {{0, 7, 0}}, {}};
  CHECK(lists(ups, one));
  CHECK(lists(ups, two));

  // the far addition swallows the collinear point in between, so the
  // inverse removes both
  Diagram far = apply_move(m, two);
  Move back = inverse_move(m, two, far);
  CHECK(back.removed == std::vector<IVec3>{{0, 7, 0}, {2, 4, 0}});
  CHECK(same_boundary(apply_move(far, back), m));

  Diagram fat = newton_boundary(
      {{0, 0, 3}, {2, 0, 1}, {0, 3, 1}, {4, 1, 0}, {2, 4, 0}, {0, 7, 0}});
  CHECK(same_boundary(canonical(m), fat));

  Perm np{9, 9, 9};
  std::vector<IVec3> want{{0, 0, 7}, {0, 1, 3}, {1, 2, 0}, {2, 1, 0}};
  Diagram dm = d_minimal(m, &np);
  CHECK(verts_of(dm) == want);
  CHECK(np == Perm{0, 2, 1});
  CHECK(verts_of(d_minimal(dm)) == want);
  CHECK(equivalent(m, fat));
}

TEST_CASE("stationary base keeps its corner") {
  Diagram s = newton_boundary({{0, 0, 2}, {2, 0, 1}, {0, 3, 1}, {7, 1, 0}});
  Diagram dm = d_minimal(s);
  CHECK(verts_of(dm) ==
        std::vector<IVec3>{{0, 0, 2}, {0, 2, 1}, {1, 7, 0}, {3, 0, 1}});
  CHECK(same_boundary(dm, permute(s, Perm{1, 0, 2})));
  CHECK(det_criterion_check(dm));
}

TEST_CASE("random walks stay in one class") {
  std::vector<Diagram> starts = {
      newton_boundary({{1, 0, 2}, {0, 2, 2}, {0, 5, 0}, {2, 1, 0}}),
      newton_boundary({{0, 0, 3}, {2, 0, 1}, {0, 3, 1}, {4, 1, 0}}),
      newton_boundary({{1, 0, 3}, {0, 1, 3}, {0, 3, 0}, {3, 0, 0}}),
      newton_boundary({{0, 0, 2}, {2, 0, 1}, {0, 3, 1}, {7, 1, 0}}),
  };
  std::mt19937_64 rng(20240817);
  for (const Diagram& d0 : starts) {
    Diagram base = d_minimal(d0);
    for (int walk = 0; walk < 3; ++walk) {
      Diagram cur = d0;
      for (int step = 0; step < 5; ++step) {
        std::vector<Move> ms = enumerate_moves(cur);
        if (ms.empty()) break;
        cur = apply_move(cur, ms[rng() % ms.size()]);
      }
      CHECK(same_boundary(d_minimal(cur), base));
    }
  }
}

TEST_CASE("canonical and minimal representatives are fixpoints") {
  std::vector<Diagram> starts = {
      newton_boundary({{1, 0, 2}, {0, 2, 2}, {0, 5, 0}, {2, 1, 0}}),
      newton_boundary({{0, 0, 3}, {2, 0, 1}, {0, 3, 1}, {4, 1, 0}}),
      newton_boundary({{1, 0, 3}, {0, 1, 3}, {0, 3, 0}, {3, 0, 0}}),
  };
  for (const Diagram& d : starts) {
    Diagram can = canonical(d);
    CHECK(same_boundary(canonical(can), can));
    Diagram dm = d_minimal(d);
    CHECK(same_boundary(d_minimal(dm), dm));
    CHECK(enumerate_moves(dm, {MoveKind::M1Minus, MoveKind::M2Minus}).empty());
    CHECK(det_criterion_check(dm));
  }
}
