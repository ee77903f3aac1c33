#include "singlink/moves.hpp"

#include <algorithm>
#include <iterator>
#include <set>
#include <tuple>

#include "singlink/lattice.hpp"

namespace singlink {

const char* str(MoveKind k) {
  switch (k) {
    case MoveKind::M1Plus:
      return "M1+";
    case MoveKind::M1Minus:
      return "M1-";
    case MoveKind::M2Plus:
      return "M2+";
    case MoveKind::M2Minus:
      return "M2-";
  }
  return "?";
}

bool Move::operator<(const Move& o) const {
  int a = static_cast<int>(kind);
  int b = static_cast<int>(o.kind);
  return std::tie(a, axis_a, axis_b, added, removed) <
         std::tie(b, o.axis_a, o.axis_b, o.added, o.removed);
}

namespace {

bool coord_plane_edge(const IVec3& a, const IVec3& b) {
  for (int k = 0; k < 3; ++k)
    if (a[k] == 0 && b[k] == 0) return true;
  return false;
}

// A frame of an axis edge: a permutation sending one endpoint to (a,0,c)
// and the other to (0,1,b) with a > 0 and b + c > 0.  Every axis edge of a
// valid diagram has at least one frame.
struct AxisFrame {
  Perm perm;
  Int a, b, c;
};

std::vector<AxisFrame> axis_frames(const IVec3& u, const IVec3& w) {
  std::vector<AxisFrame> out;
  for (const Perm& s : all_perms())
    for (int role = 0; role < 2; ++role) {
      IVec3 ia = apply_perm(s, role == 0 ? u : w);
      IVec3 ib = apply_perm(s, role == 0 ? w : u);
      if (ia[1] != 0 || ia[0] <= 0) continue;
      if (ib[0] != 0 || ib[1] != 1) continue;
      if (ib[2] + ia[2] <= 0) continue;
      out.push_back({s, ia[0], ib[2], ia[2]});
    }
  return out;
}

bool framed_apex(const IVec3& u, const IVec3& w, const IVec3& apex) {
  for (const AxisFrame& fr : axis_frames(u, w))
    if (apply_perm(fr.perm, apex)[1] == 0) return true;
  return false;
}

std::vector<const DEdge*> axis_edges(const Diagram& d) {
  std::vector<const DEdge*> out;
  for (const DEdge& e : d.edges)
    if (e.boundary && !coord_plane_edge(e.a, e.b)) out.push_back(&e);
  return out;
}

bool in_gamma_plus(const Diagram& d, const IVec3& p) {
  for (int k = 0; k < 3; ++k)
    if (p[k] < 0) return false;
  for (const DFace& f : d.faces)
    if (dot(f.n, p) < f.m) return false;
  return true;
}

std::vector<IVec3> face_points(const DFace& f) {
  return polygon_lattice_points(f.verts, Plane{f.n, f.m});
}

// support rewritten by the move and the boundary rebuilt from it
Diagram moved_result(const std::vector<IVec3>& dpts, const Move& mv) {
  std::vector<IVec3> s;
  if (mv.kind == MoveKind::M1Plus || mv.kind == MoveKind::M2Plus) {
    s = dpts;
    s.insert(s.end(), mv.added.begin(), mv.added.end());
  } else {
    std::set<IVec3> gone(mv.removed.begin(), mv.removed.end());
    for (const IVec3& p : dpts)
      if (!gone.count(p)) s.push_back(p);
  }
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  if (s.empty()) throw construction_error("move removes every point");
  return newton_boundary(s);
}

// a compact face up to the cyclic order of its vertices
using FaceSig = std::tuple<IVec3, Int, std::vector<IVec3>>;

FaceSig sig_of(const DFace& f) {
  std::vector<IVec3> vs = f.verts;
  std::sort(vs.begin(), vs.end());
  return {f.n, f.m, std::move(vs)};
}

std::vector<FaceSig> compact_sigs(const Diagram& d) {
  std::vector<FaceSig> out;
  for (int i = 0; i < d.n_compact; ++i) out.push_back(sig_of(d.faces[i]));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<FaceSig> sig_diff(const std::vector<FaceSig>& x,
                              const std::vector<FaceSig>& y) {
  std::vector<FaceSig> out;
  std::set_difference(x.begin(), x.end(), y.begin(), y.end(),
                      std::back_inserter(out));
  return out;
}

const DEdge* find_edge(const Diagram& d, const IVec3& a, const IVec3& b) {
  for (const DEdge& e : d.edges)
    if (e.a == a && e.b == b) return &e;
  return nullptr;
}

const DEdge* find_axis_edge(const Diagram& d, const Move& mv) {
  if (!(mv.axis_a < mv.axis_b)) return nullptr;
  const DEdge* e = find_edge(d, mv.axis_a, mv.axis_b);
  if (!e || !e->boundary || coord_plane_edge(e->a, e->b)) return nullptr;
  return e;
}

const DFace* compact_owner(const Diagram& d, const DEdge& e) {
  if (e.f1 < d.n_compact) return &d.faces[e.f1];
  if (e.f2 < d.n_compact) return &d.faces[e.f2];
  return nullptr;
}

const DFace* face_by_plane(const Diagram& d, const IVec3& n, const Int& m) {
  for (int i = 0; i < d.n_compact; ++i)
    if (d.faces[i].n == n && d.faces[i].m == m) return &d.faces[i];
  return nullptr;
}

// side of p against the line ab inside the plane with normal n
Int line_side(const IVec3& a, const IVec3& b, const IVec3& p, const IVec3& n) {
  return dot(cross(b - a, p - a), n);
}

bool sorted_set(const std::vector<IVec3>& v) {
  return std::is_sorted(v.begin(), v.end()) &&
         std::adjacent_find(v.begin(), v.end()) == v.end();
}

bool verify_m1plus(const Diagram& d, const Move& mv, const Diagram& r) {
  if (!mv.removed.empty() || mv.added.size() != 1) return false;
  const IVec3& c = mv.added[0];
  const DEdge* e = find_axis_edge(d, mv);
  if (!e) return false;
  if (!framed_apex(e->a, e->b, c)) return false;
  if (in_gamma_plus(d, c)) return false;
  Plane pl;
  try {
    pl = plane_through(e->a, e->b, c);
  } catch (const construction_error&) {
    return false;
  }
  std::vector<IVec3> tv{e->a, e->b, c};
  std::sort(tv.begin(), tv.end());
  std::vector<FaceSig> want = compact_sigs(d);
  want.emplace_back(pl.n, pl.m, std::move(tv));
  std::sort(want.begin(), want.end());
  return compact_sigs(r) == want;
}

bool verify_m2plus(const Diagram& d, const Move& mv, const Diagram& r) {
  if (!mv.removed.empty() || mv.added.empty()) return false;
  if (!sorted_set(mv.added)) return false;
  const DEdge* e = find_axis_edge(d, mv);
  if (!e) return false;
  const DFace* f = compact_owner(d, *e);
  if (!f) return false;
  Int ref = 0;
  for (const IVec3& v : f->verts) {
    ref = line_side(e->a, e->b, v, f->n);
    if (ref != 0) break;
  }
  if (ref == 0) return false;
  for (const IVec3& p : mv.added) {
    for (int k = 0; k < 3; ++k)
      if (p[k] < 0) return false;
    if (dot(f->n, p) != f->m) return false;
    Int s = line_side(e->a, e->b, p, f->n);
    if (s == 0 || (s > 0) == (ref > 0)) return false;
  }
  if (d.n_compact != r.n_compact) return false;
  std::vector<FaceSig> ds = compact_sigs(d), rs = compact_sigs(r);
  std::vector<FaceSig> d_only = sig_diff(ds, rs), r_only = sig_diff(rs, ds);
  if (d_only.size() != 1 || r_only.size() != 1) return false;
  if (d_only[0] != sig_of(*f)) return false;
  if (std::get<0>(r_only[0]) != f->n || std::get<1>(r_only[0]) != f->m)
    return false;
  // the grown face may pick up plane points between the old face and the
  // added ones, but its corners come from the old points and the additions
  std::vector<IVec3> fp = face_points(*f);
  std::set<IVec3> allowed(fp.begin(), fp.end());
  allowed.insert(mv.added.begin(), mv.added.end());
  for (const IVec3& v : std::get<2>(r_only[0]))
    if (!allowed.count(v)) return false;
  const DFace* f2 = face_by_plane(r, f->n, f->m);
  if (!f2) return false;
  std::vector<IVec3> f2p = face_points(*f2);
  std::set<IVec3> have(f2p.begin(), f2p.end());
  for (const IVec3& p : allowed)
    if (!have.count(p)) return false;
  return true;
}

bool verify_m1minus(const Diagram& d, const Move& mv, const Diagram& r) {
  if (!mv.added.empty() || mv.removed.empty()) return false;
  if (!sorted_set(mv.removed)) return false;
  std::vector<FaceSig> ds = compact_sigs(d), rs = compact_sigs(r);
  std::vector<FaceSig> d_only = sig_diff(ds, rs), r_only = sig_diff(rs, ds);
  if (d_only.size() != 1 || !r_only.empty()) return false;
  const std::vector<IVec3>& tverts = std::get<2>(d_only[0]);
  if (tverts.size() != 3) return false;
  const DEdge* e = find_axis_edge(r, mv);
  if (!e) return false;
  if (!std::binary_search(tverts.begin(), tverts.end(), mv.axis_a) ||
      !std::binary_search(tverts.begin(), tverts.end(), mv.axis_b))
    return false;
  IVec3 apex;
  for (const IVec3& v : tverts)
    if (v != mv.axis_a && v != mv.axis_b) apex = v;
  if (!framed_apex(mv.axis_a, mv.axis_b, apex)) return false;
  const DFace* t =
      face_by_plane(d, std::get<0>(d_only[0]), std::get<1>(d_only[0]));
  if (!t) return false;
  std::vector<IVec3> tp = face_points(*t);
  std::vector<IVec3> keep = segment_lattice_points(mv.axis_a, mv.axis_b);
  std::sort(keep.begin(), keep.end());
  std::vector<IVec3> gone;
  std::set_difference(tp.begin(), tp.end(), keep.begin(), keep.end(),
                      std::back_inserter(gone));
  if (gone != mv.removed) return false;
  if (d.n_compact == 1) {
    std::vector<IVec3> sv{mv.axis_a, mv.axis_b};
    std::sort(sv.begin(), sv.end());
    if (r.n_compact != 0 || r.verts != sv) return false;
  }
  return true;
}

bool verify_m2minus(const Diagram& d, const Move& mv, const Diagram& r) {
  if (!mv.added.empty() || mv.removed.empty()) return false;
  if (!sorted_set(mv.removed)) return false;
  if (d.n_compact != r.n_compact) return false;
  std::vector<FaceSig> ds = compact_sigs(d), rs = compact_sigs(r);
  std::vector<FaceSig> d_only = sig_diff(ds, rs), r_only = sig_diff(rs, ds);
  if (d_only.size() != 1 || r_only.size() != 1) return false;
  if (std::get<0>(d_only[0]) != std::get<0>(r_only[0]) ||
      std::get<1>(d_only[0]) != std::get<1>(r_only[0]))
    return false;
  const DFace* f =
      face_by_plane(d, std::get<0>(d_only[0]), std::get<1>(d_only[0]));
  const DFace* f2 =
      face_by_plane(r, std::get<0>(r_only[0]), std::get<1>(r_only[0]));
  if (!f || !f2) return false;
  const DEdge* e = find_axis_edge(r, mv);
  if (!e) return false;
  if (dot(f->n, mv.axis_a) != f->m || dot(f->n, mv.axis_b) != f->m)
    return false;
  Int ref = 0;
  for (const IVec3& v : f2->verts) {
    ref = line_side(mv.axis_a, mv.axis_b, v, f->n);
    if (ref != 0) break;
  }
  if (ref == 0) return false;
  // the cut removes exactly the face points strictly beyond the axis line
  std::vector<IVec3> beyond, kept;
  for (const IVec3& p : face_points(*f)) {
    Int s = line_side(mv.axis_a, mv.axis_b, p, f->n);
    if (s != 0 && (s > 0) != (ref > 0))
      beyond.push_back(p);
    else
      kept.push_back(p);
  }
  if (beyond != mv.removed) return false;
  return face_points(*f2) == kept;
}

bool move_ok(const Diagram& d, const Move& mv, const Diagram& r) {
  if (!check_isolated(r).ok) return false;
  switch (mv.kind) {
    case MoveKind::M1Plus:
      return verify_m1plus(d, mv, r);
    case MoveKind::M1Minus:
      return verify_m1minus(d, mv, r);
    case MoveKind::M2Plus:
      return verify_m2plus(d, mv, r);
    case MoveKind::M2Minus:
      return verify_m2minus(d, mv, r);
  }
  return false;
}

void try_candidate(const Diagram& d, const std::vector<IVec3>& dpts,
                   const Move& mv, std::vector<Move>& out) {
  try {
    Diagram r = moved_result(dpts, mv);
    if (move_ok(d, mv, r)) out.push_back(mv);
  } catch (const construction_error&) {
  } catch (const input_error&) {
  }
}

void enum_m1plus(const Diagram& d, const std::vector<IVec3>& dpts,
                 std::vector<Move>& out) {
  Int maxc = 0;
  for (const IVec3& v : d.verts)
    for (int k = 0; k < 3; ++k) maxc = std::max(maxc, v[k]);
  Int bound = 3 * maxc + 3;
  for (const DEdge* e : axis_edges(d)) {
    std::set<IVec3> tried;
    for (const AxisFrame& fr : axis_frames(e->a, e->b)) {
      Perm back = inverse_perm(fr.perm);
      for (Int ap = 0; ap < fr.a; ++ap)
        for (Int cp = fr.c + 1; cp <= bound; ++cp) {
          IVec3 cand = apply_perm(back, IVec3{ap, 0, cp});
          // the positive hull is upward closed: larger heights stay inside
          if (in_gamma_plus(d, cand)) break;
          if (!tried.insert(cand).second) continue;
          try_candidate(d, dpts, {MoveKind::M1Plus, e->a, e->b, {cand}, {}},
                        out);
        }
    }
  }
}

// lattice points of the supporting plane of f strictly beyond the line ab,
// with nonnegative coordinates; the strictly positive normal bounds them
std::vector<IVec3> beyond_points(const DFace& f, const IVec3& a,
                                 const IVec3& b) {
  std::vector<IVec3> out;
  Int ref = 0;
  for (const IVec3& v : f.verts) {
    ref = line_side(a, b, v, f.n);
    if (ref != 0) break;
  }
  if (ref == 0) return out;
  for (Int x = 0; x * f.n[0] <= f.m; ++x)
    for (Int y = 0; x * f.n[0] + y * f.n[1] <= f.m; ++y) {
      Int rem = f.m - x * f.n[0] - y * f.n[1];
      if (rem % f.n[2] != 0) continue;
      IVec3 p{x, y, rem / f.n[2]};
      Int s = line_side(a, b, p, f.n);
      if (s != 0 && (s > 0) != (ref > 0)) out.push_back(p);
    }
  std::sort(out.begin(), out.end());
  return out;
}

void enum_m2plus(const Diagram& d, const std::vector<IVec3>& dpts,
                 std::vector<Move>& out) {
  for (const DEdge* e : axis_edges(d)) {
    const DFace* f = compact_owner(d, *e);
    if (!f) continue;
    for (const IVec3& p : beyond_points(*f, e->a, e->b))
      try_candidate(d, dpts, {MoveKind::M2Plus, e->a, e->b, {p}, {}}, out);
  }
}

void enum_m1minus(const Diagram& d, const std::vector<IVec3>& dpts,
                  std::vector<Move>& out) {
  for (int i = 0; i < d.n_compact; ++i) {
    const DFace& t = d.faces[i];
    if (t.verts.size() != 3) continue;
    std::vector<IVec3> tp = face_points(t);
    for (int k = 0; k < 3; ++k) {
      IVec3 a = t.verts[k];
      IVec3 b = t.verts[(k + 1) % 3];
      if (b < a) std::swap(a, b);
      if (coord_plane_edge(a, b)) continue;
      std::vector<IVec3> keep = segment_lattice_points(a, b);
      std::sort(keep.begin(), keep.end());
      std::vector<IVec3> gone;
      std::set_difference(tp.begin(), tp.end(), keep.begin(), keep.end(),
                          std::back_inserter(gone));
      if (gone.empty()) continue;
      try_candidate(d, dpts, {MoveKind::M1Minus, a, b, {}, gone}, out);
    }
  }
}

void enum_m2minus(const Diagram& d, const std::vector<IVec3>& dpts,
                  std::vector<Move>& out) {
  std::set<Move> seen;
  for (int i = 0; i < d.n_compact; ++i) {
    const DFace& f = d.faces[i];
    std::vector<IVec3> fp = face_points(f);
    int np = static_cast<int>(fp.size());
    for (int x = 0; x < np; ++x)
      for (int y = x + 1; y < np; ++y)
        for (int sgn = 0; sgn < 2; ++sgn) {
          std::vector<IVec3> cut, line;
          for (const IVec3& p : fp) {
            Int s = line_side(fp[x], fp[y], p, f.n);
            if (s == 0)
              line.push_back(p);
            else if ((s > 0) == (sgn == 0))
              cut.push_back(p);
          }
          if (cut.empty()) continue;
          Move mv{MoveKind::M2Minus, line.front(), line.back(), {}, cut};
          if (!seen.insert(mv).second) continue;
          try_candidate(d, dpts, mv, out);
        }
  }
}

// maximal extension: every face grown across each of its axes as far as the
// other faces and the validity conditions allow; the input must be M1-reduced
Diagram canonical_core(Diagram cur) {
  for (int guard = 0;; ++guard) {
    if (guard > 10000)
      throw construction_error("canonical: extension did not terminate");
    bool did = false;
    std::vector<std::pair<IVec3, IVec3>> axes;
    for (const DEdge* e : axis_edges(cur)) axes.emplace_back(e->a, e->b);
    for (const auto& [a, b] : axes) {
      const DEdge* e = find_edge(cur, a, b);
      if (!e || !e->boundary || coord_plane_edge(a, b)) continue;
      const DFace* f = compact_owner(cur, *e);
      if (!f) continue;
      std::vector<IVec3> sp = beyond_points(*f, a, b);
      if (sp.empty()) continue;
      // keep only additions on or above every other supporting plane
      std::vector<IVec3> smax;
      for (const IVec3& p : sp) {
        bool ok = true;
        for (int i = 0; i < cur.n_compact && ok; ++i) {
          const DFace& g = cur.faces[i];
          if (g.n == f->n && g.m == f->m) continue;
          if (dot(g.n, p) < g.m) ok = false;
        }
        if (ok) smax.push_back(p);
      }
      if (smax.empty()) continue;
      std::vector<std::vector<IVec3>> tries;
      tries.push_back(smax);
      if (smax.size() > 1)
        for (const IVec3& p : smax) tries.push_back({p});
      std::vector<IVec3> dpts = diagram_lattice_points(cur);
      for (const std::vector<IVec3>& add : tries) {
        Move mv{MoveKind::M2Plus, a, b, add, {}};
        try {
          Diagram r = moved_result(dpts, mv);
          if (move_ok(cur, mv, r)) {
            cur = std::move(r);
            did = true;
            break;
          }
        } catch (const construction_error&) {
        } catch (const input_error&) {
        }
      }
      if (did) break;
    }
    if (!did) break;
  }
  if (!enumerate_moves(cur, {MoveKind::M2Plus}).empty())
    throw construction_error("canonical: fixpoint still admits an extension");
  if (!enumerate_moves(cur, {MoveKind::M1Minus}).empty())
    throw construction_error("canonical: fixpoint admits a face removal");
  return cur;
}

// the corner of a width-one central trapezoid kept by the minimal
// representative: the one whose axis the sliding base can reach, with the
// narrow coordinate breaking the tie
IVec3 moving_target(const TrapezoidParams& f) {
  if (f.p < f.q) return f.r1 == 0 && f.r2 > 0 ? f.C : f.D;
  if (f.p > f.q) return f.r2 == 0 && f.r1 > 0 ? f.D : f.C;
  throw construction_error("d_minimal: sliding family with p equal to q");
}

Move pick_descent_move(const Diagram& cur, const std::vector<Move>& cuts) {
  auto smallest = [](const Move& x, const Move& y) {
    if (x.removed.size() != y.removed.size())
      return x.removed.size() < y.removed.size();
    if (x.removed != y.removed) return x.removed < y.removed;
    if (x.axis_a != y.axis_a) return x.axis_a < y.axis_a;
    return x.axis_b < y.axis_b;
  };
  std::optional<int> cf = central_face(cur);
  if (cf) {
    const DFace& f = cur.faces[*cf];
    std::vector<TrapezoidParams> fits = trapezoid_fits(f);
    if (!fits.empty()) {
      std::vector<IVec3> fp = face_points(f);
      std::vector<Move> central;
      for (const Move& mv : cuts)
        if (std::includes(fp.begin(), fp.end(), mv.removed.begin(),
                          mv.removed.end()))
          central.push_back(mv);
      const TrapezoidParams* sliding = nullptr;
      for (const TrapezoidParams& t : fits)
        if (t.n == 1) {
          sliding = &t;
          break;
        }
      if (sliding) {
        // slide toward the kept corner: never cut the top or the target,
        // and take the longest step available
        IVec3 target = moving_target(*sliding);
        std::vector<Move> good;
        for (const Move& mv : central) {
          bool hits = false;
          for (const IVec3& p : mv.removed)
            if (p == sliding->A || p == sliding->B || p == target) hits = true;
          if (!hits) good.push_back(mv);
        }
        if (!good.empty()) {
          auto longest = [](const Move& x, const Move& y) {
            if (x.removed.size() != y.removed.size())
              return x.removed.size() > y.removed.size();
            if (x.removed != y.removed) return x.removed < y.removed;
            if (x.axis_a != y.axis_a) return x.axis_a < y.axis_a;
            return x.axis_b < y.axis_b;
          };
          return *std::min_element(good.begin(), good.end(), longest);
        }
      } else {
        // a removable corner of a wide trapezoid: prefer cuts that leave no
        // four-cornered central face behind
        std::vector<IVec3> dpts = diagram_lattice_points(cur);
        std::vector<Move> good;
        for (const Move& mv : central) {
          Diagram r = moved_result(dpts, mv);
          std::optional<int> c2 = central_face(r);
          if (!(c2 && r.faces[*c2].verts.size() == 4)) good.push_back(mv);
        }
        if (!good.empty())
          return *std::min_element(good.begin(), good.end(), smallest);
      }
    }
  }
  return *std::min_element(cuts.begin(), cuts.end(), smallest);
}

}  // namespace

std::vector<Move> enumerate_moves(const Diagram& d,
                                  const std::vector<MoveKind>& kinds) {
  std::vector<IVec3> dpts = diagram_lattice_points(d);
  std::set<MoveKind> want(kinds.begin(), kinds.end());
  std::vector<Move> out;
  if (want.count(MoveKind::M1Plus)) enum_m1plus(d, dpts, out);
  if (want.count(MoveKind::M1Minus)) enum_m1minus(d, dpts, out);
  if (want.count(MoveKind::M2Plus)) enum_m2plus(d, dpts, out);
  if (want.count(MoveKind::M2Minus)) enum_m2minus(d, dpts, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Move> enumerate_moves(const Diagram& d) {
  return enumerate_moves(d, {MoveKind::M1Plus, MoveKind::M1Minus,
                             MoveKind::M2Plus, MoveKind::M2Minus});
}

Diagram apply_move(const Diagram& d, const Move& mv) {
  require_valid(d);
  Diagram r;
  try {
    r = moved_result(diagram_lattice_points(d), mv);
  } catch (const construction_error& err) {
    throw input_error(std::string("apply_move: ") + err.what());
  } catch (const input_error& err) {
    throw input_error(std::string("apply_move: ") + err.what());
  }
  IsolatedReport rep = check_isolated(r);
  if (!rep.ok)
    throw input_error("apply_move: the result is not a valid diagram");
  if (!move_ok(d, mv, r))
    throw input_error(std::string("apply_move: not a legal ") + str(mv.kind) +
                      " move on this diagram");
  if (!check_qhs(r))
    throw input_error(
        "apply_move: the result link is not a rational homology sphere");
  return r;
}

Move inverse_move(const Diagram& before, const Move& mv,
                  const Diagram& after) {
  Move inv;
  inv.axis_a = mv.axis_a;
  inv.axis_b = mv.axis_b;
  switch (mv.kind) {
    case MoveKind::M1Plus:
    case MoveKind::M2Plus: {
      inv.kind = mv.kind == MoveKind::M1Plus ? MoveKind::M1Minus
                                             : MoveKind::M2Minus;
      std::vector<IVec3> bp = diagram_lattice_points(before);
      std::vector<IVec3> ap = diagram_lattice_points(after);
      std::set_difference(ap.begin(), ap.end(), bp.begin(), bp.end(),
                          std::back_inserter(inv.removed));
      if (inv.removed.empty())
        throw input_error("inverse_move: the move added no point");
      break;
    }
    case MoveKind::M1Minus: {
      inv.kind = MoveKind::M1Plus;
      for (const IVec3& p : mv.removed)
        if (std::binary_search(before.verts.begin(), before.verts.end(), p))
          inv.added.push_back(p);
      if (inv.added.size() != 1)
        throw input_error(
            "inverse_move: no unique apex among the removed points");
      break;
    }
    case MoveKind::M2Minus:
      inv.kind = MoveKind::M2Plus;
      inv.added = mv.removed;
      break;
  }
  return inv;
}

Diagram m1_exhaust(const Diagram& d) {
  Diagram cur = d;
  for (int guard = 0; guard < 1000; ++guard) {
    std::vector<Move> ms = enumerate_moves(cur, {MoveKind::M1Minus});
    if (ms.empty()) return cur;
    cur = moved_result(diagram_lattice_points(cur), ms.front());
  }
  throw construction_error("m1_exhaust: reduction did not terminate");
}

bool segment_class(const Diagram& d) {
  return contains(d, IVec3{0, 1, 1}) || contains(d, IVec3{1, 0, 1}) ||
         contains(d, IVec3{1, 1, 0});
}

Int segment_class_n(const Diagram& d) {
  const IVec3 e011{0, 1, 1};
  const IVec3 e110{1, 1, 0};
  std::set<Int> cands;
  for (const Perm& s : all_perms()) {
    Diagram f = permute(d, s);
    if (f.n_compact == 0) {
      if (f.verts.size() == 2 && f.verts[0] == e011 && f.verts[1][1] == 0 &&
          f.verts[1][2] == 0 && f.verts[1][0] >= 2)
        cands.insert(f.verts[1][0]);
      continue;
    }
    auto on_face = [](const DFace& fc, const IVec3& p) {
      return dot(fc.n, p) == fc.m &&
             polygon_contains(fc.verts, Plane{fc.n, fc.m}, p, 1);
    };
    // a vertex (n,0,0) seen from the criterion point across one face
    if (contains(f, e011))
      for (const IVec3& v : f.verts) {
        if (v[1] != 0 || v[2] != 0 || v[0] < 2) continue;
        for (int i = 0; i < f.n_compact; ++i)
          if (on_face(f.faces[i], e011) && on_face(f.faces[i], v))
            cands.insert(v[0]);
      }
    // an axis edge [(a,0,c),(0,1,b)] coplanar with the criterion point
    for (const DEdge& e : f.edges)
      for (int role = 0; role < 2; ++role) {
        IVec3 u = role == 0 ? e.a : e.b;
        IVec3 w = role == 0 ? e.b : e.a;
        if (u[1] != 0 || u[0] <= 0) continue;
        if (w[0] != 0 || w[1] != 1) continue;
        try {
          Plane pl = plane_through(u, w, e110);
          for (int i = 0; i < f.n_compact; ++i) {
            const DFace& fc = f.faces[i];
            if (fc.n != pl.n || fc.m != pl.m) continue;
            if (on_face(fc, u) && on_face(fc, w) && on_face(fc, e110))
              cands.insert(u[0] * w[2] + u[2]);
          }
        } catch (const construction_error&) {
        }
      }
  }
  if (cands.empty())
    throw construction_error(
        "segment_class_n: the class has no segment parameter");
  if (cands.size() > 1)
    throw construction_error("segment_class_n: ambiguous segment parameter");
  return *cands.begin();
}

Diagram canonical(const Diagram& d) {
  require_valid(d);
  Diagram cur = m1_exhaust(d);
  if (segment_class(cur))
    throw input_error(
        "canonical: the class of a segment diagram has no maximal "
        "representative");
  return canonical_core(std::move(cur));
}

Diagram d_minimal(const Diagram& d, Perm* norm_perm) {
  require_valid(d);
  Diagram cur = m1_exhaust(d);
  if (segment_class(cur)) {
    Int n = segment_class_n(cur);
    if (norm_perm) *norm_perm = Perm{0, 1, 2};
    return newton_boundary({IVec3{0, 1, 1}, IVec3{n, 0, 0}});
  }
  cur = canonical_core(std::move(cur));
  for (int guard = 0;; ++guard) {
    if (guard > 10000)
      throw construction_error("d_minimal: reduction did not terminate");
    std::vector<Move> cuts = enumerate_moves(cur, {MoveKind::M2Minus});
    if (cuts.empty()) break;
    Move mv = pick_descent_move(cur, cuts);
    cur = moved_result(diagram_lattice_points(cur), mv);
  }
  if (!enumerate_moves(cur, {MoveKind::M1Minus, MoveKind::M2Minus}).empty())
    throw construction_error("d_minimal: descent ended on a reducible diagram");
  if (!det_criterion_check(cur))
    throw construction_error(
        "d_minimal: minimal representative fails the determinant criterion");
  Perm best = all_perms()[0];
  Diagram bestd = permute(cur, best);
  for (const Perm& s : all_perms()) {
    Diagram p = permute(cur, s);
    if (p.verts < bestd.verts) {
      bestd = std::move(p);
      best = s;
    }
  }
  if (norm_perm) *norm_perm = best;
  return bestd;
}

bool equivalent(const Diagram& d1, const Diagram& d2) {
  return same_boundary(d_minimal(d1), d_minimal(d2));
}

bool det_criterion_check(const Diagram& d) {
  for (const DEdge& e : d.edges)
    if (e.boundary && e.det <= 1) return false;
  return true;
}

}  // namespace singlink
