#include "singlink/invariants.hpp"

#include <algorithm>
#include <utility>
#include <vector>

namespace singlink {

namespace {

void require_isolated(const Diagram& d) {
  IsolatedReport rep = check_isolated(d);
  if (rep.ok) return;
  std::string msg = "invariants: not the diagram of an isolated singularity";
  for (const std::string& v : rep.violations) msg += "; " + v;
  throw construction_error(msg);
}

// the boundary meets axis i iff a vertex has both other coordinates zero
bool meets_axis(const Diagram& d, int i) {
  for (const IVec3& v : d.verts)
    if (v[(i + 1) % 3] == 0 && v[(i + 2) % 3] == 0) return true;
  return false;
}

// close off every missed axis far beyond the boundary; the exact height is
// irrelevant to the counts below as long as the result is convenient
Diagram convenient_completion(const Diagram& d) {
  Int mmax = 0;
  for (const IVec3& v : d.verts) mmax = std::max(mmax, Int(v[0] + v[1] + v[2]));
  Int h = 2 * mmax + 3;
  std::vector<IVec3> pts = d.verts;
  for (int i = 0; i < 3; ++i) {
    if (meets_axis(d, i)) continue;
    IVec3 p{0, 0, 0};
    p[i] = h;
    pts.push_back(p);
  }
  return newton_boundary(pts);
}

Int det3(const IVec3& a, const IVec3& b, const IVec3& c) {
  return dot(a, cross(b, c));
}

// c is convenient, so every axis carries a vertex
Int axis_intercept(const Diagram& c, int i) {
  Int best = -1;
  for (const IVec3& v : c.verts)
    if (v[(i + 1) % 3] == 0 && v[(i + 2) % 3] == 0)
      if (best < 0 || v[i] < best) best = v[i];
  if (best < 0) throw construction_error("axis_intercept: axis not met");
  return best;
}

// six times the volume between the origin and the compact faces
Int vol6(const Diagram& c) {
  Int total = 0;
  for (int f = 0; f < c.n_compact; ++f) {
    const std::vector<IVec3>& vs = c.faces[f].verts;
    for (size_t k = 1; k + 1 < vs.size(); ++k)
      total += iabs(det3(vs[0], vs[k], vs[k + 1]));
  }
  return total;
}

// twice the area between the axes of the plane x_i = 0 and the section of
// the boundary with that plane
Int wall_area2(const Diagram& c, int i) {
  std::vector<std::pair<Int, Int>> pts;
  for (const IVec3& v : c.verts)
    if (v[i] == 0) pts.emplace_back(v[(i + 1) % 3], v[(i + 2) % 3]);

  // only the staircase frontier can appear on the section's boundary
  std::vector<std::pair<Int, Int>> front;
  for (const auto& p : pts) {
    bool dominated = false;
    for (const auto& q : pts)
      if (q != p && q.first <= p.first && q.second <= p.second)
        dominated = true;
    if (!dominated) front.push_back(p);
  }
  std::sort(front.begin(), front.end());
  front.erase(std::unique(front.begin(), front.end()), front.end());

  // convex chain from the second axis down to the first
  std::vector<std::pair<Int, Int>> chain;
  for (const auto& p : front) {
    while (chain.size() >= 2) {
      const auto& a = chain[chain.size() - 2];
      const auto& b = chain[chain.size() - 1];
      Int turn = (b.first - a.first) * (p.second - b.second) -
                 (b.second - a.second) * (p.first - b.first);
      if (turn <= 0)
        chain.pop_back();
      else
        break;
    }
    chain.push_back(p);
  }

  // shoelace of (0,0) followed by the chain
  chain.insert(chain.begin(), {0, 0});
  Int s = 0;
  for (size_t k = 0; k < chain.size(); ++k) {
    const auto& a = chain[k];
    const auto& b = chain[(k + 1) % chain.size()];
    s += a.first * b.second - b.first * a.second;
  }
  return iabs(s);
}

Int milnor_of(const Diagram& c) {
  Int v3 = vol6(c);
  Int v2 = 0;
  for (int i = 0; i < 3; ++i) v2 += wall_area2(c, i);
  Int v1 = 0;
  for (int i = 0; i < 3; ++i) v1 += axis_intercept(c, i);
  Int mu = v3 - v2 + v1 - 1;
  if (mu < 0) throw construction_error("milnor: negative value");
  return mu;
}

Int fdiv(const Int& a, const Int& b) {
  if (a >= 0) return a / b;
  return -((-a + b - 1) / b);
}

// strictly positive lattice points weakly below some compact face
Int genus_of(const Diagram& c) {
  Int xmax = 0;
  for (int f = 0; f < c.n_compact; ++f) {
    const DFace& fc = c.faces[f];
    xmax = std::max(xmax, fdiv(fc.m - fc.n[1] - fc.n[2], fc.n[0]));
  }
  Int count = 0;
  for (Int x = 1; x <= xmax; ++x) {
    Int ymax = 0;
    for (int f = 0; f < c.n_compact; ++f) {
      const DFace& fc = c.faces[f];
      ymax = std::max(ymax, fdiv(fc.m - fc.n[0] * x - fc.n[2], fc.n[1]));
    }
    for (Int y = 1; y <= ymax; ++y) {
      Int zmax = 0;
      for (int f = 0; f < c.n_compact; ++f) {
        const DFace& fc = c.faces[f];
        zmax = std::max(zmax,
                        fdiv(fc.m - fc.n[0] * x - fc.n[1] * y, fc.n[2]));
      }
      if (zmax > 0) count += zmax;
    }
  }
  return count;
}

}  // namespace

Int milnor(const Diagram& d) {
  require_isolated(d);
  return milnor_of(convenient_completion(d));
}

Int geom_genus(const Diagram& d) {
  require_isolated(d);
  return genus_of(convenient_completion(d));
}

Int multiplicity(const Diagram& d) {
  require_isolated(d);
  Int best = -1;
  for (const IVec3& v : d.verts) {
    Int s = v[0] + v[1] + v[2];
    if (best < 0 || s < best) best = s;
  }
  return best;
}

InvariantReport invariants(const Diagram& d) {
  require_isolated(d);
  Diagram c = convenient_completion(d);
  return {milnor_of(c), genus_of(c), multiplicity(d)};
}

}  // namespace singlink
