#include "singlink/resgraph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace singlink {

namespace {

void require_graph(const ResolutionGraph& g) {
  for (const auto& [a, b] : g.edges)
    if (a < 0 || b < 0 || a >= g.size() || b >= g.size() || a == b)
      throw input_error("graph edge out of range");
}

std::vector<std::vector<int>> adjacency(const ResolutionGraph& g) {
  std::vector<std::vector<int>> adj(g.size());
  for (const auto& [a, b] : g.edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  return adj;
}

// pivots of -I in index order; empty as soon as one fails to be positive
std::optional<std::vector<Rat>> definite_pivots(const ResolutionGraph& g) {
  int n = g.size();
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n, Rat(0)));
  for (int i = 0; i < n; ++i) m[i][i] = Rat(-g.b[i]);
  for (const auto& [a, b] : g.edges) {
    m[a][b] -= 1;
    m[b][a] -= 1;
  }
  std::vector<Rat> piv;
  for (int k = 0; k < n; ++k) {
    if (m[k][k] <= 0) return std::nullopt;
    piv.push_back(m[k][k]);
    for (int i = k + 1; i < n; ++i) {
      if (m[i][k] == 0) continue;
      Rat f = m[i][k] / m[k][k];
      for (int j = k; j < n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  return piv;
}

// det of the string with these decorations via d_k = -b_k*d_{k-1} - d_{k-2};
// the empty string has det 1
Int string_det_of(const std::vector<Int>& bs) {
  Int prev = 0, cur = 1;
  for (const Int& b : bs) {
    Int nxt = -b * cur - prev;
    prev = cur;
    cur = nxt;
  }
  return cur;
}

std::vector<int> tree_centroids(const std::vector<std::vector<int>>& adj) {
  int n = static_cast<int>(adj.size());
  std::vector<int> par(n, -2), order;
  order.reserve(n);
  par[0] = -1;
  order.push_back(0);
  for (int i = 0; i < static_cast<int>(order.size()); ++i)
    for (int u : adj[order[i]])
      if (par[u] == -2) {
        par[u] = order[i];
        order.push_back(u);
      }
  std::vector<int> sz(n, 1);
  for (int i = n - 1; i > 0; --i) sz[par[order[i]]] += sz[order[i]];
  std::vector<int> best;
  int best_part = n + 1;
  for (int v = 0; v < n; ++v) {
    int part = n - sz[v];
    for (int u : adj[v])
      if (u != par[v]) part = std::max(part, sz[u]);
    if (part < best_part) {
      best_part = part;
      best = {v};
    } else if (part == best_part) {
      best.push_back(v);
    }
  }
  return best;
}

std::string rooted_canon(const ResolutionGraph& g,
                         const std::vector<std::vector<int>>& adj, int v,
                         int parent) {
  std::vector<std::string> kids;
  for (int u : adj[v])
    if (u != parent) kids.push_back(rooted_canon(g, adj, u, v));
  std::sort(kids.begin(), kids.end());
  std::string s = "(" + g.b[v].str();
  for (const std::string& k : kids) s += k;
  return s + ")";
}

std::string graph_canon(const ResolutionGraph& g) {
  require_graph(g);
  if (g.size() == 0) return "";
  if (!is_tree(g)) throw input_error("graph canonical form needs a tree");
  auto adj = adjacency(g);
  std::string best;
  for (int c : tree_centroids(adj)) {
    std::string s = rooted_canon(g, adj, c, -1);
    if (best.empty() || s < best) best = s;
  }
  return best;
}

}  // namespace

std::vector<int> degrees(const ResolutionGraph& g) {
  require_graph(g);
  std::vector<int> deg(g.size(), 0);
  for (const auto& [a, b] : g.edges) {
    ++deg[a];
    ++deg[b];
  }
  return deg;
}

bool is_tree(const ResolutionGraph& g) {
  require_graph(g);
  int n = g.size();
  if (n == 0 || static_cast<int>(g.edges.size()) != n - 1) return false;
  std::set<std::pair<int, int>> seen;
  for (auto [a, b] : g.edges) {
    if (a > b) std::swap(a, b);
    if (!seen.insert({a, b}).second) return false;
  }
  auto adj = adjacency(g);
  std::vector<bool> vis(n, false);
  std::vector<int> stack = {0};
  vis[0] = true;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u : adj[v])
      if (!vis[u]) {
        vis[u] = true;
        ++count;
        stack.push_back(u);
      }
  }
  return count == n;
}

bool is_negative_definite(const ResolutionGraph& g) {
  require_graph(g);
  return definite_pivots(g).has_value();
}

Int graph_det(const ResolutionGraph& g) {
  require_graph(g);
  auto piv = definite_pivots(g);
  if (!piv) throw input_error("graph is not negative definite");
  Rat det(1);
  for (const Rat& p : *piv) det *= p;
  Int den = boost::multiprecision::denominator(det);
  if (den != 1) throw construction_error("graph determinant is not integral");
  return boost::multiprecision::numerator(det);
}

ResolutionGraph minimize(const ResolutionGraph& g) {
  if (!is_tree(g)) throw input_error("minimize needs a tree");
  if (!is_negative_definite(g))
    throw input_error("minimize needs a negative definite graph");
  int n = g.size();
  std::vector<Int> b = g.b;
  std::vector<std::set<int>> adj(n);
  for (const auto& [x, y] : g.edges) {
    adj[x].insert(y);
    adj[y].insert(x);
  }
  std::vector<bool> alive(n, true);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = 0; v < n && !changed; ++v) {
      if (!alive[v] || b[v] != -1 || adj[v].size() > 2) continue;
      std::vector<int> ns(adj[v].begin(), adj[v].end());
      if (ns.empty())
        throw construction_error("graph blows down to nothing (smooth point)");
      alive[v] = false;
      for (int u : ns) {
        adj[u].erase(v);
        b[u] += 1;
      }
      adj[v].clear();
      if (ns.size() == 2) {
        adj[ns[0]].insert(ns[1]);
        adj[ns[1]].insert(ns[0]);
      }
      changed = true;
    }
  }
  std::vector<int> id(n, -1);
  ResolutionGraph out;
  for (int v = 0; v < n; ++v)
    if (alive[v]) {
      id[v] = out.size();
      out.b.push_back(b[v]);
    }
  for (int v = 0; v < n; ++v)
    if (alive[v])
      for (int u : adj[v])
        if (v < u) out.edges.push_back({id[v], id[u]});
  return out;
}

Decomposition decompose(const ResolutionGraph& g) {
  if (!is_tree(g)) throw input_error("decompose needs a tree");
  auto adj = adjacency(g);
  Decomposition out;
  for (int v = 0; v < g.size(); ++v)
    if (adj[v].size() >= 3) out.nodes.push_back(v);
  out.has_node = !out.nodes.empty();
  if (!out.has_node) return out;
  for (int r : out.nodes) {
    for (int u0 : adj[r]) {
      std::vector<int> interior;
      int prev = r, cur = u0;
      while (adj[cur].size() == 2) {
        interior.push_back(cur);
        int nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
        prev = cur;
        cur = nxt;
      }
      if (adj[cur].size() >= 3) {
        if (r < cur) out.chains.push_back({r, cur, interior});
      } else {
        interior.push_back(cur);
        out.legs.push_back({r, interior});
      }
    }
  }
  auto chain_key = [](const GraphChain& c) {
    return std::tuple(c.from, c.to, c.interior);
  };
  std::sort(out.chains.begin(), out.chains.end(),
            [&](const GraphChain& x, const GraphChain& y) {
              return chain_key(x) < chain_key(y);
            });
  std::sort(out.legs.begin(), out.legs.end(),
            [](const GraphLeg& x, const GraphLeg& y) {
              return std::tuple(x.node, x.interior) <
                     std::tuple(y.node, y.interior);
            });
  return out;
}

OrbifoldDiagram orbifold(const ResolutionGraph& g) {
  if (!is_negative_definite(g))
    throw input_error("orbifold needs a negative definite graph");
  Decomposition dec = decompose(g);
  OrbifoldDiagram o;
  if (!dec.has_node) {
    o.free_edge = graph_det(g);
    return o;
  }
  std::map<int, int> idx;
  for (int k = 0; k < static_cast<int>(dec.nodes.size()); ++k) {
    idx[dec.nodes[k]] = k;
    o.e.push_back(Rat(g.b[dec.nodes[k]]));
  }
  auto weights_of = [&](const std::vector<int>& ids) {
    std::vector<Int> w;
    for (int v : ids) w.push_back(g.b[v]);
    return w;
  };
  // alpha/omega read from the node side; normalized whenever the string
  // has no (-1)-vertex, and blow-down invariant regardless
  auto add_string = [&](int node, const std::vector<Int>& bs) {
    Int alpha = string_det_of(bs);
    Int omega =
        bs.empty() ? Int(0) : string_det_of({bs.begin() + 1, bs.end()});
    if (alpha <= 0) throw construction_error("string is not definite");
    bool reduced = std::all_of(bs.begin(), bs.end(),
                               [](const Int& b) { return b <= -2; });
    if (reduced && !(0 <= omega && omega < alpha))
      throw construction_error("string invariant out of range");
    o.e[idx[node]] += Rat(omega) / Rat(alpha);
    return alpha;
  };
  for (const GraphChain& c : dec.chains) {
    std::vector<Int> w = weights_of(c.interior);
    Int alpha = add_string(c.from, w);
    add_string(c.to, {w.rbegin(), w.rend()});
    o.edges.push_back({idx[c.from], idx[c.to], alpha});
  }
  for (const GraphLeg& l : dec.legs)
    o.legs.push_back({idx[l.node], add_string(l.node, weights_of(l.interior))});
  std::sort(o.edges.begin(), o.edges.end(),
            [](const OrbEdge& x, const OrbEdge& y) {
              return std::tuple(x.a, x.b, x.det) < std::tuple(y.a, y.b, y.det);
            });
  std::sort(o.legs.begin(), o.legs.end(), [](const OrbLeg& x, const OrbLeg& y) {
    return std::tuple(x.node, x.det) < std::tuple(y.node, y.det);
  });
  return o;
}

Rat orbifold_det(const OrbifoldDiagram& o) {
  if (o.free_edge) return Rat(1);
  int n = o.nodes();
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n, Rat(0)));
  for (int i = 0; i < n; ++i) m[i][i] = -o.e[i];
  for (const OrbEdge& e : o.edges) {
    if (e.a < 0 || e.b < 0 || e.a >= n || e.b >= n || e.a == e.b || e.det <= 0)
      throw input_error("orbifold edge out of range");
    m[e.a][e.b] -= Rat(1) / Rat(e.det);
    m[e.b][e.a] -= Rat(1) / Rat(e.det);
  }
  Rat det(1);
  for (int k = 0; k < n; ++k) {
    int p = -1;
    for (int i = k; i < n && p < 0; ++i)
      if (m[i][k] != 0) p = i;
    if (p < 0) return Rat(0);
    if (p != k) {
      std::swap(m[p], m[k]);
      det = -det;
    }
    det *= m[k][k];
    for (int i = k + 1; i < n; ++i) {
      if (m[i][k] == 0) continue;
      Rat f = m[i][k] / m[k][k];
      for (int j = k; j < n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  return det;
}

bool graph_iso(const ResolutionGraph& g1, const ResolutionGraph& g2) {
  if (g1.size() != g2.size() || g1.edges.size() != g2.edges.size())
    return false;
  return graph_canon(g1) == graph_canon(g2);
}

namespace {

std::string orb_rooted_canon(const OrbifoldDiagram& o,
                             const std::vector<std::vector<int>>& adj,
                             const std::vector<std::vector<Int>>& dets,
                             const std::vector<std::string>& label, int v,
                             int parent) {
  std::vector<std::string> kids;
  for (int i = 0; i < static_cast<int>(adj[v].size()); ++i) {
    int u = adj[v][i];
    if (u == parent) continue;
    kids.push_back("[" + dets[v][i].str() +
                   orb_rooted_canon(o, adj, dets, label, u, v) + "]");
  }
  std::sort(kids.begin(), kids.end());
  std::string s = "(" + label[v];
  for (const std::string& k : kids) s += k;
  return s + ")";
}

}  // namespace

bool orb_iso(const OrbifoldDiagram& o1, const OrbifoldDiagram& o2) {
  if (o1.free_edge.has_value() != o2.free_edge.has_value()) return false;
  if (o1.free_edge) return *o1.free_edge == *o2.free_edge;
  if (o1.nodes() != o2.nodes() || o1.edges.size() != o2.edges.size() ||
      o1.legs.size() != o2.legs.size())
    return false;
  auto canon = [](const OrbifoldDiagram& o) {
    int n = o.nodes();
    if (n == 0) throw input_error("orbifold without nodes or free edge");
    ResolutionGraph shape;
    shape.b.assign(n, Int(0));
    std::vector<std::vector<int>> adj(n);
    std::vector<std::vector<Int>> dets(n);
    for (const OrbEdge& e : o.edges) {
      shape.edges.push_back({e.a, e.b});
      adj[e.a].push_back(e.b);
      dets[e.a].push_back(e.det);
      adj[e.b].push_back(e.a);
      dets[e.b].push_back(e.det);
    }
    if (!is_tree(shape))
      throw input_error("orbifold isomorphism needs a tree of nodes");
    std::vector<std::string> label(n);
    for (int v = 0; v < n; ++v) {
      std::vector<Int> legs;
      for (const OrbLeg& l : o.legs)
        if (l.node == v) legs.push_back(l.det);
      std::sort(legs.begin(), legs.end());
      label[v] = str(o.e[v]) + ";";
      for (const Int& d : legs) label[v] += "l" + d.str();
    }
    std::string best;
    for (int c : tree_centroids(adj)) {
      std::string s = orb_rooted_canon(o, adj, dets, label, c, -1);
      if (best.empty() || s < best) best = s;
    }
    return best;
  };
  return canon(o1) == canon(o2);
}

}  // namespace singlink
