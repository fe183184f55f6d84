#include "pcert/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "pcert/error.hpp"

namespace pcert {

namespace {

// Minimal union-find, deliberately separate from the one used when
// finalizing complexes.
struct Forest {
  std::vector<int> parent;
  explicit Forest(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int root(int a) {
    while (parent[a] != a) {
      parent[a] = parent[parent[a]];
      a = parent[a];
    }
    return a;
  }
  void join(int a, int b) { parent[root(a)] = root(b); }
};

int edge_of_dart(int dart) { return dart / 2; }
int tail_slot(int dart) { return dart; }
int head_slot(int dart) { return dart ^ 1; }

// Union endpoint slots along every face cycle of the given faces.
Forest glue_corners(const Complex& cx, const std::vector<int>& faces) {
  Forest uf(2 * cx.edge_count);
  for (int f : faces) {
    for (const auto& cycle : cx.faces[f].cycles) {
      const int n = static_cast<int>(cycle.size());
      for (int i = 0; i < n; ++i) {
        uf.join(head_slot(cycle[i]), tail_slot(cycle[(i + 1) % n]));
      }
    }
  }
  return uf;
}

long long chi_of_region(const Complex& cx, const std::vector<int>& faces) {
  Forest uf = glue_corners(cx, faces);
  std::set<int> edges;
  long long face_term = 0;
  for (int f : faces) {
    face_term += 2 - static_cast<long long>(cx.faces[f].cycles.size());
    for (const auto& cycle : cx.faces[f].cycles) {
      for (int d : cycle) edges.insert(edge_of_dart(d));
    }
  }
  std::set<int> verts;
  for (int e : edges) {
    verts.insert(uf.root(2 * e));
    verts.insert(uf.root(2 * e + 1));
  }
  return static_cast<long long>(verts.size()) - static_cast<long long>(edges.size()) + face_term;
}

// Face ids on each side of every edge, in cycle order of appearance.
std::vector<std::vector<int>> edge_faces(const Complex& cx) {
  std::vector<std::vector<int>> uses(cx.edge_count);
  for (int f = 0; f < static_cast<int>(cx.faces.size()); ++f) {
    for (const auto& cycle : cx.faces[f].cycles) {
      for (int d : cycle) uses[edge_of_dart(d)].push_back(f);
    }
  }
  return uses;
}

}  // namespace

long long oracle_chi(const Complex& cx) {
  std::vector<int> all(cx.faces.size());
  for (int f = 0; f < static_cast<int>(all.size()); ++f) all[f] = f;
  return chi_of_region(cx, all);
}

bool oracle_essential(const Complex& cx, const std::vector<int>& cycle) {
  if (cycle.empty()) throw InputError("oracle", "curve has no edges");
  const auto uses = edge_faces(cx);
  std::set<int> curve(cycle.begin(), cycle.end());
  for (int e : curve) {
    if (e < 0 || e >= cx.edge_count) throw InputError("oracle", "curve edge out of range");
    if (uses[e].size() != 2) throw InputError("oracle", "curve edge is not interior");
  }

  // Flood regions of faces without crossing the curve.
  std::vector<int> region(cx.faces.size(), -1);
  int regions = 0;
  for (int seed = 0; seed < static_cast<int>(cx.faces.size()); ++seed) {
    if (region[seed] != -1) continue;
    std::vector<int> stack{seed};
    region[seed] = regions;
    while (!stack.empty()) {
      const int f = stack.back();
      stack.pop_back();
      for (const auto& cyc : cx.faces[f].cycles) {
        for (int d : cyc) {
          const int e = edge_of_dart(d);
          if (curve.count(e) || uses[e].size() != 2) continue;
          for (int g : uses[e]) {
            if (region[g] == -1) {
              region[g] = regions;
              stack.push_back(g);
            }
          }
        }
      }
    }
    ++regions;
  }

  const int first = *curve.begin();
  const int side_a = region[uses[first][0]];
  const int side_b = region[uses[first][1]];
  if (side_a == side_b) return true;  // does not separate, so cannot bound a disk

  // A side is a capped-off disk exactly when its literal Euler characteristic
  // is 1 and its boundary is precisely the curve.
  const auto is_disk_side = [&](int side) {
    std::vector<int> faces;
    for (int f = 0; f < static_cast<int>(cx.faces.size()); ++f) {
      if (region[f] == side) faces.push_back(f);
    }
    std::map<int, int> inside_uses;
    for (int f : faces) {
      for (const auto& cyc : cx.faces[f].cycles) {
        for (int d : cyc) inside_uses[edge_of_dart(d)] += 1;
      }
    }
    std::set<int> rim;
    for (const auto& [e, n] : inside_uses) {
      if (n != static_cast<int>(uses[e].size())) rim.insert(e);
      else if (uses[e].size() == 1) rim.insert(e);
    }
    if (rim != curve) return false;
    return chi_of_region(cx, faces) == 1;
  };
  return !is_disk_side(side_a) && !is_disk_side(side_b);
}

CurveEnumeration exhaustive_curves(const Complex& cx, int max_length) {
  CurveEnumeration out;
  const auto uses = edge_faces(cx);
  Forest uf = glue_corners(cx, [&] {
    std::vector<int> all(cx.faces.size());
    for (int f = 0; f < static_cast<int>(all.size()); ++f) all[f] = f;
    return all;
  }());

  std::vector<int> interior;
  for (int e = 0; e < cx.edge_count; ++e) {
    if (uses[e].size() == 2) interior.push_back(e);
  }
  if (max_length < 1) {
    out.truncated = !interior.empty();
    return out;
  }

  // vertex -> (edge, far endpoint)
  std::map<int, std::vector<std::pair<int, int>>> adj;
  const auto tail = [&](int e) { return uf.root(2 * e); };
  const auto head = [&](int e) { return uf.root(2 * e + 1); };
  for (int e : interior) {
    adj[tail(e)].push_back({e, head(e)});
    if (head(e) != tail(e)) adj[head(e)].push_back({e, tail(e)});
  }

  std::set<std::vector<int>> seen;
  std::vector<int> path;
  std::set<int> visited;
  int start_vertex = -1;
  int anchor = -1;

  const std::function<void(int)> walk = [&](int at) {
    for (const auto& [e, far] : adj[at]) {
      if (e < anchor || (std::find(path.begin(), path.end(), e) != path.end())) continue;
      if (far == start_vertex) {
        path.push_back(e);
        std::vector<int> key = path;
        std::sort(key.begin(), key.end());
        if (seen.insert(key).second) {
          out.curves.push_back({path, oracle_essential(cx, path)});
        }
        path.pop_back();
        continue;
      }
      if (visited.count(far)) continue;
      // Extending here costs one edge now and at least one more to close.
      if (static_cast<int>(path.size()) + 2 > max_length) {
        out.truncated = true;
        continue;
      }
      path.push_back(e);
      visited.insert(far);
      walk(far);
      visited.erase(far);
      path.pop_back();
    }
  };

  for (int e0 : interior) {
    anchor = e0;
    if (tail(e0) == head(e0)) {
      std::vector<int> key{e0};
      if (seen.insert(key).second) {
        out.curves.push_back({{e0}, oracle_essential(cx, {e0})});
      }
      continue;
    }
    start_vertex = tail(e0);
    visited = {start_vertex, head(e0)};
    path = {e0};
    walk(head(e0));
  }

  std::sort(out.curves.begin(), out.curves.end(), [](const OracleCurve& a, const OracleCurve& b) {
    if (a.edges.size() != b.edges.size()) return a.edges.size() < b.edges.size();
    return a.edges < b.edges;
  });
  return out;
}

}  // namespace pcert
