#include "g2chart/chart.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "g2chart/movie.hpp"

namespace g2chart {

int degree_of(VertexKind k) {
  switch (k) {
    case VertexKind::Black: return 1;
    case VertexKind::D4: return 4;
    case VertexKind::D6: return 6;
    case VertexKind::D20: return 20;
    case VertexKind::D30: return 30;
    case VertexKind::D22: return 22;
    case VertexKind::D13: return 13;
  }
  return 0;
}

std::string kind_name(VertexKind k) {
  switch (k) {
    case VertexKind::Black: return "black";
    case VertexKind::D4: return "d4";
    case VertexKind::D6: return "d6";
    case VertexKind::D20: return "d20";
    case VertexKind::D30: return "d30";
    case VertexKind::D22: return "d22";
    case VertexKind::D13: return "d13";
  }
  return "?";
}

std::optional<VertexKind> kind_by_name(const std::string& s) {
  if (s == "black") return VertexKind::Black;
  if (s == "d4") return VertexKind::D4;
  if (s == "d6") return VertexKind::D6;
  if (s == "d20") return VertexKind::D20;
  if (s == "d30") return VertexKind::D30;
  if (s == "d22") return VertexKind::D22;
  if (s == "d13") return VertexKind::D13;
  return std::nullopt;
}

namespace {

struct DSU {
  std::vector<int> p;
  explicit DSU(std::size_t n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[static_cast<std::size_t>(x)] == x ? x : p[static_cast<std::size_t>(x)] = find(p[static_cast<std::size_t>(x)]); }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) p[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }
};

// (vertex, slot) reached when traveling h lands.
std::pair<int, int> arrival(const Chart& c, DirEdge h) {
  const ChartEdge& e = c.edges[static_cast<std::size_t>(h.edge)];
  if (h.dir == 0) return {e.head_vertex, e.head_slot};
  return {e.tail_vertex, e.tail_slot};
}

DirEdge departing(const Chart& c, int vertex, int slot) {
  const auto& v = c.vertices[static_cast<std::size_t>(vertex)];
  const HalfEdgeRef r = v.rot[static_cast<std::size_t>(slot)];
  // end 0: this vertex is the tail, so departing travels tail->head.
  return {r.edge, r.end == 0 ? 0 : 1};
}

}  // namespace

Topology compute_topology(const Chart& c) {
  Topology t;
  const int ne = static_cast<int>(c.edges.size());
  DSU dsu(static_cast<std::size_t>(ne));
  std::vector<int> vertex_first_edge(c.vertices.size(), -1);
  for (int ei = 0; ei < ne; ++ei) {
    const ChartEdge& e = c.edges[static_cast<std::size_t>(ei)];
    if (e.hoop) continue;
    for (int end = 0; end < 2; ++end) {
      const int v = end == 0 ? e.tail_vertex : e.head_vertex;
      int& first = vertex_first_edge[static_cast<std::size_t>(v)];
      if (first < 0)
        first = ei;
      else
        dsu.unite(first, ei);
    }
  }
  t.edge_comp.resize(static_cast<std::size_t>(ne));
  for (int ei = 0; ei < ne; ++ei) t.edge_comp[static_cast<std::size_t>(ei)] = dsu.find(ei);
  for (int ei = 0; ei < ne; ++ei)
    if (t.edge_comp[static_cast<std::size_t>(ei)] == ei) t.comp_ids.push_back(ei);

  // faces per component, in deterministic discovery order
  std::map<int, int> next_face;
  for (int comp : t.comp_ids) next_face[comp] = 0;
  std::map<DirEdge, bool> visited;
  for (int ei = 0; ei < ne; ++ei)
    for (int d = 0; d < 2; ++d) visited[{ei, d}] = false;

  for (int ei = 0; ei < ne; ++ei) {
    const ChartEdge& e = c.edges[static_cast<std::size_t>(ei)];
    const int comp = t.edge_comp[static_cast<std::size_t>(ei)];
    for (int d = 0; d < 2; ++d) {
      DirEdge h{ei, d};
      if (visited[h]) continue;
      const int face = next_face[comp]++;
      std::vector<DirEdge> walk;
      if (e.hoop) {
        visited[h] = true;
        walk.push_back(h);
      } else {
        DirEdge cur = h;
        do {
          visited[cur] = true;
          walk.push_back(cur);
          const auto [v, slot] = arrival(c, cur);
          const int deg = static_cast<int>(c.vertices[static_cast<std::size_t>(v)].rot.size());
          cur = departing(c, v, (slot + 1) % deg);
        } while (cur != h);
      }
      for (DirEdge w : walk) t.face_of[w] = {comp, face};
      t.face_walks[{comp, face}] = std::move(walk);
    }
  }
  for (int comp : t.comp_ids) t.comp_face_count[comp] = next_face[comp];

  std::map<int, int> vcount;
  std::vector<bool> vseen(c.vertices.size(), false);
  for (int ei = 0; ei < ne; ++ei) {
    const ChartEdge& e = c.edges[static_cast<std::size_t>(ei)];
    if (e.hoop) continue;
    for (const int v : {e.tail_vertex, e.head_vertex}) {
      if (!vseen[static_cast<std::size_t>(v)]) {
        vseen[static_cast<std::size_t>(v)] = true;
        ++vcount[t.edge_comp[static_cast<std::size_t>(ei)]];
      }
    }
  }
  t.comp_vertex_count = std::move(vcount);
  return t;
}

int component_of_edge(const Topology& t, int edge) {
  return t.edge_comp[static_cast<std::size_t>(edge)];
}

int outer_face_of(const Chart& c, int comp) {
  const ChartEdge& e = c.edges[static_cast<std::size_t>(comp)];
  if (e.hoop) return e.hoop_ccw ? 1 : 0;
  const auto it = c.outer_face.find(comp);
  return it == c.outer_face.end() ? 0 : it->second;
}

RegionRef region_of_face(const Chart& c, const Topology& t, int comp, int face) {
  (void)t;
  if (face == outer_face_of(c, comp)) {
    const auto it = c.nesting.find(comp);
    return it == c.nesting.end() ? RegionRef{} : it->second;
  }
  return RegionRef{comp, face};
}

std::vector<RegionRef> all_regions(const Chart& c, const Topology& t) {
  std::vector<RegionRef> out;
  out.push_back(RegionRef{});  // root
  for (int comp : t.comp_ids) {
    const int nf = t.comp_face_count.at(comp);
    const int outer = outer_face_of(c, comp);
    for (int f = 0; f < nf; ++f)
      if (f != outer) out.push_back(RegionRef{comp, f});
  }
  return out;
}

std::pair<RegionRef, RegionRef> edge_sides(const Chart& c, const Topology& t, int edge) {
  const auto [lc, lf] = t.face_of.at(DirEdge{edge, 0});
  const auto [rc, rf] = t.face_of.at(DirEdge{edge, 1});
  return {region_of_face(c, t, lc, lf), region_of_face(c, t, rc, rf)};
}

// ---- validation -------------------------------------------------------------

namespace {

bool structural_pass(const Chart& c, ValidationReport& rep) {
  bool ok = true;
  for (std::size_t vi = 0; vi < c.vertices.size(); ++vi) {
    const auto& v = c.vertices[vi];
    if (static_cast<int>(v.rot.size()) != degree_of(v.kind)) {
      rep.fail("vertex v" + std::to_string(vi) + ": degree " + std::to_string(v.rot.size()) +
               " does not match kind " + kind_name(v.kind));
      ok = false;
    }
    for (std::size_t s = 0; s < v.rot.size(); ++s) {
      const HalfEdgeRef r = v.rot[s];
      if (r.edge < 0 || r.edge >= static_cast<int>(c.edges.size())) {
        rep.fail("vertex v" + std::to_string(vi) + " slot " + std::to_string(s) +
                 ": dangling edge reference");
        ok = false;
        continue;
      }
      const ChartEdge& e = c.edges[static_cast<std::size_t>(r.edge)];
      if (e.hoop) {
        rep.fail("vertex v" + std::to_string(vi) + ": refers to hoop e" + std::to_string(r.edge));
        ok = false;
        continue;
      }
      const int ev = r.end == 0 ? e.tail_vertex : e.head_vertex;
      const int es = r.end == 0 ? e.tail_slot : e.head_slot;
      if (ev != static_cast<int>(vi) || es != static_cast<int>(s)) {
        rep.fail("vertex v" + std::to_string(vi) + " slot " + std::to_string(s) +
                 ": edge e" + std::to_string(r.edge) + " does not point back");
        ok = false;
      }
    }
  }
  for (std::size_t ei = 0; ei < c.edges.size(); ++ei) {
    const ChartEdge& e = c.edges[ei];
    if (e.label < 1 || e.label > kSigmaLabel) {
      rep.fail("edge e" + std::to_string(ei) + ": bad label");
      ok = false;
    }
    if (e.hoop) continue;
    for (int end = 0; end < 2; ++end) {
      const int v = end == 0 ? e.tail_vertex : e.head_vertex;
      const int s = end == 0 ? e.tail_slot : e.head_slot;
      if (v < 0 || v >= static_cast<int>(c.vertices.size()) || s < 0 ||
          s >= static_cast<int>(c.vertices[static_cast<std::size_t>(v)].rot.size()) ||
          !(c.vertices[static_cast<std::size_t>(v)].rot[static_cast<std::size_t>(s)] ==
            HalfEdgeRef{static_cast<int>(ei), end})) {
        rep.fail("edge e" + std::to_string(ei) + ": endpoint " + (end ? "head" : "tail") +
                 " is not wired consistently");
        ok = false;
      }
    }
  }
  return ok;
}

// outward = the slot holds the tail end (the edge points away).
void vertex_pattern(const Chart& c, std::size_t vi, std::vector<int>& labels,
                    std::vector<bool>& outward) {
  const auto& v = c.vertices[vi];
  labels.clear();
  outward.clear();
  for (const HalfEdgeRef r : v.rot) {
    labels.push_back(c.edges[static_cast<std::size_t>(r.edge)].label);
    outward.push_back(r.end == 0);
  }
}

const std::vector<int>& pattern_l20() {
  static const std::vector<int> p = {1, 2, 3, 4, 5, 5, 4, 3, 2, 1,
                                     1, 2, 3, 4, 5, 5, 4, 3, 2, 1};
  return p;
}

bool cyclic_match(const std::vector<int>& have, const std::vector<int>& want, int rot) {
  const int n = static_cast<int>(have.size());
  for (int i = 0; i < n; ++i)
    if (have[static_cast<std::size_t>((rot + i) % n)] != want[static_cast<std::size_t>(i)])
      return false;
  return true;
}

void check_vertex_rules(const Chart& c, ValidationReport& rep) {
  std::vector<int> L;
  std::vector<bool> O;
  for (std::size_t vi = 0; vi < c.vertices.size(); ++vi) {
    const auto& v = c.vertices[vi];
    vertex_pattern(c, vi, L, O);
    const std::string who = "vertex v" + std::to_string(vi);
    const int n = static_cast<int>(L.size());
    auto in_chain = [&](int l) { return l >= 1 && l <= 5; };
    switch (v.kind) {
      case VertexKind::Black:
        break;  // any label, any orientation
      case VertexKind::D4: {
        if (L[0] != L[2] || L[1] != L[3]) {
          rep.fail(who + ": diagonal labels differ");
          break;
        }
        if (!in_chain(L[0]) || !in_chain(L[1]) || std::abs(L[0] - L[1]) <= 1) {
          rep.fail(who + ": crossing labels must be chain labels with distance > 1");
          break;
        }
        if (O[0] == O[2] || O[1] == O[3]) rep.fail(who + ": diagonal orientations not coherent");
        break;
      }
      case VertexKind::D6: {
        if (!(L[0] == L[2] && L[2] == L[4] && L[1] == L[3] && L[3] == L[5])) {
          rep.fail(who + ": labels must alternate");
          break;
        }
        if (!in_chain(L[0]) || !in_chain(L[1]) || std::abs(L[0] - L[1]) != 1) {
          rep.fail(who + ": alternating labels must be adjacent chain labels");
          break;
        }
        bool found = false;
        for (int m = 0; m < 6 && !found; ++m) {
          bool good = true;
          for (int k = 0; k < 6; ++k)
            if (O[static_cast<std::size_t>((m + k) % 6)] != (k < 3)) good = false;
          found = good;
        }
        if (!found) rep.fail(who + ": needs three consecutive outward then three inward");
        break;
      }
      case VertexKind::D20: {
        bool labels_ok = false;
        for (int r = 0; r < n && !labels_ok; ++r) labels_ok = cyclic_match(L, pattern_l20(), r);
        if (!labels_ok) {
          rep.fail(who + ": labels do not match the degree-20 pattern");
          break;
        }
        const bool all_out = std::all_of(O.begin(), O.end(), [](bool b) { return b; });
        const bool all_in = std::all_of(O.begin(), O.end(), [](bool b) { return !b; });
        if (!all_out && !all_in) rep.fail(who + ": edges must be all outward or all inward");
        break;
      }
      case VertexKind::D30: {
        std::vector<int> up, down;
        for (int r = 0; r < 6; ++r)
          for (int i = 1; i <= 5; ++i) {
            up.push_back(i);
            down.push_back(6 - i);
          }
        bool asc = false, desc = false;
        for (int r = 0; r < n; ++r) {
          asc = asc || cyclic_match(L, up, r);
          desc = desc || cyclic_match(L, down, r);
        }
        const bool all_out = std::all_of(O.begin(), O.end(), [](bool b) { return b; });
        const bool all_in = std::all_of(O.begin(), O.end(), [](bool b) { return !b; });
        if (!((asc && all_out) || (desc && all_in)))
          rep.fail(who + ": needs ascending labels all outward or descending all inward");
        break;
      }
      case VertexKind::D22: {
        bool found = false;
        for (int r = 0; r < n && !found; ++r) {
          for (int i = 1; i <= 5 && !found; ++i) {
            std::vector<int> want = {1, 2, 3, 4, 5, 5, 4, 3, 2, 1, i,
                                     1, 2, 3, 4, 5, 5, 4, 3, 2, 1, i};
            if (!cyclic_match(L, want, r)) continue;
            bool good = true;
            for (int k = 0; k < 22; ++k)
              if (O[static_cast<std::size_t>((r + k) % 22)] != (k < 11)) good = false;
            found = good;
          }
        }
        if (!found) rep.fail(who + ": does not match the degree-22 pattern");
        break;
      }
      case VertexKind::D13: {
        bool found = false;
        for (int r = 0; r < n && !found; ++r) {
          // forward: (1,2)^6 outward then s inward
          {
            std::vector<int> want;
            for (int k = 0; k < 6; ++k) {
              want.push_back(1);
              want.push_back(2);
            }
            want.push_back(kSigmaLabel);
            if (cyclic_match(L, want, r)) {
              bool good = true;
              for (int k = 0; k < 13; ++k)
                if (O[static_cast<std::size_t>((r + k) % 13)] != (k < 12)) good = false;
              found = found || good;
            }
          }
          // reversed: s outward then (2,1)^6 inward
          {
            std::vector<int> want = {kSigmaLabel};
            for (int k = 0; k < 6; ++k) {
              want.push_back(2);
              want.push_back(1);
            }
            if (cyclic_match(L, want, r)) {
              bool good = true;
              for (int k = 0; k < 13; ++k)
                if (O[static_cast<std::size_t>((r + k) % 13)] != (k == 0)) good = false;
              found = found || good;
            }
          }
        }
        if (!found) rep.fail(who + ": does not match the degree-13 pattern");
        break;
      }
    }
  }
}

}  // namespace

ValidationReport validate(const Chart& c) {
  ValidationReport rep;
  if (!structural_pass(c, rep)) return rep;
  check_vertex_rules(c, rep);

  const Topology t = compute_topology(c);
  // genus 0 per component
  for (int comp : t.comp_ids) {
    if (c.edges[static_cast<std::size_t>(comp)].hoop) continue;
    int ecount = 0;
    for (std::size_t ei = 0; ei < c.edges.size(); ++ei)
      if (t.edge_comp[ei] == comp) ++ecount;
    const int v = t.comp_vertex_count.count(comp) ? t.comp_vertex_count.at(comp) : 0;
    const int f = t.comp_face_count.at(comp);
    if (v - ecount + f != 2)
      rep.fail("component c" + std::to_string(comp) + ": rotation system is not planar (V-E+F=" +
               std::to_string(v - ecount + f) + ")");
  }
  // nesting forest:
  for (int comp : t.comp_ids) {
    if (!c.nesting.count(comp)) {
      rep.fail("component c" + std::to_string(comp) + ": missing nesting parent");
      continue;
    }
    const RegionRef p = c.nesting.at(comp);
    if (!p.is_root()) {
      if (std::find(t.comp_ids.begin(), t.comp_ids.end(), p.comp) == t.comp_ids.end() ||
          p.face < 0 || p.face >= t.comp_face_count.at(p.comp)) {
        rep.fail("component c" + std::to_string(comp) + ": parent region does not exist");
        continue;
      }
      if (p.face == outer_face_of(c, p.comp))
        rep.fail("component c" + std::to_string(comp) +
                 ": parent must be a non-outer face of the enclosing component");
    }
  }
  for (const auto& [comp, parent] : c.nesting)
    if (std::find(t.comp_ids.begin(), t.comp_ids.end(), comp) == t.comp_ids.end())
      rep.fail("nesting entry for nonexistent component c" + std::to_string(comp));
  for (const auto& [comp, f] : c.outer_face) {
    if (std::find(t.comp_ids.begin(), t.comp_ids.end(), comp) == t.comp_ids.end())
      rep.fail("outer-face entry for nonexistent component c" + std::to_string(comp));
    else if (c.edges[static_cast<std::size_t>(comp)].hoop)
      rep.fail("outer-face entry for hoop component c" + std::to_string(comp));
    else if (f < 0 || f >= t.comp_face_count.at(comp))
      rep.fail("outer face of c" + std::to_string(comp) + " out of range");
  }
  // cycles in the nesting forest
  for (int comp : t.comp_ids) {
    int hops = 0;
    RegionRef cur = c.nesting.count(comp) ? c.nesting.at(comp) : RegionRef{};
    while (!cur.is_root() && hops <= static_cast<int>(t.comp_ids.size())) {
      cur = c.nesting.count(cur.comp) ? c.nesting.at(cur.comp) : RegionRef{};
      ++hops;
    }
    if (!cur.is_root()) {
      rep.fail("nesting forest has a cycle through c" + std::to_string(comp));
      break;
    }
  }
  // base region exists
  if (!c.base.is_root()) {
    if (std::find(t.comp_ids.begin(), t.comp_ids.end(), c.base.comp) == t.comp_ids.end() ||
        c.base.face < 0 || c.base.face >= t.comp_face_count.at(c.base.comp) ||
        c.base.face == outer_face_of(c, c.base.comp))
      rep.fail("base region does not exist");
  }
  return rep;
}

// ---- operations --------------------------------------------------------------

Word vertex_boundary_word(const Chart& c, int vertex) {
  const auto& v = c.vertices[static_cast<std::size_t>(vertex)];
  if (v.kind == VertexKind::Black)
    throw std::invalid_argument("vertex_boundary_word: black vertex");
  Word out;
  for (const HalfEdgeRef r : v.rot) {
    const int label = c.edges[static_cast<std::size_t>(r.edge)].label;
    const std::int8_t sign = r.end == 0 ? +1 : -1;
    if (label == kSigmaLabel)
      out.push(Letter{Gen::S, sign});
    else
      out.push(Letter{zeta(label), sign});
  }
  return out;
}

FiberCounts black_counts(const Chart& c) {
  FiberCounts out;
  for (const auto& v : c.vertices) {
    if (v.kind != VertexKind::Black) continue;
    const HalfEdgeRef r = v.rot.at(0);
    const bool outward = r.end == 0;
    const bool sep = c.edges[static_cast<std::size_t>(r.edge)].label == kSigmaLabel;
    if (!sep)
      ++(outward ? out.nIp : out.nIm);
    else
      ++(outward ? out.nIIp : out.nIIm);
  }
  return out;
}

bool is_chiral(const Chart& c) {
  for (const auto& v : c.vertices)
    if (v.kind == VertexKind::Black && v.rot.at(0).end != 0) return false;
  return true;
}

bool is_irreducible(const Chart& c) {
  for (const auto& e : c.edges)
    if (e.label == kSigmaLabel) return false;
  return true;
}

Chart product(const Chart& a, const Chart& b) {
  Chart out = a;
  const int voff = static_cast<int>(a.vertices.size());
  const int eoff = static_cast<int>(a.edges.size());
  for (const auto& v : b.vertices) {
    ChartVertex nv = v;
    for (auto& r : nv.rot) r.edge += eoff;
    out.vertices.push_back(nv);
  }
  for (const auto& e : b.edges) {
    ChartEdge ne = e;
    if (!ne.hoop) {
      ne.tail_vertex += voff;
      ne.head_vertex += voff;
    }
    out.edges.push_back(ne);
  }
  for (const auto& [comp, parent] : b.nesting) {
    RegionRef np = parent;
    if (!np.is_root()) np.comp += eoff;
    out.nesting[comp + eoff] = np;
  }
  for (const auto& [comp, f] : b.outer_face) out.outer_face[comp + eoff] = f;
  out.base = RegionRef{};
  return out;
}

Chart basic_chart(BasicChart name) {
  switch (name) {
    case BasicChart::F1:
    case BasicChart::F2: {
      Chart c;
      const int b0 = add_vertex(c, VertexKind::Black);
      const int b1 = add_vertex(c, VertexKind::Black);
      add_edge(c, name == BasicChart::F1 ? 1 : kSigmaLabel, b0, -1, b1, -1);
      c.nesting[0] = RegionRef{};
      c.outer_face[0] = 0;
      c.base = RegionRef{};
      return c;
    }
    case BasicChart::N0: {
      Chart c;
      const int hub = add_vertex(c, VertexKind::D20);
      for (int i : {1, 2, 3, 4, 5, 5, 4, 3, 2, 1, 1, 2, 3, 4, 5, 5, 4, 3, 2, 1}) {
        const int b = add_vertex(c, VertexKind::Black);
        add_edge(c, i, b, -1, hub, -1);
      }
      c.nesting[0] = RegionRef{};
      c.outer_face[0] = 0;
      c.base = RegionRef{};
      return c;
    }
    case BasicChart::N1: {
      Chart c;
      const int hub = add_vertex(c, VertexKind::D30);
      // blacks of positive type point into the hub: descending labels ccw
      for (int r = 0; r < 6; ++r)
        for (int i = 5; i >= 1; --i) {
          const int b = add_vertex(c, VertexKind::Black);
          add_edge(c, i, b, -1, hub, -1);
        }
      c.nesting[0] = RegionRef{};
      c.outer_face[0] = 0;
      c.base = RegionRef{};
      return c;
    }
    case BasicChart::N2:
      return n2_chart();
  }
  throw std::invalid_argument("unknown basic chart");
}

std::optional<BasicChart> basic_chart_by_name(const std::string& name) {
  if (name == "N0") return BasicChart::N0;
  if (name == "N1") return BasicChart::N1;
  if (name == "N2") return BasicChart::N2;
  if (name == "F1") return BasicChart::F1;
  if (name == "F2") return BasicChart::F2;
  return std::nullopt;
}

std::string basic_chart_name(BasicChart b) {
  switch (b) {
    case BasicChart::N0: return "N0";
    case BasicChart::N1: return "N1";
    case BasicChart::N2: return "N2";
    case BasicChart::F1: return "F1";
    case BasicChart::F2: return "F2";
  }
  return "?";
}

// ---- text format --------------------------------------------------------------

std::string to_text(const Chart& c) {
  std::ostringstream os;
  os << "[vertices]\n";
  for (std::size_t vi = 0; vi < c.vertices.size(); ++vi) {
    const auto& v = c.vertices[vi];
    os << 'v' << vi << ' ' << kind_name(v.kind);
    for (const HalfEdgeRef r : v.rot) os << " e" << r.edge << ':' << (r.end == 0 ? 't' : 'h');
    os << '\n';
  }
  os << "[edges]\n";
  for (std::size_t ei = 0; ei < c.edges.size(); ++ei) {
    const auto& e = c.edges[ei];
    os << 'e' << ei << ' ';
    if (e.label == kSigmaLabel)
      os << 's';
    else
      os << e.label;
    if (e.hoop)
      os << " hoop " << (e.hoop_ccw ? "ccw" : "cw");
    else
      os << " v" << e.tail_vertex << ':' << e.tail_slot << " v" << e.head_vertex << ':'
         << e.head_slot;
    os << '\n';
  }
  os << "[nesting]\n";
  for (const auto& [comp, parent] : c.nesting) {
    os << 'c' << comp << ' ';
    if (parent.is_root())
      os << "root";
    else
      os << 'c' << parent.comp << ':' << parent.face;
    if (const auto it = c.outer_face.find(comp); it != c.outer_face.end())
      os << " outer " << it->second;
    os << '\n';
  }
  os << "[base]\n";
  if (c.base.is_root())
    os << "root\n";
  else
    os << 'c' << c.base.comp << ':' << c.base.face << '\n';
  return os.str();
}

namespace {

int expect_int(const std::string& tok, char prefix, const char* what) {
  if (tok.size() < 2 || tok[0] != prefix)
    throw std::invalid_argument(std::string("chart parse: expected ") + what + ", got '" + tok + "'");
  return std::stoi(tok.substr(1));
}

RegionRef parse_region(const std::string& tok) {
  if (tok == "root") return RegionRef{};
  const auto colon = tok.find(':');
  if (tok.empty() || tok[0] != 'c' || colon == std::string::npos)
    throw std::invalid_argument("chart parse: bad region '" + tok + "'");
  return RegionRef{std::stoi(tok.substr(1, colon - 1)), std::stoi(tok.substr(colon + 1))};
}

}  // namespace

Chart parse_chart(const std::string& text) {
  Chart c;
  std::istringstream is(text);
  std::string line;
  enum class Sec { None, Vertices, Edges, Nesting, Base } sec = Sec::None;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    if (line[b] == '#') continue;
    std::istringstream ls(line);
    std::string tok;
    ls >> tok;
    if (tok == "[vertices]") { sec = Sec::Vertices; continue; }
    if (tok == "[edges]") { sec = Sec::Edges; continue; }
    if (tok == "[nesting]") { sec = Sec::Nesting; continue; }
    if (tok == "[base]") { sec = Sec::Base; continue; }
    const std::string at = " (line " + std::to_string(lineno) + ")";
    switch (sec) {
      case Sec::Vertices: {
        const int id = expect_int(tok, 'v', "vertex id");
        if (id != static_cast<int>(c.vertices.size()))
          throw std::invalid_argument("chart parse: vertex ids must be dense and ordered" + at);
        std::string kname;
        ls >> kname;
        const auto kind = kind_by_name(kname);
        if (!kind) throw std::invalid_argument("chart parse: unknown vertex kind '" + kname + "'" + at);
        ChartVertex v;
        v.kind = *kind;
        std::string href;
        while (ls >> href) {
          const auto colon = href.find(':');
          if (href.empty() || href[0] != 'e' || colon == std::string::npos)
            throw std::invalid_argument("chart parse: bad half-edge '" + href + "'" + at);
          HalfEdgeRef r;
          r.edge = std::stoi(href.substr(1, colon - 1));
          const std::string endtok = href.substr(colon + 1);
          if (endtok == "t") r.end = 0;
          else if (endtok == "h") r.end = 1;
          else throw std::invalid_argument("chart parse: bad half-edge end '" + href + "'" + at);
          v.rot.push_back(r);
        }
        c.vertices.push_back(std::move(v));
        break;
      }
      case Sec::Edges: {
        const int id = expect_int(tok, 'e', "edge id");
        if (id != static_cast<int>(c.edges.size()))
          throw std::invalid_argument("chart parse: edge ids must be dense and ordered" + at);
        std::string lab;
        ls >> lab;
        ChartEdge e;
        if (lab == "s") e.label = kSigmaLabel;
        else e.label = std::stoi(lab);
        std::string t1;
        ls >> t1;
        if (t1 == "hoop") {
          e.hoop = true;
          std::string d;
          ls >> d;
          if (d == "ccw") e.hoop_ccw = true;
          else if (d == "cw") e.hoop_ccw = false;
          else throw std::invalid_argument("chart parse: hoop direction must be ccw/cw" + at);
        } else {
          std::string t2;
          ls >> t2;
          auto parse_end = [&](const std::string& s2, int& v, int& slot) {
            const auto colon = s2.find(':');
            if (s2.empty() || s2[0] != 'v' || colon == std::string::npos)
              throw std::invalid_argument("chart parse: bad endpoint '" + s2 + "'" + at);
            v = std::stoi(s2.substr(1, colon - 1));
            slot = std::stoi(s2.substr(colon + 1));
          };
          parse_end(t1, e.tail_vertex, e.tail_slot);
          parse_end(t2, e.head_vertex, e.head_slot);
        }
        c.edges.push_back(e);
        break;
      }
      case Sec::Nesting: {
        const int comp = expect_int(tok, 'c', "component id");
        std::string ptok;
        ls >> ptok;
        c.nesting[comp] = parse_region(ptok);
        std::string kw;
        if (ls >> kw) {
          if (kw != "outer")
            throw std::invalid_argument("chart parse: expected 'outer'" + at);
          int f = 0;
          ls >> f;
          c.outer_face[comp] = f;
        }
        break;
      }
      case Sec::Base: {
        c.base = parse_region(tok);
        break;
      }
      case Sec::None:
        throw std::invalid_argument("chart parse: content before any section" + at);
    }
  }
  return c;
}

// ---- helpers ------------------------------------------------------------------

int add_vertex(Chart& c, VertexKind k) {
  c.vertices.push_back(ChartVertex{k, {}});
  return static_cast<int>(c.vertices.size()) - 1;
}

int add_edge(Chart& c, int label, int tail_vertex, int tail_slot, int head_vertex,
             int head_slot) {
  const int ei = static_cast<int>(c.edges.size());
  ChartEdge e;
  e.label = label;
  e.tail_vertex = tail_vertex;
  e.head_vertex = head_vertex;
  auto wire = [&](int v, int& slot, int end) {
    auto& rot = c.vertices[static_cast<std::size_t>(v)].rot;
    if (slot < 0) {
      slot = static_cast<int>(rot.size());
      rot.push_back(HalfEdgeRef{ei, end});
    } else {
      if (slot >= static_cast<int>(rot.size()))
        rot.resize(static_cast<std::size_t>(slot) + 1, HalfEdgeRef{});
      rot[static_cast<std::size_t>(slot)] = HalfEdgeRef{ei, end};
    }
  };
  wire(tail_vertex, e.tail_slot = tail_slot, 0);
  wire(head_vertex, e.head_slot = head_slot, 1);
  c.edges.push_back(e);
  return ei;
}

int add_hoop(Chart& c, int label, bool ccw) {
  ChartEdge e;
  e.label = label;
  e.hoop = true;
  e.hoop_ccw = ccw;
  c.edges.push_back(e);
  return static_cast<int>(c.edges.size()) - 1;
}

}  // namespace g2chart
