#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "g2chart/hurwitz.hpp"
#include "g2chart/word.hpp"

namespace g2chart {

// ---- combinatorial planar maps with hoops and nesting ----------------------
//
// A chart is a labeled oriented graph embedded in a disk. Each connected
// component carries a rotation system (counterclockwise edge order at every
// vertex), which fixes a sphere embedding; the designated outer face says
// which face opens toward the surrounding region. Hoops are closed edges
// without vertices. The nesting forest records which region every component
// lives in, and one region holds the base point.

enum class VertexKind : std::uint8_t { Black, D4, D6, D20, D30, D22, D13 };

int degree_of(VertexKind k);
std::string kind_name(VertexKind k);
std::optional<VertexKind> kind_by_name(const std::string& s);

// Edge labels: 1..5 for the chain twists, 6 for s.
constexpr int kSigmaLabel = 6;

struct HalfEdgeRef {
  int edge = -1;
  int end = 0;  // 0 = tail side, 1 = head side
  friend bool operator==(const HalfEdgeRef&, const HalfEdgeRef&) = default;
};

struct ChartVertex {
  VertexKind kind = VertexKind::Black;
  std::vector<HalfEdgeRef> rot;  // counterclockwise
  friend bool operator==(const ChartVertex&, const ChartVertex&) = default;
};

struct ChartEdge {
  int label = 1;       // 1..5 or kSigmaLabel
  bool hoop = false;
  bool hoop_ccw = true;  // hoops: interior lies to the left of the direction
  int tail_vertex = -1, tail_slot = -1;
  int head_vertex = -1, head_slot = -1;
  friend bool operator==(const ChartEdge&, const ChartEdge&) = default;
};

// A region is the root of the disk or a non-outer face of a component.
struct RegionRef {
  int comp = -1;  // component id (min edge id); -1 for the root region
  int face = -1;
  bool is_root() const { return comp < 0; }
  friend bool operator==(const RegionRef&, const RegionRef&) = default;
  friend auto operator<=>(const RegionRef&, const RegionRef&) = default;
};

struct Chart {
  std::vector<ChartVertex> vertices;
  std::vector<ChartEdge> edges;
  // component id -> parent region; component id -> outer face (non-hoops)
  std::map<int, RegionRef> nesting;
  std::map<int, int> outer_face;
  RegionRef base;  // region containing the base point

  friend bool operator==(const Chart&, const Chart&) = default;
};

// ---- derived structure ------------------------------------------------------

struct DirEdge {
  int edge = -1;
  int dir = 0;  // 0 = along tail->head, 1 = reversed
  friend bool operator==(const DirEdge&, const DirEdge&) = default;
  friend auto operator<=>(const DirEdge&, const DirEdge&) = default;
};
inline DirEdge reversed(DirEdge h) { return {h.edge, 1 - h.dir}; }

// Faces and components computed from the rotation system.
struct Topology {
  std::vector<int> edge_comp;             // edge id -> component id
  std::vector<int> comp_ids;              // sorted component ids
  // (component, face index) -> face walk as directed edges, interior on the left
  std::map<std::pair<int, int>, std::vector<DirEdge>> face_walks;
  std::map<DirEdge, std::pair<int, int>> face_of;  // directed edge -> (comp, face)
  std::map<int, int> comp_vertex_count;
  std::map<int, int> comp_face_count;
};

Topology compute_topology(const Chart& c);

int component_of_edge(const Topology& t, int edge);
int outer_face_of(const Chart& c, int comp);

// Resolves a face to the region it belongs to (outer faces open into the
// component's parent region).
RegionRef region_of_face(const Chart& c, const Topology& t, int comp, int face);

std::vector<RegionRef> all_regions(const Chart& c, const Topology& t);

// Regions on the two sides of an edge: {left, right} of its direction.
std::pair<RegionRef, RegionRef> edge_sides(const Chart& c, const Topology& t, int edge);

// ---- validation ------------------------------------------------------------

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> violations;

  void fail(std::string msg) {
    ok = false;
    violations.push_back(std::move(msg));
  }
};

ValidationReport validate(const Chart& c);

// ---- chart-level operations -------------------------------------------------

// Reads the edges around a non-black vertex counterclockwise; an outward
// edge labeled x contributes x, an inward one x^-1.
Word vertex_boundary_word(const Chart& c, int vertex);

FiberCounts black_counts(const Chart& c);

bool is_chiral(const Chart& c);       // every black vertex has an outward edge
bool is_irreducible(const Chart& c);  // no s-labeled edges

// Side-by-side placement in one disk; counts add.
Chart product(const Chart& a, const Chart& b);

enum class BasicChart { N0, N1, N2, F1, F2 };
Chart basic_chart(BasicChart name);
std::optional<BasicChart> basic_chart_by_name(const std::string& name);
std::string basic_chart_name(BasicChart b);

// ---- text format -----------------------------------------------------------

std::string to_text(const Chart& c);
Chart parse_chart(const std::string& text);

// ---- small helpers used by the engines --------------------------------------

int add_vertex(Chart& c, VertexKind k);
// Adds an edge and wires both endpoint slots (slots must exist; use -1 slots
// to append). Returns edge id.
int add_edge(Chart& c, int label, int tail_vertex, int tail_slot, int head_vertex,
             int head_slot);
int add_hoop(Chart& c, int label, bool ccw);

}  // namespace g2chart
