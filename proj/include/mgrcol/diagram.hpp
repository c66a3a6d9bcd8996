#pragma once

#include <array>
#include <set>
#include <string>
#include <vector>

namespace mgrcol {

enum class Dir { In, Out };
enum class Sign { Pos, Neg };

inline Sign flip(Sign s) { return s == Sign::Pos ? Sign::Neg : Sign::Pos; }
inline Dir flip(Dir d) { return d == Dir::In ? Dir::Out : Dir::In; }

// One crossing. The under-strand is cut here: under_in's head and
// under_out's tail are consumed. The over arc is referenced, not cut.
struct Crossing {
  std::string id;
  std::string over, under_in, under_out;
  Sign sign = Sign::Pos;
};

struct VertexSlot {
  std::string arc;
  Dir dir = Dir::In; // In: arc head ends here; Out: arc tail starts here
};

// Trivalent vertex with its counterclockwise rotation as drawn.
struct Vertex {
  std::string id;
  std::array<VertexSlot, 3> rot;
};

// Y-oriented diagram of a spatial trivalent graph in the slot model:
// arcs are the components cut at undercrossings and vertices.
struct Diagram {
  std::set<std::string> arcs;    // every declared arc
  std::set<std::string> circles; // subset: closed arcs with no cuts
  std::vector<Crossing> crossings; // sorted by id
  std::vector<Vertex> vertices;    // sorted by id

  bool has_arc(const std::string& a) const { return arcs.count(a) > 0; }
  bool is_circle(const std::string& a) const { return circles.count(a) > 0; }
  const Crossing* find_crossing(const std::string& id) const;
  const Vertex* find_vertex(const std::string& id) const;
  void sort_parts(); // restore id ordering after edits
};

// Graph edge of the diagram: a maximal chain of arcs glued at undercrossings.
struct DiagramEdge {
  std::vector<std::string> arcs; // sorted
  bool closed = false;           // circle component (no vertex endpoints)
  int start_vertex = -1, start_slot = -1; // Out slot, when !closed
  int end_vertex = -1, end_slot = -1;     // In slot, when !closed
  bool contains(const std::string& a) const;
};

// Abstract-surface data of F(D): crossings contribute two disjoint bands,
// so only the graph with its vertex rotations matters.
struct SurfaceStats {
  int components = 0;
  int euler = 0;
  int boundary = 0;
  int genus = 0;
  bool operator==(const SurfaceStats&) const = default;
};

Diagram parse_diagram(const std::string& text);
std::string serialize_diagram(const Diagram& d);

// Empty iff the diagram is well-formed (slot discipline + Y-condition).
std::vector<std::string> validate(const Diagram& d);

std::vector<DiagramEdge> edges(const Diagram& d); // ordered by smallest arc id

// Reverses every arc of e: swaps under slots and flips signs/flags per the
// usual rules. The result may violate the Y-condition; callers check.
Diagram reverse_edge(const Diagram& d, const DiagramEdge& e);

// All edge-subset reversals that satisfy the Y-condition, in ascending
// flip-bitmask order. Index 0 is the input diagram itself.
std::vector<Diagram> enumerate_y_orientations(const Diagram& d);

SurfaceStats surface_stats(const Diagram& d);

} // namespace mgrcol
