#pragma once

#include <map>
#include <string>
#include <vector>

#include "mgrcol/algebra.hpp"
#include "mgrcol/bigint.hpp"
#include "mgrcol/diagram.hpp"

namespace mgrcol {

// Either a plain rack (vertex-free diagrams only) or an MGR.
struct ColoringAlgebra {
  int size = 0;
  const FiniteRack* rack = nullptr;
  const FiniteMGR* mgr = nullptr;

  static ColoringAlgebra of(const FiniteRack& r) { return {r.size, &r, nullptr}; }
  static ColoringAlgebra of(const FiniteMGR& m) { return {m.size, nullptr, &m}; }

  int act(int x, int y) const { return rack ? rack->at(x, y) : mgr->at(x, y); }
  int act_inv(int a, int y) const { return rack ? rack->inv_at(a, y) : mgr->inv_at(a, y); }
  bool has_groups() const { return mgr != nullptr; }
};

struct Coloring {
  std::map<std::string, int> assignment; // arc id -> element index
};

struct EnumerationResult {
  std::vector<Coloring> colorings; // lexicographic by (arc id, element index)
  bool truncated = false;
};

bool is_coloring(const Diagram& d, const ColoringAlgebra& x, const Coloring& c);

// Propagation search: solve unit constraints, branch on the lowest-id
// uncolored arc. jobs > 1 splits the first branch across OpenMP workers.
BigInt count_colorings(const Diagram& d, const ColoringAlgebra& x, int jobs = 1);

EnumerationResult enumerate_colorings(const Diagram& d, const ColoringAlgebra& x,
                                      long long cap);

// Independent oracle: filters all |x|^arcs assignments.
BigInt count_colorings_bruteforce(const Diagram& d, const ColoringAlgebra& x,
                                  double state_bound = 1e8);

} // namespace mgrcol
