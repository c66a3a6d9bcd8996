#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mgrcol/diagram.hpp"

namespace mgrcol {

// Diagram fragment with one open tail (entry) and one open head (exit),
// spliced into the outer loop of the family diagrams.
struct Tangle {
  std::set<std::string> arcs;
  std::vector<Crossing> crossings;
  std::string entry, exit;
};

Tangle trivial_base();                       // a single straight strand
Tangle kink_chain(int count, bool positive); // `count` uniform kinks
Tangle trefoil_tangle();                     // open trefoil, three crossings

// Joins exit back onto entry; a cut-free result becomes a circle.
Diagram close_tangle(const Tangle& t);

// The two attachment patterns around a base diagram. Both share one
// skeleton (8 vertices, 12 edges); they differ in which added edge carries
// the three-crossing clasp and which carries the row of four band twists.
// The 2n-kink box always sits on the edge leaving the top junction. The
// arcs named "bb" and "r2a0" carry the coloring conditions whose Z_2
// coordinates are forced to vanish.
Diagram make_dn(int n, const Tangle& base);
Diagram make_dn_prime(int n, const Tangle& base);

// Fixed validated test corpus.
std::vector<std::pair<std::string, Diagram>> corpus();

} // namespace mgrcol
