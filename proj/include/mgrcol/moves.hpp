#pragma once

#include <set>
#include <string>
#include <vector>

#include "mgrcol/diagram.hpp"

namespace mgrcol {

enum class MoveKind { R1, R2, R3, R4, R5, R6 };
enum class MoveDir { Expand, Reduce };

std::string to_string(MoveKind k);
MoveKind move_kind_from_string(const std::string& s);

// {R2,R3,R5,R6}: spatial-surface moves; all six: handlebody moves.
const std::set<MoveKind>& spatial_surface_moves();
const std::set<MoveKind>& handlebody_moves();

struct MoveSite {
  MoveKind kind = MoveKind::R1;
  MoveDir dir = MoveDir::Reduce;
  std::string variant;
  std::vector<std::string> anchors; // arc / crossing / vertex ids, pattern specific
  bool operator==(const MoveSite&) const = default;
};

std::string serialize_site(const MoveSite& s);
MoveSite parse_site(const std::string& line);

// All sites of the given kind, reduce patterns and expand positions,
// in a deterministic order.
std::vector<MoveSite> find_sites(const Diagram& d, MoveKind kind);

// Rewrites the diagram at the site. Throws std::invalid_argument when the
// site is stale (not present in this diagram). The result always validates.
Diagram apply_move(const Diagram& d, const MoveSite& site);

struct WalkResult {
  Diagram diagram;
  std::vector<MoveSite> log;
};

// `steps` uniformly chosen applicable moves from `allowed`, seeded.
WalkResult random_walk(const Diagram& d, const std::set<MoveKind>& allowed, int steps,
                       unsigned long long seed);

} // namespace mgrcol
