#pragma once

#include <optional>
#include <string>
#include <vector>

namespace mgrcol {

// Finite rack: a set {0..size-1} with a binary operation x <| y whose right
// translations S_y are bijections and which is self-distributive.
struct FiniteRack {
  int size = 0;
  std::vector<int> op;  // size*size, op[x*size+y] = x <| y
  std::vector<int> inv; // inv[a*size+y] = the unique b with b <| y = a

  int at(int x, int y) const { return op[x * size + y]; }
  int inv_at(int a, int y) const { return inv[a * size + y]; }
};

// Finite multiple group rack: a disjoint union of groups with a rack
// operation compatible with the group structure (conditions (i)-(iii)).
struct FiniteMGR {
  int size = 0;
  std::vector<int> op;   // rack operation, as in FiniteRack
  std::vector<int> inv;  // rack inverse, as in FiniteRack
  std::vector<int> group_of;         // element -> group index
  std::vector<std::vector<int>> groups; // group index -> ascending members
  std::vector<int> mul;  // size*size, -1 when arguments lie in different groups
  std::vector<int> ginv; // group inverse per element
  std::vector<int> gid;  // identity element per group

  int at(int x, int y) const { return op[x * size + y]; }
  int inv_at(int a, int y) const { return inv[a * size + y]; }
  int prod(int a, int b) const { return mul[a * size + b]; }
  int num_groups() const { return static_cast<int>(groups.size()); }
};

struct AxiomViolation {
  std::string axiom;        // e.g. "bijectivity", "self-distributivity"
  std::vector<int> witness; // offending element tuple, lexicographically minimal first
};

struct AxiomReport {
  bool passed = false;
  std::vector<AxiomViolation> violations; // capped at kMaxViolations
};

inline constexpr int kMaxViolations = 100;

// Constructors. All throw std::invalid_argument on bad parameters.
FiniteRack dihedral_quandle(int n);            // x <| y = 2y - x  (mod n)
FiniteRack cyclic_rack(int n);                 // x <| y = x + 1   (mod n)
FiniteRack product_rack(const FiniteRack& r1, const FiniteRack& r2);
FiniteRack rack_from_table(int n, std::vector<int> op); // validates shape only

// Plain finite group tables (inputs to conjugation_mcq; also used by tests).
std::vector<int> cyclic_group_table(int n);
std::vector<int> symmetric3_table(); // S_3 under composition, 6 elements

// Verifies `table` is a group and builds the single-group MCQ a <| b = b^-1 a b.
FiniteMGR conjugation_mcq(const std::vector<int>& table);

// min k > 0 with S_y^k = id for every y.
long long stabilizer_order(const FiniteRack& r);

// The MGR R x Z_n of the paper's example: groups {x} x Z_n,
// (x,i) <| (y,j) = (S_y^j(x), i), (x,i)(x,j) = (x, i+j).
FiniteMGR mgr_from_rack(const FiniteRack& r);

// Exhaustive axiom checks. `jobs` > 1 partitions the element cube across
// OpenMP workers; the merged violation list is identical for every schedule.
AxiomReport check_rack_axioms(const FiniteRack& r, int jobs = 1);
AxiomReport check_quandle(const FiniteRack& r, int jobs = 1);
AxiomReport check_mgr_axioms(const FiniteMGR& x, int jobs = 1);

// Validates a raw group table; nullopt when it is a group, otherwise the
// failing axiom with a witness rendered into the string.
std::optional<std::string> group_table_error(const std::vector<int>& table);

// Cayley-table text format (.alg). See README for the grammar.
struct Algebra {
  // exactly one of these is set
  std::optional<FiniteRack> rack;
  std::optional<FiniteMGR> mgr;
  std::optional<std::vector<int>> group; // plain group table, size n*n
};

Algebra parse_algebra(const std::string& text);
std::string serialize_algebra(const FiniteRack& r);
std::string serialize_algebra(const FiniteMGR& x);

} // namespace mgrcol
