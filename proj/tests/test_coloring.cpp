#include "doctest.h"

#include <stdexcept>

#include "mgrcol/coloring.hpp"
#include "mgrcol/family.hpp"

using namespace mgrcol;

namespace {

Diagram trefoil() {
  for (auto& [name, d] : corpus())
    if (name == "trefoil") return d;
  throw std::logic_error("no trefoil");
}

Diagram theta() {
  for (auto& [name, d] : corpus())
    if (name == "theta") return d;
  throw std::logic_error("no theta");
}

} // namespace

TEST_CASE("circle counts") {
  auto circle = parse_diagram("circle z\n");
  auto r3 = dihedral_quandle(3);
  CHECK(count_colorings(circle, ColoringAlgebra::of(r3)) == 3);
  auto m = mgr_from_rack(r3);
  CHECK(count_colorings(circle, ColoringAlgebra::of(m)) == 6);
  Coloring c;
  c.assignment["z"] = 2;
  CHECK(is_coloring(circle, ColoringAlgebra::of(r3), c));
}

TEST_CASE("trefoil with R_3") {
  auto t = trefoil();
  static auto r3 = dihedral_quandle(3);
  auto x = ColoringAlgebra::of(r3);
  CHECK(count_colorings(t, x) == 9);
  CHECK(count_colorings_bruteforce(t, x) == 9);

  Coloring constant;
  for (const auto& a : t.arcs) constant.assignment[a] = 1;
  CHECK(is_coloring(t, x, constant));
  Coloring mixed; // around the standard diagram
  mixed.assignment = {{"a", 0}, {"b", 1}, {"c", 2}};
  CHECK(is_coloring(t, x, mixed));
  Coloring bad;
  bad.assignment = {{"a", 0}, {"b", 1}, {"c", 1}};
  CHECK_FALSE(is_coloring(t, x, bad));
  Coloring missing;
  missing.assignment = {{"a", 0}};
  CHECK_THROWS_AS(is_coloring(t, x, missing), std::invalid_argument);
}

TEST_CASE("enumeration is lexicographic and capped") {
  auto t = trefoil();
  static auto r3 = dihedral_quandle(3);
  auto x = ColoringAlgebra::of(r3);
  auto res = enumerate_colorings(t, x, 100);
  CHECK_FALSE(res.truncated);
  REQUIRE(res.colorings.size() == 9);
  for (const auto& [arc, v] : res.colorings[0].assignment) CHECK(v == 0);
  for (size_t i = 1; i < res.colorings.size(); ++i) {
    auto lhs = res.colorings[i - 1].assignment;
    auto rhs = res.colorings[i].assignment;
    CHECK(std::lexicographical_compare(lhs.begin(), lhs.end(), rhs.begin(), rhs.end()));
  }
  auto capped = enumerate_colorings(t, x, 2);
  CHECK(capped.truncated);
  CHECK(capped.colorings.size() == 2);

  auto circ = enumerate_colorings(parse_diagram("circle z\n"), x, 10);
  CHECK(circ.colorings.size() == 3);
}

TEST_CASE("theta needs groups") {
  auto th = theta();
  static auto r3 = dihedral_quandle(3);
  CHECK_THROWS_AS(count_colorings(th, ColoringAlgebra::of(r3)), std::invalid_argument);

  static auto z2 = conjugation_mcq(cyclic_group_table(2));
  auto x = ColoringAlgebra::of(z2);
  CHECK(count_colorings(th, x) == 4); // pairs (g,h) with gh free
  CHECK(count_colorings_bruteforce(th, x) == 4);
}

TEST_CASE("trefoil with the R_3 MGR") {
  static auto m = mgr_from_rack(dihedral_quandle(3));
  auto x = ColoringAlgebra::of(m);
  auto t = trefoil();
  CHECK(count_colorings(t, x) == 12); // 3 at charge 0 plus 9 at charge 1
  CHECK(count_colorings_bruteforce(t, x) == 12);
}

TEST_CASE("oracle equivalence over the small corpus") {
  static auto r3 = dihedral_quandle(3);
  static auto c2 = cyclic_rack(2);
  static auto c4 = cyclic_rack(4);
  static auto p = product_rack(r3, c2);
  static auto m_r3 = mgr_from_rack(r3);
  static auto m_c2 = mgr_from_rack(c2);
  static auto m_p = mgr_from_rack(p);
  static auto z2 = conjugation_mcq(cyclic_group_table(2));
  static auto z4 = conjugation_mcq(cyclic_group_table(4));
  static auto s3 = conjugation_mcq(symmetric3_table());

  std::vector<ColoringAlgebra> racks = {
      ColoringAlgebra::of(r3), ColoringAlgebra::of(c2), ColoringAlgebra::of(c4),
      ColoringAlgebra::of(p)};
  std::vector<ColoringAlgebra> mgrs = {
      ColoringAlgebra::of(m_r3), ColoringAlgebra::of(m_c2), ColoringAlgebra::of(m_p),
      ColoringAlgebra::of(z2),   ColoringAlgebra::of(z4),   ColoringAlgebra::of(s3)};

  for (const auto& [name, d] : corpus()) {
    if (d.arcs.size() > 6) continue;
    CAPTURE(name);
    for (const auto& x : mgrs)
      CHECK(count_colorings(d, x) == count_colorings_bruteforce(d, x));
    if (d.vertices.empty())
      for (const auto& x : racks)
        CHECK(count_colorings(d, x) == count_colorings_bruteforce(d, x));
  }
}

TEST_CASE("disjoint union multiplies counts") {
  auto t = trefoil();
  Diagram u = t;
  u.arcs.insert("z");
  u.circles.insert("z");
  static auto r3 = dihedral_quandle(3);
  auto x = ColoringAlgebra::of(r3);
  CHECK(count_colorings(u, x) == 27); // 9 * 3
}

TEST_CASE("y-orientation independence on small diagrams") {
  static auto m_r3 = mgr_from_rack(dihedral_quandle(3));
  static auto z4 = conjugation_mcq(cyclic_group_table(4));
  for (const auto& [name, d] : corpus()) {
    if (d.arcs.size() > 6) continue;
    CAPTURE(name);
    for (const auto* alg : {&m_r3, &z4}) {
      auto x = ColoringAlgebra::of(*alg);
      BigInt base = count_colorings(d, x);
      for (const auto& o : enumerate_y_orientations(d))
        CHECK(count_colorings(o, x) == base);
    }
  }
}

TEST_CASE("worker count does not change results") {
  static auto m = mgr_from_rack(product_rack(dihedral_quandle(3), cyclic_rack(2)));
  auto x = ColoringAlgebra::of(m);
  auto dn = make_dn(1, trivial_base());
  CHECK(count_colorings(dn, x, 1) == count_colorings(dn, x, 4));
}
