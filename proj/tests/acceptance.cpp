// Acceptance suite: one test case per criterion, one PASS line each.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <chrono>
#include <cstdio>

#include "mgrcol/algebra.hpp"
#include "mgrcol/coloring.hpp"
#include "mgrcol/family.hpp"
#include "mgrcol/moves.hpp"
#include "mgrcol/seifert.hpp"

using namespace mgrcol;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void finish(int criterion, const char* label, Clock::time_point t0, double budget_s) {
  double s = seconds_since(t0);
  REQUIRE(s < budget_s);
  std::printf("criterion %d (%s): PASS  [%.2fs, budget %.0fs]\n", criterion, label, s,
              budget_s);
  std::fflush(stdout);
}

const FiniteMGR& paper_mgr() {
  static auto m = mgr_from_rack(product_rack(dihedral_quandle(3), cyclic_rack(2)));
  return m;
}

Diagram by_name(const std::string& want) {
  static auto cs = corpus();
  for (auto& [name, d] : cs)
    if (name == want) return d;
  throw std::logic_error("missing corpus entry " + want);
}

IntMatrix from_ints(int n, std::vector<long long> vals) {
  IntMatrix m(n);
  for (int i = 0; i < n * n; ++i) m.entries[i] = vals[i];
  return m;
}

BigInt abs_big(BigInt v) { return v < 0 ? -v : v; }

} // namespace

TEST_CASE("criterion 1: algebra axiom suites") {
  auto t0 = Clock::now();
  for (int n = 1; n <= 9; ++n) {
    auto r = dihedral_quandle(n);
    REQUIRE(check_rack_axioms(r).passed);
    REQUIRE(check_quandle(r).passed);
  }
  for (int n = 2; n <= 6; ++n) {
    auto c = cyclic_rack(n);
    REQUIRE(check_rack_axioms(c).passed);
    REQUIRE_FALSE(check_quandle(c).passed);
  }
  auto prod = product_rack(dihedral_quandle(3), cyclic_rack(2));
  REQUIRE(check_rack_axioms(prod).passed);
  std::vector<FiniteMGR> mcqs;
  for (int k = 2; k <= 8; ++k) mcqs.push_back(conjugation_mcq(cyclic_group_table(k)));
  mcqs.push_back(conjugation_mcq(symmetric3_table())); // 6-element nonabelian group
  for (const auto& m : mcqs) REQUIRE(check_mgr_axioms(m).passed);
  // mgr_from_rack of each of the above algebras, full exhaustive suites
  std::vector<FiniteRack> racks{prod};
  for (const auto& m : mcqs) racks.push_back(rack_from_table(m.size, m.op));
  for (const auto& r : racks) {
    REQUIRE(check_rack_axioms(r).passed);
    REQUIRE(check_mgr_axioms(mgr_from_rack(r)).passed);
  }
  finish(1, "algebra axioms", t0, 2.0);
}

TEST_CASE("criterion 2: stabilizer order of R3 x C2") {
  auto t0 = Clock::now();
  REQUIRE(stabilizer_order(product_rack(dihedral_quandle(3), cyclic_rack(2))) == 2);
  finish(2, "stabilizer order = 2", t0, 2.0);
}

TEST_CASE("criterion 3: coloring oracle equivalence") {
  auto t0 = Clock::now();
  static auto r3 = dihedral_quandle(3);
  static auto c2 = cyclic_rack(2);
  static auto c4 = cyclic_rack(4);
  static auto prod = product_rack(r3, c2);
  static auto m_r3 = mgr_from_rack(r3);
  static auto m_c2 = mgr_from_rack(c2);
  static auto m_prod = mgr_from_rack(prod); // 12 elements
  static auto z2 = conjugation_mcq(cyclic_group_table(2));
  static auto z4 = conjugation_mcq(cyclic_group_table(4));
  static auto s3 = conjugation_mcq(symmetric3_table());

  std::vector<ColoringAlgebra> rack_algs = {
      ColoringAlgebra::of(r3), ColoringAlgebra::of(c2), ColoringAlgebra::of(c4),
      ColoringAlgebra::of(prod)};
  std::vector<ColoringAlgebra> mgr_algs = {
      ColoringAlgebra::of(m_r3), ColoringAlgebra::of(m_c2), ColoringAlgebra::of(m_prod),
      ColoringAlgebra::of(z2),   ColoringAlgebra::of(z4),   ColoringAlgebra::of(s3)};

  for (const auto& [name, d] : corpus()) {
    if (d.arcs.size() > 6) continue;
    CAPTURE(name);
    for (const auto& x : mgr_algs)
      REQUIRE(count_colorings(d, x) == count_colorings_bruteforce(d, x));
    if (d.vertices.empty())
      for (const auto& x : rack_algs)
        REQUIRE(count_colorings(d, x) == count_colorings_bruteforce(d, x));
  }
  REQUIRE(count_colorings(by_name("trefoil"), ColoringAlgebra::of(r3)) == 9);
  auto circle = by_name("circle");
  for (const auto& x : mgr_algs)
    REQUIRE(count_colorings(circle, x) == x.size);
  for (const auto& x : rack_algs)
    REQUIRE(count_colorings(circle, x) == x.size);
  finish(3, "solver equals brute force", t0, 30.0);
}

TEST_CASE("criterion 4: the distinguishing family, ratio two") {
  auto t0 = Clock::now();
  auto x = ColoringAlgebra::of(paper_mgr());
  for (int n = -2; n <= 2; ++n) {
    CAPTURE(n);
    BigInt a = count_colorings(make_dn(n, trivial_base()), x);
    BigInt b = count_colorings(make_dn_prime(n, trivial_base()), x);
    REQUIRE(a > 0);
    REQUIRE(b > 0);
    REQUIRE(a % 4 == 0);
    REQUIRE(b % 4 == 0);
    REQUIRE(b == 2 * a);
  }
  finish(4, "|Col(Dn')| = 2|Col(Dn)| for n in -2..2", t0, 60.0);
}

TEST_CASE("criterion 5: move invariance of coloring counts") {
  auto t0 = Clock::now();
  static auto m_r3 = mgr_from_rack(dihedral_quandle(3));
  static auto m_c2 = mgr_from_rack(cyclic_rack(2));
  static auto z4 = conjugation_mcq(cyclic_group_table(4));
  static auto s3 = conjugation_mcq(symmetric3_table());
  const std::vector<const FiniteMGR*> mgrs{&m_r3, &m_c2, &paper_mgr()};

  unsigned long long seed = 20260810;
  for (const char* name : {"circle", "trefoil", "theta", "dn_p1"}) {
    CAPTURE(name);
    auto d = by_name(name);
    auto walked = random_walk(d, spatial_surface_moves(), 100, seed++);
    REQUIRE(walked.log.size() == 100);
    for (const auto* alg : mgrs) {
      auto x = ColoringAlgebra::of(*alg);
      REQUIRE(count_colorings(walked.diagram, x) == count_colorings(d, x));
    }
  }
  // conjugation quandles survive all six moves
  for (const char* name : {"circle", "trefoil", "theta"}) {
    CAPTURE(name);
    auto d = by_name(name);
    auto walked = random_walk(d, handlebody_moves(), 100, seed++);
    REQUIRE(walked.log.size() == 100);
    for (const auto* alg : std::initializer_list<const FiniteMGR*>{&z4, &s3}) {
      auto x = ColoringAlgebra::of(*alg);
      REQUIRE(count_colorings(walked.diagram, x) == count_colorings(d, x));
    }
  }
  // framing sensitivity: one kink changes the count over the C2-based MGR
  auto xc2 = ColoringAlgebra::of(m_c2);
  BigInt plain = count_colorings(by_name("circle"), xc2);
  BigInt kinked = count_colorings(by_name("kink_pos"), xc2);
  REQUIRE(plain == 4);
  REQUIRE(kinked == 2);
  REQUIRE(plain != kinked);
  finish(5, "walks preserve counts; R1 shifts a rack count", t0, 120.0);
}

TEST_CASE("criterion 6: counts are independent of the Y-orientation") {
  auto t0 = Clock::now();
  static auto m_r3 = mgr_from_rack(dihedral_quandle(3));
  static auto r3 = dihedral_quandle(3);
  static auto c2 = cyclic_rack(2);
  for (const auto& [name, d] : corpus()) {
    if (edges(d).size() > 12) continue;
    CAPTURE(name);
    auto x = ColoringAlgebra::of(m_r3);
    BigInt base = count_colorings(d, x);
    auto all = enumerate_y_orientations(d);
    REQUIRE_FALSE(all.empty());
    for (const auto& o : all) REQUIRE(count_colorings(o, x) == base);
    if (d.vertices.empty() && d.arcs.size() <= 6) {
      for (const auto* rk : std::initializer_list<const FiniteRack*>{&r3, &c2}) {
        auto xr = ColoringAlgebra::of(*rk);
        BigInt br = count_colorings(d, xr);
        for (const auto& o : all) REQUIRE(count_colorings(o, xr) == br);
      }
    }
  }
  finish(6, "all Y-orientations give one count", t0, 60.0);
}

TEST_CASE("criterion 7: Seifert minor-gcd profiles") {
  auto t0 = Clock::now();
  IntMatrix empty;
  for (long long m = -5; m <= 5; ++m) {
    auto prof = gcd_profile(build_vk(empty, m));
    REQUIRE(prof.g[2] == abs_big(4 + 2 * m));
  }
  struct Case { IntMatrix v; int s; };
  std::vector<Case> cases;
  cases.push_back({from_ints(1, {2}), 1});
  cases.push_back({from_ints(2, {1, 1, 0, 1}), 2}); // det 1
  cases.push_back({from_ints(2, {2, 2, 2, 2}), 1}); // singular
  for (const auto& c : cases) {
    BigInt vs = minor_gcd(c.v, c.s);
    REQUIRE(vs != 0);
    if (c.s < c.v.n) REQUIRE(minor_gcd(c.v, c.s + 1) == 0);
    for (long long m = -5; m <= 5; ++m)
      REQUIRE(minor_gcd(build_vk(c.v, m), 3 + c.s) == abs_big(4 + 2 * m) * vs);
  }
  for (long long m = -5; m <= 5; ++m)
    for (long long n = -5; n <= 5; ++n) {
      bool want = abs_big(4 + 2 * m) != abs_big(4 + 2 * n);
      REQUIRE(profiles_distinguish(build_vk(empty, m), build_vk(empty, n)) == want);
    }
  finish(7, "gcd profile formulas of the V_k family", t0, 10.0);
}

TEST_CASE("criterion 8: profiles are congruence invariants") {
  auto t0 = Clock::now();
  IntMatrix empty;
  std::vector<IntMatrix> tests{build_vk(empty, 0), from_ints(2, {2, 0, 0, 6}),
                               from_ints(3, {0, 1, 0, -1, 0, 2, 0, -2, 4})};
  for (const auto& m : tests) {
    auto base = gcd_profile(m);
    for (unsigned long long seed = 0; seed < 200; ++seed) {
      auto p = random_unimodular(m.n, 30, seed);
      REQUIRE(gcd_profile(congruent_transform(m, p)) == base);
    }
  }
  auto m = from_ints(2, {0, 1, -1, 0});
  auto planted = congruent_transform(m, from_ints(2, {1, 1, 0, 1}));
  auto w = congruence_witness_search(m, planted, 2);
  REQUIRE(w.has_value());
  REQUIRE(congruent_transform(m, *w) == planted);
  finish(8, "200 unimodular transforms preserve each profile", t0, 30.0);
}

TEST_CASE("criterion 9: surface statistics") {
  auto t0 = Clock::now();
  REQUIRE(surface_stats(by_name("circle")) == SurfaceStats{1, 0, 2, 0});
  REQUIRE(surface_stats(by_name("theta")) == SurfaceStats{1, -1, 3, 0});
  for (int n = -2; n <= 2; ++n)
    REQUIRE(surface_stats(make_dn(n, trivial_base())) ==
            surface_stats(make_dn_prime(n, trivial_base())));
  // invariance under walks of the surface-preserving moves (R4 excluded:
  // a vertex twist genuinely re-glues the ribbon structure)
  const std::set<MoveKind> kinds{MoveKind::R1, MoveKind::R2, MoveKind::R3, MoveKind::R5,
                                 MoveKind::R6};
  unsigned long long seed = 7;
  for (const char* name : {"circle", "trefoil", "theta", "dn_p1"}) {
    CAPTURE(name);
    auto d = by_name(name);
    auto walked = random_walk(d, kinds, 60, seed++);
    REQUIRE(surface_stats(walked.diagram) == surface_stats(d));
  }
  finish(9, "surface stats: values, pair equality, move invariance", t0, 10.0);
}
