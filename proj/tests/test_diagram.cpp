#include "doctest.h"

#include <stdexcept>

#include "mgrcol/diagram.hpp"
#include "mgrcol/family.hpp"

using namespace mgrcol;

namespace {

const char* kTrefoil =
    "arc a\narc b\narc c\n"
    "crossing x1 over=c under_in=a under_out=b sign=+\n"
    "crossing x2 over=a under_in=b under_out=c sign=+\n"
    "crossing x3 over=b under_in=c under_out=a sign=+\n";

const char* kTheta =
    "arc e1\narc e2\narc e3\n"
    "vertex v1 kind=split left=e1 right=e2 stem=e3\n"
    "vertex v2 kind=merge left=e1 right=e2 stem=e3\n";

} // namespace

TEST_CASE("parse basics") {
  auto d = parse_diagram("circle a1\n");
  CHECK(d.arcs.size() == 1);
  CHECK(d.is_circle("a1"));
  CHECK(d.crossings.empty());
  CHECK(d.vertices.empty());

  auto t = parse_diagram(kTrefoil);
  CHECK(t.arcs.size() == 3);
  CHECK(t.crossings.size() == 3);
  CHECK(validate(t).empty());

  CHECK_THROWS_WITH_AS(
      parse_diagram("arc a\ncrossing x over=a under_in=zz under_out=a sign=+\n"),
      doctest::Contains("line 2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_diagram("arc a\narc a\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_diagram("bogus q\n"), std::invalid_argument);
}

TEST_CASE("validate catches slot violations") {
  Diagram d;
  d.arcs = {"a", "b", "c"};
  d.crossings.push_back({"x1", "a", "a", "b", Sign::Pos});
  d.crossings.push_back({"x2", "a", "c", "b", Sign::Pos}); // b tail consumed twice
  CHECK_FALSE(validate(d).empty());

  Diagram sink;
  sink.arcs = {"a", "b", "c"};
  sink.vertices.push_back({"v", {VertexSlot{"a", Dir::In}, VertexSlot{"b", Dir::In},
                                 VertexSlot{"c", Dir::In}}});
  auto errs = validate(sink);
  bool saw_sink = false;
  for (const auto& e : errs) saw_sink = saw_sink || e.find("sink") != std::string::npos;
  CHECK(saw_sink);
}

TEST_CASE("serialization round trip is bit exact") {
  for (const auto& [name, d] : corpus()) {
    CAPTURE(name);
    auto text = serialize_diagram(d);
    auto re = parse_diagram(text);
    CHECK(serialize_diagram(re) == text);
  }
  // parse of serialize equals the original structure
  auto t = parse_diagram(kTheta);
  auto again = parse_diagram(serialize_diagram(t));
  CHECK(serialize_diagram(again) == serialize_diagram(t));
}

TEST_CASE("edges partition") {
  auto t = parse_diagram(kTrefoil);
  auto et = edges(t);
  REQUIRE(et.size() == 1);
  CHECK(et[0].arcs.size() == 3);
  CHECK(et[0].closed);

  auto th = parse_diagram(kTheta);
  auto eth = edges(th);
  CHECK(eth.size() == 3);
  for (const auto& e : eth) {
    CHECK(e.arcs.size() == 1);
    CHECK_FALSE(e.closed);
  }

  auto c = parse_diagram("circle z\n");
  auto ec = edges(c);
  REQUIRE(ec.size() == 1);
  CHECK(ec[0].closed);
}

TEST_CASE("reverse_edge") {
  auto t = parse_diagram(kTrefoil);
  auto es = edges(t);
  REQUIRE(es.size() == 1);
  auto r = reverse_edge(t, es[0]);
  // both strands of each crossing reverse: under slots swap, signs keep
  for (const auto& c : r.crossings) {
    const Crossing* orig = t.find_crossing(c.id);
    CHECK(c.under_in == orig->under_out);
    CHECK(c.under_out == orig->under_in);
    CHECK(c.sign == orig->sign);
  }
  auto rr = reverse_edge(r, edges(r)[0]);
  CHECK(serialize_diagram(rr) == serialize_diagram(t));

  // reversing one leg of the theta flips exactly that leg's flags
  auto th = parse_diagram(kTheta);
  auto eth = edges(th);
  auto rv = reverse_edge(th, eth[0]); // edge {e1}
  int ins = 0;
  for (const auto& s : rv.vertices[0].rot) ins += s.dir == Dir::In;
  CHECK(ins == 2);
  CHECK(validate(rv).empty());
}

TEST_CASE("enumerate_y_orientations") {
  CHECK(enumerate_y_orientations(parse_diagram("circle z\n")).size() == 2);
  CHECK(enumerate_y_orientations(parse_diagram(kTrefoil)).size() == 2);
  CHECK(enumerate_y_orientations(parse_diagram(kTheta)).size() == 6);
  // the identity reorientation comes first
  auto th = parse_diagram(kTheta);
  auto all = enumerate_y_orientations(th);
  CHECK(serialize_diagram(all[0]) == serialize_diagram(th));
  for (const auto& d : all) CHECK(validate(d).empty());
}

TEST_CASE("surface stats") {
  auto circle = surface_stats(parse_diagram("circle z\n"));
  CHECK(circle == SurfaceStats{1, 0, 2, 0});

  auto theta = surface_stats(parse_diagram(kTheta));
  CHECK(theta == SurfaceStats{1, -1, 3, 0});

  auto tref = surface_stats(parse_diagram(kTrefoil));
  CHECK(tref == SurfaceStats{1, 0, 2, 0});

  // kinks do not change the abstract surface
  auto kink = close_tangle(kink_chain(1, true));
  CHECK(surface_stats(kink) == SurfaceStats{1, 0, 2, 0});

  // twisted theta: same graph, non-planar rotation -> punctured torus
  Diagram tw;
  tw.arcs = {"e1", "e2", "e3"};
  tw.vertices.push_back({"v1", {VertexSlot{"e3", Dir::In}, VertexSlot{"e1", Dir::Out},
                                VertexSlot{"e2", Dir::Out}}});
  tw.vertices.push_back({"v2", {VertexSlot{"e3", Dir::Out}, VertexSlot{"e1", Dir::In},
                                VertexSlot{"e2", Dir::In}}});
  REQUIRE(validate(tw).empty());
  CHECK(surface_stats(tw) == SurfaceStats{1, -1, 1, 1});

  // disjoint union: crossings between components do not merge them
  Diagram two;
  two.arcs = {"p", "q"};
  two.circles = {"p", "q"};
  CHECK(surface_stats(two) == SurfaceStats{2, 0, 4, 0});

  // euler = V - E over the corpus
  for (const auto& [name, d] : corpus()) {
    CAPTURE(name);
    auto st = surface_stats(d);
    int open_edges = 0;
    for (const auto& e : edges(d)) open_edges += !e.closed;
    CHECK(st.euler == static_cast<int>(d.vertices.size()) - open_edges);
    CHECK((st.euler + st.boundary) % 2 == 0);
  }
}
