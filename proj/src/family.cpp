#include "mgrcol/family.hpp"

#include <stdexcept>

namespace mgrcol {

namespace {

// Appends one kink to the strand ending in `cur`; returns the new end arc.
// A positive kink passes over itself first (over = entering arc); the
// negative kink is its mirror image.
std::string append_kink(Diagram& d, const std::string& cur, bool positive,
                        const std::string& prefix, int& ctr) {
  std::string nxt = prefix + "a" + std::to_string(++ctr);
  std::string xid = prefix + "k" + std::to_string(ctr);
  d.arcs.insert(nxt);
  if (positive) d.crossings.push_back({xid, cur, cur, nxt, Sign::Pos});
  else d.crossings.push_back({xid, nxt, cur, nxt, Sign::Neg});
  return nxt;
}

std::string append_kinks(Diagram& d, std::string cur, int count, bool positive,
                         const std::string& prefix, int& ctr) {
  for (int i = 0; i < count; ++i) cur = append_kink(d, cur, positive, prefix, ctr);
  return cur;
}

// The three-crossing clasp region: the strand doubles back and crosses
// itself three times with uniform sign, a trefoil pattern when active.
std::string append_braid(Diagram& d, const std::string& cur, const std::string& prefix,
                         int& ctr) {
  std::string q1 = prefix + "a" + std::to_string(++ctr);
  std::string q2 = prefix + "a" + std::to_string(++ctr);
  std::string q3 = prefix + "a" + std::to_string(++ctr);
  d.arcs.insert(q1);
  d.arcs.insert(q2);
  d.arcs.insert(q3);
  d.crossings.push_back({prefix + "b1", q2, cur, q1, Sign::Pos});
  d.crossings.push_back({prefix + "b2", q1, q2, q3, Sign::Pos});
  d.crossings.push_back({prefix + "b3", q3, q1, q2, Sign::Pos});
  return q3;
}

// Instantiates the tangle with `entry` renamed to `cur`; returns the exit arc.
std::string splice_tangle(Diagram& d, const std::string& cur, const Tangle& t,
                          const std::string& prefix) {
  auto mapped = [&](const std::string& a) {
    return a == t.entry ? cur : prefix + "_" + a;
  };
  for (const auto& a : t.arcs)
    if (a != t.entry) d.arcs.insert(mapped(a));
  for (const auto& c : t.crossings)
    d.crossings.push_back({prefix + "_" + c.id, mapped(c.over), mapped(c.under_in),
                           mapped(c.under_out), c.sign});
  return mapped(t.exit);
}

Diagram make_family(int n, const Tangle& base, bool prime) {
  Diagram d;
  for (const char* a : {"ba", "bb", "n1", "n2", "st1", "st2", "nk1", "nk2", "lt",
                        "lb", "tl", "r1a0", "r2a0", "bc0"})
    d.arcs.insert(a);

  // outer circuit crosses over the stem; row2's first arc crosses over the neck
  d.crossings.push_back({"xstem", "bb", "st1", "st2", Sign::Pos});
  d.crossings.push_back({"xneck", "r2a0", "nk1", "nk2", Sign::Neg});

  int c1 = 0, c2 = 0;
  std::string r1end, r2end;
  int box = 2 * (n >= 0 ? n : -n);
  bool box_pos = n >= 0;
  if (!prime) {
    r1end = append_kinks(d, "r1a0", 4, true, "r1", c1);
    r1end = append_kinks(d, r1end, box, box_pos, "r1", c1);
    r2end = append_braid(d, "r2a0", "r2", c2);
    r2end = append_kinks(d, r2end, 1, true, "r2", c2);
  } else {
    r1end = append_braid(d, "r1a0", "r1", c1);
    r1end = append_kinks(d, r1end, 1, true, "r1", c1);
    r1end = append_kinks(d, r1end, box, box_pos, "r1", c1);
    r2end = append_kinks(d, "r2a0", 4, true, "r2", c2);
  }
  std::string bc_end = splice_tangle(d, "bc0", base, "bc");

  auto vx = [&](const char* id, VertexSlot s0, VertexSlot s1, VertexSlot s2) {
    d.vertices.push_back({id, {s0, s1, s2}});
  };
  vx("vh", {"ba", Dir::Out}, {"tl", Dir::In}, {bc_end, Dir::In});
  vx("vc", {"bb", Dir::Out}, {"ba", Dir::In}, {"n1", Dir::Out});
  vx("vd", {"bb", Dir::In}, {"n2", Dir::In}, {"bc0", Dir::Out});
  vx("ve", {"st1", Dir::Out}, {"n1", Dir::In}, {"n2", Dir::Out});
  vx("va", {"lb", Dir::In}, {"nk1", Dir::Out}, {"st2", Dir::In});
  vx("vf", {"lt", Dir::Out}, {"r1a0", Dir::Out}, {"nk2", Dir::In});
  vx("vb", {"lt", Dir::In}, {"r2a0", Dir::Out}, {"lb", Dir::Out});
  vx("vg", {r2end, Dir::In}, {r1end, Dir::In}, {"tl", Dir::Out});

  d.sort_parts();
  auto errs = validate(d);
  if (!errs.empty()) throw std::logic_error("family diagram invalid: " + errs.front());
  return d;
}

} // namespace

Tangle trivial_base() {
  Tangle t;
  t.arcs = {"b0"};
  t.entry = t.exit = "b0";
  return t;
}

Tangle kink_chain(int count, bool positive) {
  if (count < 0) throw std::invalid_argument("kink count must be nonnegative");
  Tangle t;
  t.arcs = {"b0"};
  t.entry = t.exit = "b0";
  for (int i = 1; i <= count; ++i) {
    std::string nxt = "b" + std::to_string(i);
    std::string xid = "bk" + std::to_string(i);
    if (positive) t.crossings.push_back({xid, t.exit, t.exit, nxt, Sign::Pos});
    else t.crossings.push_back({xid, nxt, t.exit, nxt, Sign::Neg});
    t.arcs.insert(nxt);
    t.exit = nxt;
  }
  return t;
}

Tangle trefoil_tangle() {
  Tangle t;
  t.arcs = {"b0", "b1", "b2", "b3"};
  t.entry = "b0";
  t.exit = "b3";
  t.crossings.push_back({"bx1", "b2", "b0", "b1", Sign::Pos});
  t.crossings.push_back({"bx2", "b3", "b1", "b2", Sign::Pos});
  t.crossings.push_back({"bx3", "b1", "b2", "b3", Sign::Pos});
  return t;
}

Diagram close_tangle(const Tangle& t) {
  Diagram d;
  d.arcs = t.arcs;
  d.crossings = t.crossings;
  if (t.entry == t.exit) {
    d.circles.insert(t.entry);
  } else {
    // merge the exit arc back into the entry arc
    d.arcs.erase(t.exit);
    for (auto& c : d.crossings) {
      if (c.over == t.exit) c.over = t.entry;
      if (c.under_in == t.exit) c.under_in = t.entry;
      if (c.under_out == t.exit) c.under_out = t.entry;
    }
  }
  d.sort_parts();
  auto errs = validate(d);
  if (!errs.empty()) throw std::logic_error("closed tangle invalid: " + errs.front());
  return d;
}

Diagram make_dn(int n, const Tangle& base) { return make_family(n, base, false); }
Diagram make_dn_prime(int n, const Tangle& base) { return make_family(n, base, true); }

std::vector<std::pair<std::string, Diagram>> corpus() {
  std::vector<std::pair<std::string, Diagram>> out;
  {
    Diagram d;
    d.arcs.insert("c0");
    d.circles.insert("c0");
    out.emplace_back("circle", d);
  }
  out.emplace_back("kink_pos", close_tangle(kink_chain(1, true)));
  out.emplace_back("kink_neg", close_tangle(kink_chain(1, false)));
  {
    Diagram d;
    for (const char* a : {"a", "b", "c"}) d.arcs.insert(a);
    d.crossings.push_back({"x1", "c", "a", "b", Sign::Pos});
    d.crossings.push_back({"x2", "a", "b", "c", Sign::Pos});
    d.crossings.push_back({"x3", "b", "c", "a", Sign::Pos});
    d.sort_parts();
    out.emplace_back("trefoil", d);
  }
  {
    Diagram d;
    for (const char* a : {"e1", "e2", "e3"}) d.arcs.insert(a);
    d.vertices.push_back({"v1", {VertexSlot{"e3", Dir::In}, VertexSlot{"e1", Dir::Out},
                                 VertexSlot{"e2", Dir::Out}}});
    d.vertices.push_back({"v2", {VertexSlot{"e3", Dir::Out}, VertexSlot{"e2", Dir::In},
                                 VertexSlot{"e1", Dir::In}}});
    out.emplace_back("theta", d);
  }
  out.emplace_back("dn_p1", make_dn(1, trivial_base()));
  out.emplace_back("dnp_p1", make_dn_prime(1, trivial_base()));
  out.emplace_back("dn_m1", make_dn(-1, trivial_base()));
  out.emplace_back("dnp_m1", make_dn_prime(-1, trivial_base()));
  for (auto& [name, d] : out) {
    auto errs = validate(d);
    if (!errs.empty()) throw std::logic_error("corpus " + name + ": " + errs.front());
  }
  return out;
}

} // namespace mgrcol
