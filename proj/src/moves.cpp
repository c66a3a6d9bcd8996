#include "mgrcol/moves.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

namespace mgrcol {

std::string to_string(MoveKind k) {
  switch (k) {
    case MoveKind::R1: return "R1";
    case MoveKind::R2: return "R2";
    case MoveKind::R3: return "R3";
    case MoveKind::R4: return "R4";
    case MoveKind::R5: return "R5";
    default: return "R6";
  }
}

MoveKind move_kind_from_string(const std::string& s) {
  for (MoveKind k : {MoveKind::R1, MoveKind::R2, MoveKind::R3, MoveKind::R4,
                     MoveKind::R5, MoveKind::R6})
    if (to_string(k) == s) return k;
  throw std::invalid_argument("unknown move kind: " + s);
}

const std::set<MoveKind>& spatial_surface_moves() {
  static const std::set<MoveKind> s{MoveKind::R2, MoveKind::R3, MoveKind::R5,
                                    MoveKind::R6};
  return s;
}

const std::set<MoveKind>& handlebody_moves() {
  static const std::set<MoveKind> s{MoveKind::R1, MoveKind::R2, MoveKind::R3,
                                    MoveKind::R4, MoveKind::R5, MoveKind::R6};
  return s;
}

std::string serialize_site(const MoveSite& s) {
  std::ostringstream os;
  os << to_string(s.kind) << " " << (s.dir == MoveDir::Expand ? "expand" : "reduce")
     << " " << s.variant;
  for (const auto& a : s.anchors) os << " " << a;
  return os.str();
}

MoveSite parse_site(const std::string& line) {
  std::istringstream is(line);
  std::string kind, dir;
  MoveSite s;
  if (!(is >> kind >> dir >> s.variant)) throw std::invalid_argument("bad site: " + line);
  s.kind = move_kind_from_string(kind);
  if (dir == "expand") s.dir = MoveDir::Expand;
  else if (dir == "reduce") s.dir = MoveDir::Reduce;
  else throw std::invalid_argument("bad site direction: " + dir);
  std::string a;
  while (is >> a) s.anchors.push_back(a);
  return s;
}

namespace {

// --- small mutation helpers ------------------------------------------------

std::string fresh_arc_id(const Diagram& d, const std::string& base) {
  for (int i = 1;; ++i) {
    std::string cand = base + "." + std::to_string(i);
    if (!d.has_arc(cand)) return cand;
  }
}

std::string fresh_crossing_id(const Diagram& d, const std::string& base) {
  std::set<std::string> used;
  for (const auto& c : d.crossings) used.insert(c.id);
  for (int i = 1;; ++i) {
    std::string cand = base + ".x" + std::to_string(i);
    if (!used.count(cand)) return cand;
  }
}

// one-shot lookup table for matchers that probe many candidate arcs
std::map<std::string, int> over_ref_counts(const Diagram& d) {
  std::map<std::string, int> m;
  for (const auto& c : d.crossings) ++m[c.over];
  return m;
}

// moves the single head consumption of `from` onto `to`
void reattach_head(Diagram& d, const std::string& from, const std::string& to) {
  for (auto& c : d.crossings)
    if (c.under_in == from) {
      c.under_in = to;
      return;
    }
  for (auto& v : d.vertices)
    for (auto& s : v.rot)
      if (s.arc == from && s.dir == Dir::In) {
        s.arc = to;
        return;
      }
  throw std::logic_error("reattach_head: no consumer of " + from);
}

void retarget_over(Diagram& d, const std::string& from, const std::string& to) {
  for (auto& c : d.crossings)
    if (c.over == from) c.over = to;
}

void erase_crossing(Diagram& d, const std::string& id) {
  std::erase_if(d.crossings, [&](const Crossing& c) { return c.id == id; });
}

void erase_arc(Diagram& d, const std::string& a) {
  d.arcs.erase(a);
  d.circles.erase(a);
}

// pivot slot and product order of a Y-vertex: C(first) C(second) = C(pivot)
struct VertexShape {
  int pivot = -1;
  bool merge = false;
  int first = -1, second = -1; // slot indices
};

VertexShape vertex_shape(const Vertex& v) {
  int ins = 0;
  for (const auto& s : v.rot) ins += s.dir == Dir::In;
  VertexShape sh;
  sh.merge = ins == 2;
  for (int i = 0; i < 3; ++i)
    if ((ins == 2 && v.rot[i].dir == Dir::Out) || (ins == 1 && v.rot[i].dir == Dir::In))
      sh.pivot = i;
  if (sh.pivot < 0) throw std::invalid_argument("vertex " + v.id + " violates Y");
  if (sh.merge) sh.first = (sh.pivot + 2) % 3, sh.second = (sh.pivot + 1) % 3;
  else sh.first = (sh.pivot + 1) % 3, sh.second = (sh.pivot + 2) % 3;
  return sh;
}

Sign sign_from_variant_suffix(const std::string& v) {
  if (v.empty()) throw std::invalid_argument("bad variant");
  return v.back() == '+' ? Sign::Pos : Sign::Neg;
}

// --- R1 ---------------------------------------------------------------------

void r1_sites(const Diagram& d, std::vector<MoveSite>& out) {
  for (const auto& c : d.crossings) {
    if (c.over == c.under_out && c.under_in == c.under_out) {
      out.push_back({MoveKind::R1, MoveDir::Reduce, "kinkO", {c.id}});
      continue;
    }
    // over references are unordered along an arc, so an empty kink loop is
    // a position choice just like the expansion's; no extra condition.
    if (c.over == c.under_out)
      out.push_back({MoveKind::R1, MoveDir::Reduce, "kinkA", {c.id}});
    if (c.over == c.under_in && c.under_in != c.under_out)
      out.push_back({MoveKind::R1, MoveDir::Reduce, "kinkB", {c.id}});
  }
  for (const auto& a : d.arcs) {
    if (d.is_circle(a)) {
      out.push_back({MoveKind::R1, MoveDir::Expand, "O+", {a}});
      out.push_back({MoveKind::R1, MoveDir::Expand, "O-", {a}});
    } else {
      for (const char* v : {"A+", "A-", "B+", "B-"})
        out.push_back({MoveKind::R1, MoveDir::Expand, v, {a}});
    }
  }
}

Diagram r1_apply(const Diagram& d, const MoveSite& s) {
  Diagram out = d;
  if (s.dir == MoveDir::Expand) {
    const std::string& a = s.anchors[0];
    Sign sg = sign_from_variant_suffix(s.variant);
    std::string xid = fresh_crossing_id(out, a);
    if (s.variant[0] == 'O') {
      out.circles.erase(a);
      out.crossings.push_back({xid, a, a, a, sg});
    } else {
      std::string b = fresh_arc_id(out, a);
      reattach_head(out, a, b);
      out.arcs.insert(b);
      if (s.variant[0] == 'B') out.crossings.push_back({xid, a, a, b, sg});
      else out.crossings.push_back({xid, b, a, b, sg});
    }
    return out;
  }
  const Crossing c = *out.find_crossing(s.anchors[0]);
  erase_crossing(out, c.id);
  if (s.variant == "kinkO") {
    out.circles.insert(c.under_in);
  } else if (s.variant == "kinkA") { // loop arc is under_out
    reattach_head(out, c.under_out, c.under_in);
    retarget_over(out, c.under_out, c.under_in);
    erase_arc(out, c.under_out);
  } else { // kinkB: loop is part of under_in; continuation arc under_out merges back
    reattach_head(out, c.under_out, c.under_in);
    retarget_over(out, c.under_out, c.under_in);
    erase_arc(out, c.under_out);
  }
  return out;
}

// --- R2 ---------------------------------------------------------------------

void r2_sites(const Diagram& d, std::vector<MoveSite>& out) {
  auto ors = over_ref_counts(d);
  auto orc = [&](const std::string& a) { auto it = ors.find(a); return it == ors.end() ? 0 : it->second; };
  for (const auto& k1 : d.crossings)
    for (const auto& k2 : d.crossings) {
      if (k1.id == k2.id) continue;
      if (k1.under_out != k2.under_in) continue;
      if (k1.over != k2.over || k1.sign == k2.sign) continue;
      const std::string& q = k1.under_out;
      if (q == k1.over || orc(q) != 0) continue;
      out.push_back({MoveKind::R2, MoveDir::Reduce, "bigon", {k1.id, k2.id}});
    }
  for (const auto& u : d.arcs)
    for (const auto& o : d.arcs)
      for (const char* v : {"+", "-"})
        out.push_back({MoveKind::R2, MoveDir::Expand, v, {u, o}});
}

Diagram r2_apply(const Diagram& d, const MoveSite& s) {
  Diagram out = d;
  if (s.dir == MoveDir::Expand) {
    const std::string &u = s.anchors[0], &o = s.anchors[1];
    Sign sg = sign_from_variant_suffix(s.variant);
    std::string x1 = fresh_crossing_id(out, u);
    std::string over = (u == o) ? u : o;
    std::string u1 = fresh_arc_id(out, u);
    out.arcs.insert(u1);
    if (out.is_circle(u)) {
      out.circles.erase(u);
      out.crossings.push_back({x1, over, u, u1, sg});
      out.crossings.push_back({fresh_crossing_id(out, u1), over, u1, u, flip(sg)});
    } else {
      std::string u2 = fresh_arc_id(out, u);
      out.arcs.insert(u2);
      reattach_head(out, u, u2);
      out.crossings.push_back({x1, over, u, u1, sg});
      out.crossings.push_back({fresh_crossing_id(out, u1), over, u1, u2, flip(sg)});
    }
    return out;
  }
  const Crossing k1 = *out.find_crossing(s.anchors[0]);
  const Crossing k2 = *out.find_crossing(s.anchors[1]);
  const std::string q = k1.under_out, p = k1.under_in, r = k2.under_out;
  erase_crossing(out, k1.id);
  erase_crossing(out, k2.id);
  erase_arc(out, q);
  if (p == r) {
    out.circles.insert(p);
  } else {
    reattach_head(out, r, p);
    retarget_over(out, r, p);
    erase_arc(out, r);
  }
  return out;
}

// --- R3 ---------------------------------------------------------------------

void r3_sites(const Diagram& d, std::vector<MoveSite>& out) {
  auto ors = over_ref_counts(d);
  auto orc = [&](const std::string& a) { auto it = ors.find(a); return it == ors.end() ? 0 : it->second; };
  for (const auto& k1 : d.crossings)
    for (const auto& k2 : d.crossings) {
      if (k1.id == k2.id || k1.under_out != k2.under_in) continue;
      if (k1.sign != k2.sign) continue;
      if (orc(k1.under_out) != 0) continue;
      for (const auto& k3 : d.crossings) {
        if (k3.id == k1.id || k3.id == k2.id || k3.sign != k1.sign) continue;
        const char* sgn = k1.sign == Sign::Pos ? "+" : "-";
        // forward: strand passes under the moving strand m1, then under t
        if (k2.over == k3.over && k1.over == k3.under_in)
          out.push_back({MoveKind::R3, MoveDir::Reduce, std::string("fwd") + sgn,
                         {k1.id, k2.id, k3.id}});
        // back: under t first, then under m2
        if (k1.over == k3.over && k2.over == k3.under_out)
          out.push_back({MoveKind::R3, MoveDir::Reduce, std::string("back") + sgn,
                         {k1.id, k2.id, k3.id}});
      }
    }
}

Diagram r3_apply(const Diagram& d, const MoveSite& s) {
  Diagram out = d;
  const Crossing k3 = *out.find_crossing(s.anchors[2]);
  for (auto& c : out.crossings) {
    if (c.id == s.anchors[0]) c.over = s.variant.starts_with("fwd") ? k3.over : k3.under_in;
    if (c.id == s.anchors[1]) c.over = s.variant.starts_with("fwd") ? k3.under_out : k3.over;
  }
  return out;
}

// --- R4 ---------------------------------------------------------------------

// Twist of two rotation-adjacent same-direction legs next to a vertex.
// Cutting the lower slot's leg gives a negative crossing, the upper a
// positive one; conjugation makes both invisible to MCQ colorings.
void r4_sites(const Diagram& d, std::vector<MoveSite>& out) {
  auto ors = over_ref_counts(d);
  auto orc = [&](const std::string& a) { auto it = ors.find(a); return it == ors.end() ? 0 : it->second; };
  for (const auto& v : d.vertices) {
    for (int i = 0; i < 3; ++i) {
      int j = (i + 1) % 3;
      if (v.rot[i].dir != v.rot[j].dir) continue;
      if (v.rot[i].arc == v.rot[j].arc) continue; // loop legs: skip
      out.push_back({MoveKind::R4, MoveDir::Expand, "lo" + std::to_string(i), {v.id}});
      out.push_back({MoveKind::R4, MoveDir::Expand, "hi" + std::to_string(i), {v.id}});
    }
  }
  for (const auto& v : d.vertices)
    for (int i = 0; i < 3; ++i) {
      int j = (i + 1) % 3;
      if (v.rot[i].dir != v.rot[j].dir) continue;
      bool in = v.rot[i].dir == Dir::In;
      // lo-reduce: slot i = over arc, slot j = cut v-side arc, sign -
      for (const auto& c : d.crossings) {
        const std::string& vside_lo = in ? c.under_out : c.under_in;
        const std::string& far_lo = in ? c.under_in : c.under_out;
        if (c.sign == Sign::Neg && c.over == v.rot[i].arc && vside_lo == v.rot[j].arc &&
            far_lo != v.rot[i].arc && orc(vside_lo) == 0)
          out.push_back(
              {MoveKind::R4, MoveDir::Reduce, "lo" + std::to_string(i), {v.id, c.id}});
        if (c.sign == Sign::Pos && c.over == v.rot[j].arc && vside_lo == v.rot[i].arc &&
            far_lo != v.rot[j].arc && orc(vside_lo) == 0)
          out.push_back(
              {MoveKind::R4, MoveDir::Reduce, "hi" + std::to_string(i), {v.id, c.id}});
      }
    }
}

Diagram r4_apply(const Diagram& d, const MoveSite& s) {
  Diagram out = d;
  Vertex* v = nullptr;
  for (auto& vx : out.vertices)
    if (vx.id == s.anchors[0]) v = &vx;
  int i = s.variant[2] - '0';
  int j = (i + 1) % 3;
  bool lo = s.variant.starts_with("lo");
  if (s.dir == MoveDir::Expand) {
    int cut = lo ? i : j, over = lo ? j : i;
    Sign sg = lo ? Sign::Neg : Sign::Pos;
    const std::string a = v->rot[cut].arc, b = v->rot[over].arc;
    std::string a1 = fresh_arc_id(out, a);
    out.arcs.insert(a1);
    std::string xid = fresh_crossing_id(out, a);
    if (v->rot[cut].dir == Dir::In) out.crossings.push_back({xid, b, a, a1, sg});
    else out.crossings.push_back({xid, b, a1, a, sg});
    v->rot[cut].arc = a1;
    std::swap(v->rot[i], v->rot[j]);
    return out;
  }
  const Crossing c = *out.find_crossing(s.anchors[1]);
  bool in = v->rot[i].dir == Dir::In;
  int cut_slot = lo ? j : i; // slot currently holding the v-side arc
  const std::string vside = in ? c.under_out : c.under_in;
  const std::string far = in ? c.under_in : c.under_out;
  erase_crossing(out, c.id);
  v->rot[cut_slot].arc = far;
  erase_arc(out, vside);
  std::swap(v->rot[i], v->rot[j]);
  return out;
}

// --- R5 ---------------------------------------------------------------------

// F1: a strand under both legs of a vertex equals the strand under the stem
// (MGR condition (i)); F2: the over versions (condition (iii)).
void r5_sites(const Diagram& d, std::vector<MoveSite>& out) {
  auto ors = over_ref_counts(d);
  auto orc = [&](const std::string& a) { auto it = ors.find(a); return it == ors.end() ? 0 : it->second; };
  for (size_t vi = 0; vi < d.vertices.size(); ++vi) {
    const Vertex& v = d.vertices[vi];
    VertexShape sh = vertex_shape(v);
    const std::string& f1 = v.rot[sh.first].arc;
    const std::string& f2 = v.rot[sh.second].arc;
    const std::string& pv = v.rot[sh.pivot].arc;
    std::set<std::string> varcs{f1, f2, pv};
    if (varcs.size() != 3) continue;

    // F1 stem pattern: some crossing passes under the pivot arc
    for (const auto& c : d.crossings) {
      if (varcs.count(c.under_in) || varcs.count(c.under_out)) continue;
      if (c.over == pv)
        out.push_back({MoveKind::R5, MoveDir::Expand,
                       std::string("F1stem") + (c.sign == Sign::Pos ? "+" : "-"),
                       {v.id, c.id}});
    }
    // F1 legs pattern: consecutive crossings under f1 then f2 (or reversed for -)
    for (const auto& k1 : d.crossings)
      for (const auto& k2 : d.crossings) {
        if (k1.id == k2.id || k1.under_out != k2.under_in) continue;
        if (k1.sign != k2.sign) continue;
        if (orc(k1.under_out) != 0) continue;
        if (varcs.count(k1.under_in) || varcs.count(k2.under_out)) continue;
        if (k1.sign == Sign::Pos && k1.over == f1 && k2.over == f2)
          out.push_back({MoveKind::R5, MoveDir::Reduce, "F1legs+", {v.id, k1.id, k2.id}});
        if (k1.sign == Sign::Neg && k1.over == f2 && k2.over == f1)
          out.push_back({MoveKind::R5, MoveDir::Reduce, "F1legs-", {v.id, k1.id, k2.id}});
      }

    // F2 stem pattern: a strand passes over the arc chained to the pivot
    // (for a merge the stem is cut just after v, for a split just before).
    for (const auto& c : d.crossings) {
      if (c.sign != Sign::Pos) continue;
      if (varcs.count(c.over)) continue;
      const std::string& vside = sh.merge ? c.under_in : c.under_out;
      if (vside != pv) continue;
      const std::string& farside = sh.merge ? c.under_out : c.under_in;
      if (varcs.count(farside)) continue;
      out.push_back({MoveKind::R5, MoveDir::Expand, "F2stem", {v.id, c.id}});
    }
    // F2 legs pattern: one strand passes over both leg arcs; the v-side
    // pieces are the vertex's leg slots.
    for (const auto& k1 : d.crossings)
      for (const auto& k2 : d.crossings) {
        if (k1.id == k2.id) continue;
        if (k1.over != k2.over || k1.sign != Sign::Pos || k2.sign != Sign::Pos) continue;
        if (varcs.count(k1.over)) continue;
        const std::string& vs1 = sh.merge ? k1.under_out : k1.under_in;
        const std::string& vs2 = sh.merge ? k2.under_out : k2.under_in;
        const std::string& far1 = sh.merge ? k1.under_in : k1.under_out;
        const std::string& far2 = sh.merge ? k2.under_in : k2.under_out;
        if (vs1 != f1 || vs2 != f2) continue;
        if (varcs.count(far1) || varcs.count(far2)) continue;
        if (orc(vs1) != 0 || orc(vs2) != 0) continue;
        out.push_back({MoveKind::R5, MoveDir::Reduce, "F2legs", {v.id, k1.id, k2.id}});
      }
  }
}

Diagram r5_apply(const Diagram& d, const MoveSite& s) {
  Diagram out = d;
  Vertex* v = nullptr;
  for (auto& vx : out.vertices)
    if (vx.id == s.anchors[0]) v = &vx;
  VertexShape sh = vertex_shape(*v);
  const std::string f1 = v->rot[sh.first].arc;
  const std::string f2 = v->rot[sh.second].arc;
  const std::string pv = v->rot[sh.pivot].arc;

  if (s.variant.starts_with("F1stem")) {
    const Crossing c = *out.find_crossing(s.anchors[1]);
    erase_crossing(out, c.id);
    std::string mid = fresh_arc_id(out, c.under_in);
    out.arcs.insert(mid);
    std::string x1 = fresh_crossing_id(out, c.under_in);
    std::string x2 = fresh_crossing_id(out, mid);
    if (c.sign == Sign::Pos) { // S_{f1 f2} = S_{f2} after S_{f1}
      out.crossings.push_back({x1, f1, c.under_in, mid, Sign::Pos});
      out.crossings.push_back({x2, f2, mid, c.under_out, Sign::Pos});
    } else { // the inverse composes in the reversed order
      out.crossings.push_back({x1, f2, c.under_in, mid, Sign::Neg});
      out.crossings.push_back({x2, f1, mid, c.under_out, Sign::Neg});
    }
    return out;
  }
  if (s.variant.starts_with("F1legs")) {
    const Crossing k1 = *out.find_crossing(s.anchors[1]);
    const Crossing k2 = *out.find_crossing(s.anchors[2]);
    Sign sg = k1.sign;
    erase_crossing(out, k1.id);
    erase_crossing(out, k2.id);
    erase_arc(out, k1.under_out);
    std::string xid = fresh_crossing_id(out, k1.under_in);
    out.crossings.push_back({xid, pv, k1.under_in, k2.under_out, sg});
    return out;
  }
  if (s.variant == "F2stem") {
    const Crossing c = *out.find_crossing(s.anchors[1]);
    const std::string w = c.over;
    const std::string vside = sh.merge ? c.under_in : c.under_out; // == pv
    const std::string farside = sh.merge ? c.under_out : c.under_in;
    erase_crossing(out, c.id);
    if (sh.merge) { // stem cut sat after v; pv absorbs the far piece
      reattach_head(out, farside, vside);
      retarget_over(out, farside, vside);
      erase_arc(out, farside);
    } else { // stem cut sat before v; the far piece absorbs pv
      reattach_head(out, vside, farside);
      retarget_over(out, vside, farside);
      erase_arc(out, vside);
    }
    for (int leg : {sh.first, sh.second}) {
      const std::string cur = v->rot[leg].arc;
      std::string piece = fresh_arc_id(out, cur);
      out.arcs.insert(piece);
      std::string xid = fresh_crossing_id(out, cur);
      if (v->rot[leg].dir == Dir::In) // piece = v-side under_out
        out.crossings.push_back({xid, w, cur, piece, Sign::Pos});
      else
        out.crossings.push_back({xid, w, piece, cur, Sign::Pos});
      v->rot[leg].arc = piece;
    }
    return out;
  }
  // F2legs -> stem
  const Crossing k1 = *out.find_crossing(s.anchors[1]);
  const Crossing k2 = *out.find_crossing(s.anchors[2]);
  const std::string w = k1.over;
  erase_crossing(out, k1.id);
  erase_crossing(out, k2.id);
  for (const Crossing* k : {&k1, &k2}) {
    const std::string vside = sh.merge ? k->under_out : k->under_in;
    const std::string farside = sh.merge ? k->under_in : k->under_out;
    for (auto& vx : out.vertices)
      for (auto& sl : vx.rot)
        if (sl.arc == vside) sl.arc = farside;
    erase_arc(out, vside);
  }
  // cut the stem
  const std::string stem = v->rot[sh.pivot].arc;
  std::string piece = fresh_arc_id(out, stem);
  out.arcs.insert(piece);
  std::string xid = fresh_crossing_id(out, stem);
  if (sh.merge) // stem flows out of v; the v-side piece feeds the crossing
    out.crossings.push_back({xid, w, piece, stem, Sign::Pos});
  else
    out.crossings.push_back({xid, w, stem, piece, Sign::Pos});
  v->rot[sh.pivot].arc = piece;
  return out;
}

// --- R6 ---------------------------------------------------------------------

void r6_sites(const Diagram& d, std::vector<MoveSite>& out) {
  auto ors = over_ref_counts(d);
  for (const auto& e : d.arcs) {
    if (d.is_circle(e) || ors.count(e)) continue;
    int v1 = -1, t1 = -1, v2 = -1, t2 = -1;
    for (size_t vi = 0; vi < d.vertices.size(); ++vi)
      for (int sl = 0; sl < 3; ++sl) {
        const auto& s = d.vertices[vi].rot[sl];
        if (s.arc != e) continue;
        if (s.dir == Dir::Out) v1 = static_cast<int>(vi), t1 = sl;
        else v2 = static_cast<int>(vi), t2 = sl;
      }
    if (v1 < 0 || v2 < 0 || v1 == v2) continue;
    VertexShape s1 = vertex_shape(d.vertices[v1]);
    VertexShape s2 = vertex_shape(d.vertices[v2]);
    if (s1.merge && !s2.merge && s1.pivot == t1 && s2.pivot == t2)
      out.push_back({MoveKind::R6, MoveDir::Reduce, "IH",
                     {e, d.vertices[v1].id, d.vertices[v2].id}});
    if (!s1.merge && s2.merge && !(s1.pivot == t1) && !(s2.pivot == t2)) {
      // HI pattern: rotations (f, A, C) at v1 and (B, f, D) at v2
      const Vertex& a = d.vertices[v1];
      const Vertex& b = d.vertices[v2];
      bool ok1 = a.rot[(t1 + 1) % 3].dir == Dir::In && a.rot[(t1 + 2) % 3].dir == Dir::Out;
      bool ok2 = b.rot[(t2 + 1) % 3].dir == Dir::Out && b.rot[(t2 + 2) % 3].dir == Dir::In;
      if (ok1 && ok2)
        out.push_back({MoveKind::R6, MoveDir::Reduce, "HI", {e, a.id, b.id}});
    }
  }
}

Diagram r6_apply(const Diagram& d, const MoveSite& s) {
  Diagram out = d;
  const std::string& e = s.anchors[0];
  Vertex *v1 = nullptr, *v2 = nullptr;
  for (auto& vx : out.vertices) {
    if (vx.id == s.anchors[1]) v1 = &vx;
    if (vx.id == s.anchors[2]) v2 = &vx;
  }
  int t1 = -1, t2 = -1;
  for (int i = 0; i < 3; ++i) {
    if (v1->rot[i].arc == e && v1->rot[i].dir == Dir::Out) t1 = i;
    if (v2->rot[i].arc == e && v2->rot[i].dir == Dir::In) t2 = i;
  }
  std::string f = fresh_arc_id(out, e);
  out.arcs.insert(f);
  erase_arc(out, e);
  if (s.variant == "IH") {
    VertexSlot A = v1->rot[(t1 + 2) % 3], B = v1->rot[(t1 + 1) % 3];
    VertexSlot C = v2->rot[(t2 + 1) % 3], D = v2->rot[(t2 + 2) % 3];
    v1->rot = {VertexSlot{f, Dir::Out}, A, C};
    v2->rot = {B, VertexSlot{f, Dir::In}, D};
  } else { // HI
    VertexSlot A = v1->rot[(t1 + 1) % 3], C = v1->rot[(t1 + 2) % 3];
    VertexSlot B = v2->rot[(t2 + 2) % 3], D = v2->rot[(t2 + 1) % 3];
    v1->rot = {B, A, VertexSlot{f, Dir::Out}};
    v2->rot = {VertexSlot{f, Dir::In}, C, D};
  }
  return out;
}

} // namespace

std::vector<MoveSite> find_sites(const Diagram& d, MoveKind kind) {
  std::vector<MoveSite> out;
  switch (kind) {
    case MoveKind::R1: r1_sites(d, out); break;
    case MoveKind::R2: r2_sites(d, out); break;
    case MoveKind::R3: r3_sites(d, out); break;
    case MoveKind::R4: r4_sites(d, out); break;
    case MoveKind::R5: r5_sites(d, out); break;
    case MoveKind::R6: r6_sites(d, out); break;
  }
  return out;
}

namespace {

Diagram apply_unchecked(const Diagram& d, const MoveSite& site) {
  Diagram out;
  switch (site.kind) {
    case MoveKind::R1: out = r1_apply(d, site); break;
    case MoveKind::R2: out = r2_apply(d, site); break;
    case MoveKind::R3: out = r3_apply(d, site); break;
    case MoveKind::R4: out = r4_apply(d, site); break;
    case MoveKind::R5: out = r5_apply(d, site); break;
    case MoveKind::R6: out = r6_apply(d, site); break;
  }
  out.sort_parts();
  auto errs = validate(out);
  if (!errs.empty())
    throw std::logic_error("move produced invalid diagram (" + serialize_site(site) +
                           "): " + errs.front());
  return out;
}

} // namespace

Diagram apply_move(const Diagram& d, const MoveSite& site) {
  auto sites = find_sites(d, site.kind);
  if (std::find(sites.begin(), sites.end(), site) == sites.end())
    throw std::invalid_argument("stale move site: " + serialize_site(site));
  return apply_unchecked(d, site);
}

WalkResult random_walk(const Diagram& d, const std::set<MoveKind>& allowed, int steps,
                       unsigned long long seed) {
  std::mt19937_64 rng(seed);
  WalkResult res;
  res.diagram = d;
  for (int i = 0; i < steps; ++i) {
    std::vector<MoveSite> sites;
    for (MoveKind k : allowed) {
      auto s = find_sites(res.diagram, k);
      sites.insert(sites.end(), s.begin(), s.end());
    }
    if (sites.empty()) break;
    std::uniform_int_distribution<size_t> pick(0, sites.size() - 1);
    const MoveSite& chosen = sites[pick(rng)];
    res.diagram = apply_unchecked(res.diagram, chosen); // chosen from fresh sites
    res.log.push_back(chosen);
  }
  return res;
}

} // namespace mgrcol
