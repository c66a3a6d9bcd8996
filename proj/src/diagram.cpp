#include "mgrcol/diagram.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace mgrcol {

const Crossing* Diagram::find_crossing(const std::string& id) const {
  for (const auto& c : crossings)
    if (c.id == id) return &c;
  return nullptr;
}

const Vertex* Diagram::find_vertex(const std::string& id) const {
  for (const auto& v : vertices)
    if (v.id == id) return &v;
  return nullptr;
}

void Diagram::sort_parts() {
  std::sort(crossings.begin(), crossings.end(),
            [](const Crossing& a, const Crossing& b) { return a.id < b.id; });
  std::sort(vertices.begin(), vertices.end(),
            [](const Vertex& a, const Vertex& b) { return a.id < b.id; });
}

bool DiagramEdge::contains(const std::string& a) const {
  return std::binary_search(arcs.begin(), arcs.end(), a);
}

// --- parsing --------------------------------------------------------------

namespace {

[[noreturn]] void parse_fail(int line_no, const std::string& msg) {
  throw std::invalid_argument("line " + std::to_string(line_no) + ": " + msg);
}

// splits "key=value" tokens
std::map<std::string, std::string> kv_args(std::istringstream& is, int line_no) {
  std::map<std::string, std::string> out;
  std::string tok;
  while (is >> tok) {
    auto eq = tok.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 >= tok.size())
      parse_fail(line_no, "expected key=value, got '" + tok + "'");
    if (!out.emplace(tok.substr(0, eq), tok.substr(eq + 1)).second)
      parse_fail(line_no, "duplicate key in '" + tok + "'");
  }
  return out;
}

std::string need(const std::map<std::string, std::string>& kv, const char* key,
                 int line_no) {
  auto it = kv.find(key);
  if (it == kv.end()) parse_fail(line_no, std::string("missing ") + key + "=");
  return it->second;
}

bool valid_token(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '.')
      return false;
  return true;
}

} // namespace

Diagram parse_diagram(const std::string& text) {
  Diagram d;
  struct PendingCrossing { Crossing c; int line; };
  struct PendingVertex { std::string id, kind, left, right, stem; int line; };
  std::vector<PendingCrossing> pcs;
  std::vector<PendingVertex> pvs;
  std::set<std::string> used_ids;

  std::istringstream is(text);
  std::string line;
  int line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string kind;
    if (!(ls >> kind)) continue;
    if (kind == "arc" || kind == "circle") {
      std::string id;
      if (!(ls >> id) || !valid_token(id)) parse_fail(line_no, "bad arc id");
      std::string extra;
      if (ls >> extra) parse_fail(line_no, "trailing content");
      if (!d.arcs.insert(id).second) parse_fail(line_no, "duplicate arc '" + id + "'");
      if (kind == "circle") d.circles.insert(id);
    } else if (kind == "crossing") {
      Crossing c;
      if (!(ls >> c.id) || !valid_token(c.id)) parse_fail(line_no, "bad crossing id");
      if (!used_ids.insert("x:" + c.id).second)
        parse_fail(line_no, "duplicate crossing '" + c.id + "'");
      auto kv = kv_args(ls, line_no);
      c.over = need(kv, "over", line_no);
      c.under_in = need(kv, "under_in", line_no);
      c.under_out = need(kv, "under_out", line_no);
      std::string s = need(kv, "sign", line_no);
      if (s == "+") c.sign = Sign::Pos;
      else if (s == "-") c.sign = Sign::Neg;
      else parse_fail(line_no, "sign must be + or -");
      pcs.push_back({c, line_no});
    } else if (kind == "vertex") {
      PendingVertex v;
      if (!(ls >> v.id) || !valid_token(v.id)) parse_fail(line_no, "bad vertex id");
      if (!used_ids.insert("v:" + v.id).second)
        parse_fail(line_no, "duplicate vertex '" + v.id + "'");
      auto kv = kv_args(ls, line_no);
      v.kind = need(kv, "kind", line_no);
      if (v.kind != "merge" && v.kind != "split")
        parse_fail(line_no, "kind must be merge or split");
      v.left = need(kv, "left", line_no);
      v.right = need(kv, "right", line_no);
      v.stem = need(kv, "stem", line_no);
      v.line = line_no;
      pvs.push_back(v);
    } else {
      parse_fail(line_no, "unknown declaration '" + kind + "'");
    }
  }

  auto check_arc = [&](const std::string& a, int ln) {
    if (!d.has_arc(a)) parse_fail(ln, "unknown arc '" + a + "'");
  };
  for (auto& [c, ln] : pcs) {
    check_arc(c.over, ln);
    check_arc(c.under_in, ln);
    check_arc(c.under_out, ln);
    d.crossings.push_back(c);
  }
  for (auto& v : pvs) {
    check_arc(v.left, v.line);
    check_arc(v.right, v.line);
    check_arc(v.stem, v.line);
    Vertex vx;
    vx.id = v.id;
    // merge: two ins feeding the stem, drawn stem downward -> ccw (left, stem, right)
    // split: stem feeding two outs, drawn stem upward  -> ccw (stem, left, right)
    if (v.kind == "merge")
      vx.rot = {VertexSlot{v.left, Dir::In}, VertexSlot{v.stem, Dir::Out},
                VertexSlot{v.right, Dir::In}};
    else
      vx.rot = {VertexSlot{v.stem, Dir::In}, VertexSlot{v.left, Dir::Out},
                VertexSlot{v.right, Dir::Out}};
    d.vertices.push_back(vx);
  }
  d.sort_parts();

  auto errs = validate(d);
  if (!errs.empty()) throw std::invalid_argument("invalid diagram: " + errs.front());
  return d;
}

std::string serialize_diagram(const Diagram& d) {
  std::ostringstream os;
  for (const auto& a : d.arcs)
    os << (d.is_circle(a) ? "circle " : "arc ") << a << "\n";
  auto cs = d.crossings;
  std::sort(cs.begin(), cs.end(),
            [](const Crossing& a, const Crossing& b) { return a.id < b.id; });
  for (const auto& c : cs)
    os << "crossing " << c.id << " over=" << c.over << " under_in=" << c.under_in
       << " under_out=" << c.under_out << " sign=" << (c.sign == Sign::Pos ? '+' : '-')
       << "\n";
  auto vs = d.vertices;
  std::sort(vs.begin(), vs.end(),
            [](const Vertex& a, const Vertex& b) { return a.id < b.id; });
  for (const auto& v : vs) {
    int ins = 0;
    for (const auto& s : v.rot) ins += s.dir == Dir::In;
    int pivot = -1;
    for (int i = 0; i < 3; ++i)
      if ((ins == 2 && v.rot[i].dir == Dir::Out) || (ins == 1 && v.rot[i].dir == Dir::In))
        pivot = i;
    if (pivot < 0) { // non-Y vertex; serialize merge-style from slot 0
      os << "vertex " << v.id << " kind=merge left=" << v.rot[2].arc
         << " right=" << v.rot[1].arc << " stem=" << v.rot[0].arc << "\n";
      continue;
    }
    const auto& stem = v.rot[pivot];
    const auto& prev = v.rot[(pivot + 2) % 3];
    const auto& next = v.rot[(pivot + 1) % 3];
    if (ins == 2) // merge: rot = (left, stem, right)
      os << "vertex " << v.id << " kind=merge left=" << prev.arc
         << " right=" << next.arc << " stem=" << stem.arc << "\n";
    else // split: rot = (stem, left, right)
      os << "vertex " << v.id << " kind=split left=" << next.arc
         << " right=" << prev.arc << " stem=" << stem.arc << "\n";
  }
  return os.str();
}

// --- validation -----------------------------------------------------------

std::vector<std::string> validate(const Diagram& d) {
  std::vector<std::string> errs;
  auto known = [&](const std::string& a) { return d.has_arc(a); };

  std::map<std::string, int> heads, tails;
  for (const auto& a : d.arcs) heads[a] = tails[a] = 0;

  std::set<std::string> xids, vids;
  for (const auto& c : d.crossings) {
    if (!xids.insert(c.id).second) errs.push_back("duplicate crossing id " + c.id);
    for (const auto* a : {&c.over, &c.under_in, &c.under_out})
      if (!known(*a)) errs.push_back("crossing " + c.id + ": unknown arc " + *a);
    if (known(c.under_in)) ++heads[c.under_in];
    if (known(c.under_out)) ++tails[c.under_out];
  }
  for (const auto& v : d.vertices) {
    if (!vids.insert(v.id).second) errs.push_back("duplicate vertex id " + v.id);
    int ins = 0;
    for (const auto& s : v.rot) {
      if (!known(s.arc)) {
        errs.push_back("vertex " + v.id + ": unknown arc " + s.arc);
        continue;
      }
      if (s.dir == Dir::In) ++heads[s.arc], ++ins;
      else ++tails[s.arc];
    }
    if (ins == 3) errs.push_back("vertex " + v.id + " is a sink");
    if (ins == 0) errs.push_back("vertex " + v.id + " is a source");
  }
  for (const auto& a : d.arcs) {
    int want = d.is_circle(a) ? 0 : 1;
    if (heads[a] != want)
      errs.push_back("arc " + a + ": consumed " + std::to_string(heads[a]) +
                     " times as head, expected " + std::to_string(want));
    if (tails[a] != want)
      errs.push_back("arc " + a + ": consumed " + std::to_string(tails[a]) +
                     " times as tail, expected " + std::to_string(want));
  }
  return errs;
}

// --- edges ----------------------------------------------------------------

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

} // namespace

std::vector<DiagramEdge> edges(const Diagram& d) {
  std::vector<std::string> ids(d.arcs.begin(), d.arcs.end());
  std::map<std::string, int> index;
  for (size_t i = 0; i < ids.size(); ++i) index[ids[i]] = static_cast<int>(i);

  UnionFind uf(ids.size());
  for (const auto& c : d.crossings) uf.unite(index.at(c.under_in), index.at(c.under_out));

  std::map<int, DiagramEdge> classes;
  for (size_t i = 0; i < ids.size(); ++i) classes[uf.find(static_cast<int>(i))].arcs.push_back(ids[i]);

  for (auto& [root, e] : classes) {
    std::sort(e.arcs.begin(), e.arcs.end());
    e.closed = true;
    for (int vi = 0; vi < static_cast<int>(d.vertices.size()); ++vi)
      for (int s = 0; s < 3; ++s) {
        const auto& slot = d.vertices[vi].rot[s];
        if (!e.contains(slot.arc)) continue;
        e.closed = false;
        if (slot.dir == Dir::Out) e.start_vertex = vi, e.start_slot = s;
        else e.end_vertex = vi, e.end_slot = s;
      }
  }
  std::vector<DiagramEdge> out;
  for (auto& [root, e] : classes) out.push_back(std::move(e));
  std::sort(out.begin(), out.end(),
            [](const DiagramEdge& a, const DiagramEdge& b) { return a.arcs[0] < b.arcs[0]; });
  return out;
}

Diagram reverse_edge(const Diagram& d, const DiagramEdge& e) {
  Diagram out = d;
  for (auto& c : out.crossings) {
    bool under = e.contains(c.under_in); // under_in, under_out are on one edge
    bool over = e.contains(c.over);
    if (under) std::swap(c.under_in, c.under_out);
    if (under != over) c.sign = flip(c.sign);
  }
  for (auto& v : out.vertices)
    for (auto& s : v.rot)
      if (e.contains(s.arc)) s.dir = flip(s.dir);
  return out;
}

std::vector<Diagram> enumerate_y_orientations(const Diagram& d) {
  auto es = edges(d);
  if (es.size() > 20) throw std::invalid_argument("too many edges to enumerate");
  std::vector<Diagram> out;
  for (unsigned long mask = 0; mask < (1ul << es.size()); ++mask) {
    Diagram cur = d;
    for (size_t i = 0; i < es.size(); ++i)
      if (mask & (1ul << i)) cur = reverse_edge(cur, es[i]);
    if (validate(cur).empty()) out.push_back(std::move(cur));
  }
  return out;
}

// --- surface statistics ---------------------------------------------------

SurfaceStats surface_stats(const Diagram& d) {
  auto es = edges(d);
  const int nv = static_cast<int>(d.vertices.size());

  // components over vertices plus one node per closed edge
  int nclosed = 0;
  for (const auto& e : es) nclosed += e.closed;
  UnionFind comp(nv + nclosed);
  int closed_at = nv;
  std::vector<int> closed_node;
  for (const auto& e : es) {
    if (e.closed) closed_node.push_back(closed_at++);
    else {
      closed_node.push_back(-1);
      comp.unite(e.start_vertex, e.end_vertex);
    }
  }

  SurfaceStats st;
  std::set<int> roots;
  for (int i = 0; i < nv + nclosed; ++i) roots.insert(comp.find(i));
  st.components = static_cast<int>(roots.size());

  int open_edges = static_cast<int>(es.size()) - nclosed;
  st.euler = nv - open_edges; // closed components contribute 0 to both

  // boundary components: orbits of sigma∘alpha on vertex slots
  std::vector<int> alpha(3 * nv, -1);
  for (size_t i = 0; i < es.size(); ++i) {
    if (es[i].closed) continue;
    int h1 = 3 * es[i].start_vertex + es[i].start_slot;
    int h2 = 3 * es[i].end_vertex + es[i].end_slot;
    alpha[h1] = h2;
    alpha[h2] = h1;
  }
  auto sigma = [](int h) { return (h / 3) * 3 + (h % 3 + 1) % 3; };
  std::vector<char> seen(3 * nv, 0);
  std::map<int, int> comp_boundary; // component root -> boundary count
  for (int h = 0; h < 3 * nv; ++h) {
    if (seen[h]) continue;
    int c = h;
    while (!seen[c]) {
      seen[c] = 1;
      c = sigma(alpha[c]);
    }
    ++comp_boundary[comp.find(h / 3)];
  }
  st.boundary = 0;
  for (auto& [root, b] : comp_boundary) st.boundary += b;
  st.boundary += 2 * nclosed; // each circle component bounds an annulus

  // genus per component via chi = 2 - 2g - b, summed
  std::map<int, int> comp_chi;
  for (int vi = 0; vi < nv; ++vi) ++comp_chi[comp.find(vi)];
  for (size_t i = 0; i < es.size(); ++i)
    if (!es[i].closed) --comp_chi[comp.find(es[i].start_vertex)];
  st.genus = 0;
  for (auto& [root, chi] : comp_chi) {
    int b = comp_boundary.count(root) ? comp_boundary[root] : 0;
    int twice_g = 2 - chi - b;
    st.genus += twice_g / 2; // closed surfaces excluded by construction
  }
  return st;
}

} // namespace mgrcol
