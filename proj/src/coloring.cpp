#include "mgrcol/coloring.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <deque>
#include <map>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mgrcol {

namespace {

// crossing relation normalized to op(src, over) = dst
struct ActConstraint { int src, dst, over; };
// vertex relation f1 * f2 = out, all three in one group
struct ProductConstraint { int f1, f2, out; };

struct Compiled {
  std::vector<std::string> arc_ids; // sorted
  int n_arcs = 0;
  std::vector<ActConstraint> acts;
  std::vector<ProductConstraint> products;
  std::vector<std::vector<int>> cons_of_arc; // constraint indices per arc
  std::vector<char> constrained;
  const ColoringAlgebra* alg = nullptr;

  int n_cons() const { return static_cast<int>(acts.size() + products.size()); }
};

Compiled compile(const Diagram& d, const ColoringAlgebra& x) {
  Compiled cp;
  cp.alg = &x;
  cp.arc_ids.assign(d.arcs.begin(), d.arcs.end());
  cp.n_arcs = static_cast<int>(cp.arc_ids.size());
  std::map<std::string, int> index;
  for (int i = 0; i < cp.n_arcs; ++i) index[cp.arc_ids[i]] = i;

  for (const auto& c : d.crossings) {
    ActConstraint a{};
    a.over = index.at(c.over);
    if (c.sign == Sign::Pos) a.src = index.at(c.under_in), a.dst = index.at(c.under_out);
    else a.src = index.at(c.under_out), a.dst = index.at(c.under_in);
    cp.acts.push_back(a);
  }
  if (!d.vertices.empty() && !x.has_groups())
    throw std::invalid_argument("plain rack cannot color a diagram with vertices");
  for (const auto& v : d.vertices) {
    int pivot = -1, ins = 0;
    for (const auto& s : v.rot) ins += s.dir == Dir::In;
    for (int i = 0; i < 3; ++i)
      if ((ins == 2 && v.rot[i].dir == Dir::Out) || (ins == 1 && v.rot[i].dir == Dir::In))
        pivot = i;
    if (pivot < 0) throw std::invalid_argument("vertex " + v.id + " violates Y-condition");
    int k = index.at(v.rot[pivot].arc);
    int succ = index.at(v.rot[(pivot + 1) % 3].arc);
    int pred = index.at(v.rot[(pivot + 2) % 3].arc);
    // merge: C(pred) C(succ) = C(out); split: C(succ) C(pred) = C(in)
    if (ins == 2) cp.products.push_back({pred, succ, k});
    else cp.products.push_back({succ, pred, k});
  }

  cp.cons_of_arc.assign(cp.n_arcs, {});
  cp.constrained.assign(cp.n_arcs, 0);
  auto reg = [&](int ci, std::initializer_list<int> arcs) {
    for (int a : arcs) {
      auto& v = cp.cons_of_arc[a];
      if (v.empty() || v.back() != ci) v.push_back(ci);
      cp.constrained[a] = 1;
    }
  };
  for (size_t i = 0; i < cp.acts.size(); ++i)
    reg(static_cast<int>(i), {cp.acts[i].src, cp.acts[i].dst, cp.acts[i].over});
  for (size_t i = 0; i < cp.products.size(); ++i)
    reg(static_cast<int>(cp.acts.size() + i),
        {cp.products[i].f1, cp.products[i].f2, cp.products[i].out});
  return cp;
}

// --- domain solver (exact counting by propagation search) -------------------

using Mask = std::uint64_t;

inline int lowest(Mask m) { return std::countr_zero(m); }

struct DomainCtx {
  const Compiled* cp;
  Mask full;
  std::vector<Mask> group_mask; // MGR only
};

DomainCtx make_ctx(const Compiled& cp) {
  const auto& x = *cp.alg;
  if (x.size > 64)
    throw std::invalid_argument("coloring solver supports at most 64 elements");
  DomainCtx ctx;
  ctx.cp = &cp;
  ctx.full = x.size == 64 ? ~Mask(0) : ((Mask(1) << x.size) - 1);
  if (x.mgr) {
    ctx.group_mask.assign(x.mgr->num_groups(), 0);
    for (int e = 0; e < x.size; ++e) ctx.group_mask[x.mgr->group_of[e]] |= Mask(1) << e;
  }
  return ctx;
}

// Narrows the three domains of one constraint to their supported values.
// Returns false when a domain empties; shrunk arcs are reported in
// `touched`.
bool revise(const DomainCtx& ctx, int ci, std::vector<Mask>& dom,
            std::vector<int>& touched) {
  const Compiled& cp = *ctx.cp;
  const auto& x = *cp.alg;
  touched.clear();
  if (ci < static_cast<int>(cp.acts.size())) {
    const auto& a = cp.acts[ci];
    Mask ds = dom[a.src], dd = dom[a.dst], dn = dom[a.over];
    Mask ns = 0, nd = 0, no = 0;
    for (Mask ys = dn; ys;) {
      int y = lowest(ys);
      ys &= ys - 1;
      Mask img = 0;
      for (Mask xs = ds; xs;) {
        int v = lowest(xs);
        xs &= xs - 1;
        img |= Mask(1) << x.act(v, y);
      }
      Mask hit = img & dd;
      if (!hit) continue;
      no |= Mask(1) << y;
      nd |= hit;
      for (Mask zs = hit; zs;) {
        int z = lowest(zs);
        zs &= zs - 1;
        ns |= Mask(1) << x.act_inv(z, y);
      }
    }
    if (ns != ds) { dom[a.src] = ns; touched.push_back(a.src); }
    if (nd != dd) { dom[a.dst] = nd; touched.push_back(a.dst); }
    if (no != dn) { dom[a.over] = no; touched.push_back(a.over); }
    return ns && nd && no;
  }
  const auto& p = cp.products[ci - cp.acts.size()];
  const FiniteMGR* m = x.mgr;
  Mask da = dom[p.f1], db = dom[p.f2], dc = dom[p.out];
  Mask na = 0, nb = 0, nc = 0;
  for (Mask as = da; as;) {
    int i = lowest(as);
    as &= as - 1;
    Mask gm = ctx.group_mask[m->group_of[i]];
    if (!(dc & gm)) continue;
    for (Mask bs = db & gm; bs;) {
      int j = lowest(bs);
      bs &= bs - 1;
      int k = m->prod(i, j);
      if (dc & (Mask(1) << k)) {
        na |= Mask(1) << i;
        nb |= Mask(1) << j;
        nc |= Mask(1) << k;
      }
    }
  }
  if (na != da) { dom[p.f1] = na; touched.push_back(p.f1); }
  if (nb != db) { dom[p.f2] = nb; touched.push_back(p.f2); }
  if (nc != dc) { dom[p.out] = nc; touched.push_back(p.out); }
  return na && nb && nc;
}

bool dom_propagate(const DomainCtx& ctx, std::vector<Mask>& dom,
                   const std::vector<int>* seed_arcs) {
  const Compiled& cp = *ctx.cp;
  std::vector<char> queued(cp.n_cons(), 0);
  std::deque<int> queue;
  auto push_arc = [&](int arc) {
    for (int ci : cp.cons_of_arc[arc])
      if (!queued[ci]) {
        queued[ci] = 1;
        queue.push_back(ci);
      }
  };
  if (seed_arcs) {
    for (int a : *seed_arcs) push_arc(a);
  } else {
    for (int ci = 0; ci < cp.n_cons(); ++ci) {
      queued[ci] = 1;
      queue.push_back(ci);
    }
  }
  std::vector<int> touched;
  while (!queue.empty()) {
    int ci = queue.front();
    queue.pop_front();
    queued[ci] = 0;
    if (!revise(ctx, ci, dom, touched)) return false;
    for (int arc : touched) push_arc(arc);
  }
  return true;
}

// lowest-id arc among the smallest non-singleton domains
int dom_branch_arc(const DomainCtx& ctx, const std::vector<Mask>& dom) {
  const Compiled& cp = *ctx.cp;
  int best = -1, best_size = 1 << 30;
  for (int i = 0; i < cp.n_arcs; ++i) {
    if (!cp.constrained[i]) continue;
    int sz = std::popcount(dom[i]);
    if (sz > 1 && sz < best_size) {
      best = i;
      best_size = sz;
    }
  }
  return best;
}

BigInt dom_search(const DomainCtx& ctx, std::vector<Mask> dom) {
  int arc = dom_branch_arc(ctx, dom);
  if (arc < 0) return 1; // every constrained domain is a singleton
  BigInt total = 0;
  std::vector<int> seed{arc};
  for (Mask vs = dom[arc]; vs;) {
    int v = lowest(vs);
    vs &= vs - 1;
    std::vector<Mask> next = dom;
    next[arc] = Mask(1) << v;
    if (dom_propagate(ctx, next, &seed)) total += dom_search(ctx, std::move(next));
  }
  return total;
}

BigInt pow_bigint(int base, int exp) {
  BigInt r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

// --- scalar assignment checking ---------------------------------------------

bool assignment_consistent(const Compiled& cp, const std::vector<int>& col) {
  const auto& x = *cp.alg;
  for (const auto& a : cp.acts)
    if (x.act(col[a.src], col[a.over]) != col[a.dst]) return false;
  for (const auto& p : cp.products) {
    const FiniteMGR* m = x.mgr;
    if (m->group_of[col[p.f1]] != m->group_of[col[p.f2]] ||
        m->group_of[col[p.f1]] != m->group_of[col[p.out]])
      return false;
    if (m->prod(col[p.f1], col[p.f2]) != col[p.out]) return false;
  }
  return true;
}

} // namespace

bool is_coloring(const Diagram& d, const ColoringAlgebra& x, const Coloring& c) {
  Compiled cp = compile(d, x);
  std::vector<int> col(cp.n_arcs, -1);
  for (int i = 0; i < cp.n_arcs; ++i) {
    auto it = c.assignment.find(cp.arc_ids[i]);
    if (it == c.assignment.end())
      throw std::invalid_argument("assignment missing arc " + cp.arc_ids[i]);
    if (it->second < 0 || it->second >= x.size)
      throw std::invalid_argument("element out of range for arc " + cp.arc_ids[i]);
    col[i] = it->second;
  }
  return assignment_consistent(cp, col);
}

BigInt count_colorings(const Diagram& d, const ColoringAlgebra& x, int jobs) {
  Compiled cp = compile(d, x);
  if (cp.n_arcs == 0) return 1;
  DomainCtx ctx = make_ctx(cp);
  int free_arcs = 0;
  for (int i = 0; i < cp.n_arcs; ++i) free_arcs += !cp.constrained[i];
  std::vector<Mask> dom(cp.n_arcs, ctx.full);
  if (!dom_propagate(ctx, dom, nullptr)) return 0;

  BigInt core = 0;
#ifdef _OPENMP
  if (jobs > 1) {
    int arc = dom_branch_arc(ctx, dom);
    if (arc < 0) {
      core = 1;
    } else {
      std::vector<int> values;
      for (Mask vs = dom[arc]; vs;) {
        values.push_back(lowest(vs));
        vs &= vs - 1;
      }
      std::vector<BigInt> parts(values.size());
      std::vector<int> seed{arc};
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
      for (int i = 0; i < static_cast<int>(values.size()); ++i) {
        std::vector<Mask> next = dom;
        next[arc] = Mask(1) << values[i];
        parts[i] = dom_propagate(ctx, next, &seed) ? dom_search(ctx, std::move(next))
                                                   : BigInt(0);
      }
      for (const auto& p : parts) core += p;
    }
  } else
#endif
  {
    (void)jobs;
    core = dom_search(ctx, std::move(dom));
  }
  return core * pow_bigint(x.size, free_arcs);
}

EnumerationResult enumerate_colorings(const Diagram& d, const ColoringAlgebra& x,
                                      long long cap) {
  if (cap <= 0) throw std::invalid_argument("cap must be positive");
  Compiled cp = compile(d, x);
  DomainCtx ctx = make_ctx(cp);
  EnumerationResult res;

  // Branching strictly by ascending arc id keeps the output lexicographic
  // in (arc id, element index); domains still prune between guesses.
  struct Rec {
    const Compiled& cp;
    const DomainCtx& ctx;
    EnumerationResult& res;
    long long cap;
    bool go(std::vector<Mask> dom, int arc) { // false once truncated
      while (arc < cp.n_arcs && std::popcount(dom[arc]) == 1) ++arc;
      if (arc == cp.n_arcs) {
        if (static_cast<long long>(res.colorings.size()) == cap) {
          res.truncated = true;
          return false;
        }
        Coloring c;
        for (int i = 0; i < cp.n_arcs; ++i) c.assignment[cp.arc_ids[i]] = lowest(dom[i]);
        res.colorings.push_back(std::move(c));
        return true;
      }
      std::vector<int> seed{arc};
      for (Mask vs = dom[arc]; vs;) {
        int v = lowest(vs);
        vs &= vs - 1;
        std::vector<Mask> next = dom;
        next[arc] = Mask(1) << v;
        if (!dom_propagate(ctx, next, &seed)) continue;
        if (!go(std::move(next), arc + 1)) return false;
      }
      return true;
    }
  } rec{cp, ctx, res, cap};
  std::vector<Mask> dom(cp.n_arcs, ctx.full);
  if (dom_propagate(ctx, dom, nullptr)) rec.go(std::move(dom), 0);
  return res;
}

BigInt count_colorings_bruteforce(const Diagram& d, const ColoringAlgebra& x,
                                  double state_bound) {
  Compiled cp = compile(d, x);
  if (cp.n_arcs * std::log(static_cast<double>(x.size)) > std::log(state_bound))
    throw std::invalid_argument("state space exceeds brute-force bound");
  std::vector<int> col(cp.n_arcs, 0);
  BigInt count = 0;
  while (true) {
    if (assignment_consistent(cp, col)) ++count;
    int i = cp.n_arcs - 1;
    while (i >= 0 && col[i] == x.size - 1) col[i--] = 0;
    if (i < 0) break;
    ++col[i];
  }
  return count;
}

} // namespace mgrcol
