#include "mgrcol/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mgrcol {

namespace {

void build_rack_inverse(int n, const std::vector<int>& op, std::vector<int>& inv) {
  inv.assign(static_cast<size_t>(n) * n, -1);
  for (int y = 0; y < n; ++y)
    for (int x = 0; x < n; ++x)
      inv[op[x * n + y] * n + y] = x; // S_y(x)=a  =>  S_y^{-1}(a)=x
}

bool column_is_permutation(int n, const std::vector<int>& op, int y) {
  std::vector<char> seen(n, 0);
  for (int x = 0; x < n; ++x) {
    int v = op[x * n + y];
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

void check_table_shape(int n, const std::vector<int>& op) {
  if (n <= 0) throw std::invalid_argument("algebra size must be positive");
  if (op.size() != static_cast<size_t>(n) * n)
    throw std::invalid_argument("operation table has wrong shape");
  for (int v : op)
    if (v < 0 || v >= n) throw std::invalid_argument("table entry out of range");
}

// Collects violations found by `scan(x, out)` for each first coordinate x,
// merging the per-x buckets in ascending x so the result is deterministic
// for any worker count.
template <typename Scan>
std::vector<AxiomViolation> scan_partitioned(int n, int jobs, Scan scan) {
  std::vector<std::vector<AxiomViolation>> buckets(n);
#ifdef _OPENMP
  if (jobs > 1) {
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
    for (int x = 0; x < n; ++x) scan(x, buckets[x]);
  } else
#endif
  {
    (void)jobs;
    for (int x = 0; x < n; ++x) scan(x, buckets[x]);
  }
  std::vector<AxiomViolation> merged;
  for (int x = 0; x < n && merged.size() < kMaxViolations; ++x)
    for (auto& v : buckets[x]) {
      if (merged.size() >= kMaxViolations) break;
      merged.push_back(std::move(v));
    }
  return merged;
}

} // namespace

FiniteRack rack_from_table(int n, std::vector<int> op) {
  check_table_shape(n, op);
  FiniteRack r;
  r.size = n;
  r.op = std::move(op);
  build_rack_inverse(n, r.op, r.inv);
  return r;
}

FiniteRack dihedral_quandle(int n) {
  if (n < 1) throw std::invalid_argument("dihedral_quandle: n must be >= 1");
  std::vector<int> op(static_cast<size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      op[x * n + y] = ((2 * y - x) % n + n) % n;
  return rack_from_table(n, std::move(op));
}

FiniteRack cyclic_rack(int n) {
  if (n < 1) throw std::invalid_argument("cyclic_rack: n must be >= 1");
  std::vector<int> op(static_cast<size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      op[x * n + y] = (x + 1) % n;
  return rack_from_table(n, std::move(op));
}

FiniteRack product_rack(const FiniteRack& r1, const FiniteRack& r2) {
  int n1 = r1.size, n2 = r2.size, n = n1 * n2;
  std::vector<int> op(static_cast<size_t>(n) * n);
  // (x,x') encodes row-major as x*n2+x'
  for (int x = 0; x < n1; ++x)
    for (int xp = 0; xp < n2; ++xp)
      for (int y = 0; y < n1; ++y)
        for (int yp = 0; yp < n2; ++yp)
          op[(x * n2 + xp) * n + (y * n2 + yp)] = r1.at(x, y) * n2 + r2.at(xp, yp);
  return rack_from_table(n, std::move(op));
}

std::vector<int> cyclic_group_table(int n) {
  if (n < 1) throw std::invalid_argument("cyclic_group_table: n must be >= 1");
  std::vector<int> t(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a * n + b] = (a + b) % n;
  return t;
}

std::vector<int> symmetric3_table() {
  // permutations of {0,1,2} listed lexicographically; product = apply left, then right
  static const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                  {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  auto index_of = [&](const int* p) {
    for (int i = 0; i < 6; ++i)
      if (perms[i][0] == p[0] && perms[i][1] == p[1] && perms[i][2] == p[2]) return i;
    return -1;
  };
  std::vector<int> t(36);
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      int c[3];
      for (int x = 0; x < 3; ++x) c[x] = perms[b][perms[a][x]];
      t[a * 6 + b] = index_of(c);
    }
  return t;
}

std::optional<std::string> group_table_error(const std::vector<int>& table) {
  size_t sz = table.size();
  int n = static_cast<int>(std::lround(std::sqrt(static_cast<double>(sz))));
  if (n <= 0 || static_cast<size_t>(n) * n != sz) return "table is not square";
  for (int v : table)
    if (v < 0 || v >= n) return "entry out of range";
  // identity
  int e = -1;
  for (int c = 0; c < n; ++c) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      ok = table[c * n + x] == x && table[x * n + c] == x;
    if (ok) { e = c; break; }
  }
  if (e < 0) return "no identity element";
  // inverses
  for (int a = 0; a < n; ++a) {
    bool ok = false;
    for (int b = 0; b < n && !ok; ++b) ok = table[a * n + b] == e;
    if (!ok) {
      std::ostringstream os;
      os << "no inverse for " << a;
      return os.str();
    }
  }
  // associativity
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (table[table[a * n + b] * n + c] != table[a * n + table[b * n + c]]) {
          std::ostringstream os;
          os << "associativity fails at (" << a << "," << b << "," << c << ")";
          return os.str();
        }
  return std::nullopt;
}

namespace {

FiniteMGR mgr_from_parts(int n, std::vector<int> op, std::vector<int> group_of,
                         std::vector<int> mul) {
  check_table_shape(n, op);
  FiniteMGR x;
  x.size = n;
  x.op = std::move(op);
  build_rack_inverse(n, x.op, x.inv);
  x.group_of = std::move(group_of);
  x.mul = std::move(mul);
  int ng = 0;
  for (int g : x.group_of) ng = std::max(ng, g + 1);
  x.groups.assign(ng, {});
  for (int el = 0; el < n; ++el) x.groups[x.group_of[el]].push_back(el);
  // identities and inverses from the multiplication table
  x.gid.assign(ng, -1);
  for (int g = 0; g < ng; ++g) {
    for (int c : x.groups[g]) {
      bool ok = true;
      for (int m : x.groups[g])
        if (x.prod(c, m) != m || x.prod(m, c) != m) { ok = false; break; }
      if (ok) { x.gid[g] = c; break; }
    }
    if (x.gid[g] < 0) throw std::invalid_argument("group has no identity");
  }
  x.ginv.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    int g = x.group_of[a];
    for (int b : x.groups[g])
      if (x.prod(a, b) == x.gid[g]) { x.ginv[a] = b; break; }
    if (x.ginv[a] < 0) throw std::invalid_argument("group element has no inverse");
  }
  return x;
}

} // namespace

FiniteMGR conjugation_mcq(const std::vector<int>& table) {
  if (auto err = group_table_error(table))
    throw std::invalid_argument("conjugation_mcq: not a group: " + *err);
  int n = static_cast<int>(std::lround(std::sqrt(static_cast<double>(table.size()))));
  std::vector<int> ginv(n);
  int e = 0;
  for (int c = 0; c < n; ++c) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) ok = table[c * n + x] == x;
    if (ok) { e = c; break; }
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (table[a * n + b] == e) ginv[a] = b;
  std::vector<int> op(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      op[a * n + b] = table[table[ginv[b] * n + a] * n + b]; // b^-1 a b
  return mgr_from_parts(n, std::move(op), std::vector<int>(n, 0), table);
}

long long stabilizer_order(const FiniteRack& r) {
  long long result = 1;
  std::vector<char> seen(r.size);
  for (int y = 0; y < r.size; ++y) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int x = 0; x < r.size; ++x) {
      if (seen[x]) continue;
      long long len = 0;
      int c = x;
      while (!seen[c]) { seen[c] = 1; c = r.at(c, y); ++len; }
      result = std::lcm(result, len);
    }
  }
  return result;
}

FiniteMGR mgr_from_rack(const FiniteRack& r) {
  int n = static_cast<int>(stabilizer_order(r));
  int m = r.size, sz = m * n;
  // S_y^j tables
  std::vector<int> pow(static_cast<size_t>(m) * m * n);
  for (int y = 0; y < m; ++y)
    for (int x = 0; x < m; ++x) pow[(0 * m + x) * m + y] = x;
  for (int j = 1; j < n; ++j)
    for (int y = 0; y < m; ++y)
      for (int x = 0; x < m; ++x)
        pow[(j * m + x) * m + y] = r.at(pow[((j - 1) * m + x) * m + y], y);

  std::vector<int> op(static_cast<size_t>(sz) * sz), group_of(sz),
      mul(static_cast<size_t>(sz) * sz, -1);
  auto enc = [n](int x, int i) { return x * n + i; };
  for (int x = 0; x < m; ++x)
    for (int i = 0; i < n; ++i) {
      group_of[enc(x, i)] = x;
      for (int j = 0; j < n; ++j) mul[enc(x, i) * sz + enc(x, j)] = enc(x, (i + j) % n);
      for (int y = 0; y < m; ++y)
        for (int j = 0; j < n; ++j)
          op[enc(x, i) * sz + enc(y, j)] = enc(pow[(j * m + x) * m + y], i);
    }
  return mgr_from_parts(sz, std::move(op), std::move(group_of), std::move(mul));
}

AxiomReport check_rack_axioms(const FiniteRack& r, int jobs) {
  const int n = r.size;
  auto scan = [&](int first, std::vector<AxiomViolation>& out) {
    // bijectivity scanned on x==first to keep witnesses lexicographic per column
    if (!column_is_permutation(n, r.op, first))
      out.push_back({"bijectivity", {first}});
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (r.at(r.at(first, y), z) != r.at(r.at(first, z), r.at(y, z)))
          out.push_back({"self-distributivity", {first, y, z}});
  };
  AxiomReport rep;
  rep.violations = scan_partitioned(n, jobs, scan);
  rep.passed = rep.violations.empty();
  return rep;
}

AxiomReport check_quandle(const FiniteRack& r, int jobs) {
  AxiomReport rep = check_rack_axioms(r, jobs);
  std::vector<AxiomViolation> idem;
  for (int x = 0; x < r.size && idem.size() < kMaxViolations; ++x)
    if (r.at(x, x) != x) idem.push_back({"idempotence", {x}});
  rep.violations.insert(rep.violations.end(), idem.begin(), idem.end());
  if (rep.violations.size() > kMaxViolations) rep.violations.resize(kMaxViolations);
  rep.passed = rep.violations.empty();
  return rep;
}

AxiomReport check_mgr_axioms(const FiniteMGR& x, int jobs) {
  const int n = x.size;
  auto scan = [&](int el, std::vector<AxiomViolation>& out) {
    // (i): el <| (ab) = (el <| a) <| b within each group, and el <| e = el
    for (int g = 0; g < x.num_groups(); ++g) {
      if (x.at(el, x.gid[g]) != el) out.push_back({"mgr-i-identity", {el, g}});
      for (int a : x.groups[g])
        for (int b : x.groups[g])
          if (x.at(el, x.prod(a, b)) != x.at(x.at(el, a), b))
            out.push_back({"mgr-i-product", {el, a, b}});
    }
    // (ii): self-distributivity
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (x.at(x.at(el, y), z) != x.at(x.at(el, z), x.at(y, z)))
          out.push_back({"mgr-ii", {el, y, z}});
    // (iii): one mu per (el, lambda); products carried to it
    for (int g = 0; g < x.num_groups(); ++g) {
      int mu = x.group_of[x.at(x.groups[g][0], el)];
      for (int a : x.groups[g])
        if (x.group_of[x.at(a, el)] != mu) out.push_back({"mgr-iii-image", {el, g, a}});
      for (int a : x.groups[g])
        for (int b : x.groups[g]) {
          int lhs = x.at(x.prod(a, b), el);
          int rhs = x.prod(x.at(a, el), x.at(b, el));
          if (rhs < 0 || lhs != rhs) out.push_back({"mgr-iii-product", {el, a, b}});
        }
    }
    // rack bijectivity, scanned once per column index el
    if (!column_is_permutation(n, x.op, el)) out.push_back({"bijectivity", {el}});
  };
  AxiomReport rep;
  rep.violations = scan_partitioned(n, jobs, scan);
  rep.passed = rep.violations.empty();
  return rep;
}

// --- .alg text format ---------------------------------------------------

namespace {

std::vector<std::string> significant_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream probe(line);
    std::string tok;
    if (probe >> tok) lines.push_back(line);
  }
  return lines;
}

std::vector<int> parse_row(const std::string& line, int expected, const char* what) {
  std::istringstream is(line);
  std::vector<int> row;
  int v;
  while (is >> v) row.push_back(v);
  if (static_cast<int>(row.size()) != expected)
    throw std::invalid_argument(std::string("bad ") + what + " row: " + line);
  return row;
}

} // namespace

Algebra parse_algebra(const std::string& text) {
  auto lines = significant_lines(text);
  if (lines.empty()) throw std::invalid_argument("empty algebra file");
  std::istringstream head(lines[0]);
  std::string kind;
  head >> kind;
  Algebra out;
  if (kind == "rack" || kind == "group") {
    int n = 0;
    if (!(head >> n) || n <= 0) throw std::invalid_argument("bad header: " + lines[0]);
    if (static_cast<int>(lines.size()) != 1 + n)
      throw std::invalid_argument("wrong number of rows");
    std::vector<int> op;
    for (int i = 0; i < n; ++i) {
      auto row = parse_row(lines[1 + i], n, kind.c_str());
      op.insert(op.end(), row.begin(), row.end());
    }
    if (kind == "rack")
      out.rack = rack_from_table(n, std::move(op));
    else {
      for (int v : op)
        if (v < 0 || v >= n) throw std::invalid_argument("group entry out of range");
      out.group = std::move(op);
    }
    return out;
  }
  if (kind != "mgr") throw std::invalid_argument("unknown algebra kind: " + kind);
  int n = 0, ng = 0;
  if (!(head >> n >> ng) || n <= 0 || ng <= 0)
    throw std::invalid_argument("bad header: " + lines[0]);
  size_t at = 1;
  std::vector<int> op;
  for (int i = 0; i < n; ++i, ++at) {
    if (at >= lines.size()) throw std::invalid_argument("truncated rack table");
    auto row = parse_row(lines[at], n, "rack");
    op.insert(op.end(), row.begin(), row.end());
  }
  std::vector<int> group_of(n, -1), mul(static_cast<size_t>(n) * n, -1);
  for (int g = 0; g < ng; ++g) {
    if (at >= lines.size()) throw std::invalid_argument("missing group section");
    std::istringstream gh(lines[at++]);
    std::string tok;
    int idx;
    if (!(gh >> tok >> idx) || tok != "group" || idx != g)
      throw std::invalid_argument("expected 'group " + std::to_string(g) + "' line");
    std::vector<int> members;
    int m;
    while (gh >> m) members.push_back(m);
    if (members.empty()) throw std::invalid_argument("empty group");
    for (int el : members) {
      if (el < 0 || el >= n || group_of[el] != -1)
        throw std::invalid_argument("bad group member");
      group_of[el] = g;
    }
    for (size_t i = 0; i < members.size(); ++i, ++at) {
      if (at >= lines.size()) throw std::invalid_argument("truncated group table");
      auto row = parse_row(lines[at], static_cast<int>(members.size()), "group");
      for (size_t j = 0; j < members.size(); ++j) {
        if (row[j] < 0 || row[j] >= n)
          throw std::invalid_argument("group product out of range");
        mul[members[i] * n + members[j]] = row[j];
      }
    }
  }
  for (int el = 0; el < n; ++el)
    if (group_of[el] < 0) throw std::invalid_argument("element missing from groups");
  if (at != lines.size()) throw std::invalid_argument("trailing content in algebra file");
  out.mgr = mgr_from_parts(n, std::move(op), std::move(group_of), std::move(mul));
  return out;
}

std::string serialize_algebra(const FiniteRack& r) {
  std::ostringstream os;
  os << "rack " << r.size << "\n";
  for (int x = 0; x < r.size; ++x) {
    for (int y = 0; y < r.size; ++y) os << (y ? " " : "") << r.at(x, y);
    os << "\n";
  }
  return os.str();
}

std::string serialize_algebra(const FiniteMGR& x) {
  std::ostringstream os;
  os << "mgr " << x.size << " " << x.num_groups() << "\n";
  for (int a = 0; a < x.size; ++a) {
    for (int b = 0; b < x.size; ++b) os << (b ? " " : "") << x.at(a, b);
    os << "\n";
  }
  for (int g = 0; g < x.num_groups(); ++g) {
    os << "group " << g;
    for (int m : x.groups[g]) os << " " << m;
    os << "\n";
    for (int a : x.groups[g]) {
      bool first = true;
      for (int b : x.groups[g]) {
        os << (first ? "" : " ") << x.prod(a, b);
        first = false;
      }
      os << "\n";
    }
  }
  return os.str();
}

} // namespace mgrcol
