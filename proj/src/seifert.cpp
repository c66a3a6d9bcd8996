#include "mgrcol/seifert.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mgrcol {

namespace {

BigInt big_gcd(BigInt a, BigInt b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    BigInt t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Bareiss fraction-free determinant of the k x k submatrix given by
// row/column index lists.
BigInt sub_determinant(const IntMatrix& m, const std::vector<int>& rows,
                       const std::vector<int>& cols) {
  int k = static_cast<int>(rows.size());
  if (k == 0) return 1;
  std::vector<BigInt> a(static_cast<size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) a[i * k + j] = m.at(rows[i], cols[j]);
  BigInt prev = 1;
  int sign = 1;
  for (int p = 0; p < k - 1; ++p) {
    if (a[p * k + p] == 0) {
      int q = p + 1;
      while (q < k && a[q * k + p] == 0) ++q;
      if (q == k) return 0;
      for (int j = p; j < k; ++j) std::swap(a[p * k + j], a[q * k + j]);
      sign = -sign;
    }
    for (int i = p + 1; i < k; ++i)
      for (int j = p + 1; j < k; ++j)
        a[i * k + j] = (a[i * k + j] * a[p * k + p] - a[i * k + p] * a[p * k + j]) / prev;
    prev = a[p * k + p];
  }
  return sign > 0 ? a[(k - 1) * k + (k - 1)] : -a[(k - 1) * k + (k - 1)];
}

// All k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<int>> k_subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(k);
  for (int i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == n - k + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

} // namespace

IntMatrix identity_matrix(int n) {
  IntMatrix m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

BigInt determinant(const IntMatrix& m) {
  std::vector<int> idx(m.n);
  for (int i = 0; i < m.n; ++i) idx[i] = i;
  return sub_determinant(m, idx, idx);
}

BigInt minor_gcd(const IntMatrix& m, int k, int jobs) {
  if (k < 1 || k > m.n) throw std::invalid_argument("minor order out of range");
  auto rows = k_subsets(m.n, k);
  const int nr = static_cast<int>(rows.size());
  std::vector<BigInt> partial(nr);
#ifdef _OPENMP
  if (jobs > 1) {
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
    for (int i = 0; i < nr; ++i) {
      BigInt g = 0;
      for (const auto& cols : k_subsets(m.n, k)) {
        g = big_gcd(g, sub_determinant(m, rows[i], cols));
        if (g == 1) break;
      }
      partial[i] = g;
    }
  } else
#endif
  {
    (void)jobs;
    auto cols = k_subsets(m.n, k);
    for (int i = 0; i < nr; ++i) {
      BigInt g = 0;
      for (const auto& c : cols) {
        g = big_gcd(g, sub_determinant(m, rows[i], c));
        if (g == 1) break;
      }
      partial[i] = g;
    }
  }
  BigInt g = 0;
  for (const auto& p : partial) {
    g = big_gcd(g, p);
    if (g == 1) break;
  }
  return g;
}

GcdProfile gcd_profile(const IntMatrix& m, int jobs) {
  GcdProfile prof;
  bool dead = false; // once all k-minors vanish, larger ones do too
  for (int k = 1; k <= m.n; ++k) {
    if (dead) {
      prof.g.emplace_back(0);
      continue;
    }
    BigInt g = minor_gcd(m, k, jobs);
    if (g == 0) dead = true;
    prof.g.push_back(std::move(g));
  }
  return prof;
}

IntMatrix build_vk(const IntMatrix& v, long long k) {
  IntMatrix m(4 + v.n);
  m.at(1, 2) = 1;
  m.at(2, 0) = -1;
  m.at(2, 2) = 4;
  m.at(3, 0) = -1;
  m.at(3, 3) = 4 + 2 * k;
  for (int i = 0; i < v.n; ++i)
    for (int j = 0; j < v.n; ++j) m.at(4 + i, 4 + j) = v.at(i, j);
  return m;
}

bool profiles_distinguish(const IntMatrix& m1, const IntMatrix& m2, int jobs) {
  if (m1.n != m2.n) throw std::invalid_argument("profiles need equal sizes");
  return !(gcd_profile(m1, jobs) == gcd_profile(m2, jobs));
}

IntMatrix congruent_transform(const IntMatrix& m, const IntMatrix& p) {
  if (p.n != m.n) throw std::invalid_argument("transform size mismatch");
  BigInt d = determinant(p);
  if (d != 1 && d != -1) throw std::invalid_argument("transform is not unimodular");
  IntMatrix mp(m.n), out(m.n);
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j) {
      BigInt s = 0;
      for (int k = 0; k < m.n; ++k) s += m.at(i, k) * p.at(k, j);
      mp.at(i, j) = std::move(s);
    }
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j) {
      BigInt s = 0;
      for (int k = 0; k < m.n; ++k) s += p.at(k, i) * mp.at(k, j);
      out.at(i, j) = std::move(s);
    }
  return out;
}

IntMatrix random_unimodular(int n, int steps, unsigned long long seed) {
  if (n < 1) throw std::invalid_argument("size must be positive");
  std::mt19937_64 rng(seed);
  IntMatrix p = identity_matrix(n);
  std::uniform_int_distribution<int> kind(0, 2), pick(0, n - 1), coeff(-3, 3);
  for (int s = 0; s < steps; ++s) {
    int i = pick(rng), j = pick(rng);
    switch (kind(rng)) {
      case 0: { // column addition: col_j += c * col_i
        if (n == 1) break;
        while (j == i) j = pick(rng);
        int c = coeff(rng);
        while (c == 0) c = coeff(rng);
        for (int r = 0; r < n; ++r) p.at(r, j) += c * p.at(r, i);
        break;
      }
      case 1: // column swap
        if (i != j)
          for (int r = 0; r < n; ++r) std::swap(p.at(r, i), p.at(r, j));
        break;
      default: // sign flip
        for (int r = 0; r < n; ++r) p.at(r, i) = -p.at(r, i);
    }
  }
  return p;
}

std::optional<IntMatrix> congruence_witness_search(const IntMatrix& m1,
                                                   const IntMatrix& m2,
                                                   int entry_bound) {
  if (m1.n != m2.n) throw std::invalid_argument("sizes differ");
  if (m1.n > 3 || entry_bound > 2)
    throw std::invalid_argument("witness search is test-scale only (n<=3, bound<=2)");
  const int n = m1.n, base = 2 * entry_bound + 1;
  long long total = 1;
  for (int i = 0; i < n * n; ++i) total *= base;
  for (long long code = 0; code < total; ++code) {
    IntMatrix p(n);
    long long c = code;
    for (int i = 0; i < n * n; ++i) {
      p.entries[i] = static_cast<int>(c % base) - entry_bound;
      c /= base;
    }
    BigInt d = determinant(p);
    if (d != 1 && d != -1) continue;
    if (congruent_transform(m1, p) == m2) return p;
  }
  return std::nullopt;
}

IntMatrix parse_matrix(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(is, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream probe(line);
    std::string tok;
    if (probe >> tok) lines.push_back(line);
  }
  if (lines.empty()) throw std::invalid_argument("empty matrix file");
  int n = 0;
  {
    std::istringstream h(lines[0]);
    if (!(h >> n) || n < 0) throw std::invalid_argument("bad matrix header");
    std::string extra;
    if (h >> extra) throw std::invalid_argument("bad matrix header");
  }
  if (static_cast<int>(lines.size()) != 1 + n)
    throw std::invalid_argument("wrong number of matrix rows");
  IntMatrix m(n);
  for (int i = 0; i < n; ++i) {
    std::istringstream r(lines[1 + i]);
    for (int j = 0; j < n; ++j) {
      std::string cell;
      if (!(r >> cell)) throw std::invalid_argument("short matrix row");
      m.at(i, j) = BigInt(cell);
    }
    std::string extra;
    if (r >> extra) throw std::invalid_argument("long matrix row");
  }
  return m;
}

std::string serialize_matrix(const IntMatrix& m) {
  std::ostringstream os;
  os << m.n << "\n";
  for (int i = 0; i < m.n; ++i) {
    for (int j = 0; j < m.n; ++j) os << (j ? " " : "") << m.at(i, j);
    os << "\n";
  }
  return os.str();
}

} // namespace mgrcol
