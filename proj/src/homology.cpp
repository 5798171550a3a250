#include "randcx/homology.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <type_traits>

#include <boost/integer/common_factor.hpp>

#include "randcx/errors.hpp"
#include "randcx/two_skeleton.hpp"

namespace randcx {

SparseMatrix boundary_matrix(const Complex& c, int i) {
  if (i < 1) throw InputError("boundary_matrix: i must be at least 1");
  SparseMatrix m;
  const auto& lower = c.simplices(i - 1);
  const auto& upper = c.simplices(i);
  m.rows = static_cast<std::int64_t>(lower.size());
  m.cols = static_cast<std::int64_t>(upper.size());
  m.columns.resize(upper.size());
  for (std::size_t col = 0; col < upper.size(); ++col) {
    const Simplex& s = upper[col];
    Simplex face(s.size() - 1);
    for (std::size_t drop = 0; drop < s.size(); ++drop) {
      std::size_t k = 0;
      for (std::size_t j = 0; j < s.size(); ++j)
        if (j != drop) face[k++] = s[j];
      const auto row = c.index_of(face);
      m.columns[col].emplace_back(static_cast<std::int32_t>(*row), drop % 2 == 0 ? 1 : -1);
    }
    std::sort(m.columns[col].begin(), m.columns[col].end());
  }
  return m;
}

std::vector<std::vector<BigInt>> to_dense(const SparseMatrix& m) {
  std::vector<std::vector<BigInt>> d(static_cast<std::size_t>(m.rows),
                                     std::vector<BigInt>(static_cast<std::size_t>(m.cols)));
  for (std::size_t col = 0; col < m.columns.size(); ++col)
    for (const auto& [row, v] : m.columns[col]) d[static_cast<std::size_t>(row)][col] = v;
  return d;
}

SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols != b.rows) throw InputError("multiply: shape mismatch");
  SparseMatrix out;
  out.rows = a.rows;
  out.cols = b.cols;
  out.columns.resize(static_cast<std::size_t>(b.cols));
  for (std::size_t col = 0; col < b.columns.size(); ++col) {
    std::vector<std::int64_t> acc(static_cast<std::size_t>(a.rows), 0);
    for (const auto& [k, bv] : b.columns[col])
      for (const auto& [row, av] : a.columns[static_cast<std::size_t>(k)]) acc[static_cast<std::size_t>(row)] += av * bv;
    for (std::size_t row = 0; row < acc.size(); ++row)
      if (acc[row] != 0) out.columns[col].emplace_back(static_cast<std::int32_t>(row), acc[row]);
  }
  return out;
}

namespace {

struct Overflow {};

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
  return r;
}
std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
  return r;
}
BigInt checked_mul(const BigInt& a, const BigInt& b) { return a * b; }
BigInt checked_sub(const BigInt& a, const BigInt& b) { return a - b; }

bool is_unit(std::int64_t v) { return v == 1 || v == -1; }
bool is_unit(const BigInt& v) { return v == 1 || v == -1; }

// Dense Smith form of a small residual; returns the absolute diagonal.
std::vector<BigInt> dense_smith_diagonal(std::vector<std::vector<BigInt>> a) {
  std::vector<BigInt> diag;
  const std::size_t m = a.size();
  const std::size_t k = m ? a[0].size() : 0;
  auto abs_less = [](const BigInt& x, const BigInt& y) { return abs(x) < abs(y); };
  for (std::size_t t = 0; t < std::min(m, k); ++t) {
    std::size_t bi = m, bj = k;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < k; ++j)
        if (a[i][j] != 0 && (bi == m || abs_less(a[i][j], a[bi][bj]))) {
          bi = i;
          bj = j;
        }
    if (bi == m) break;
    std::swap(a[t], a[bi]);
    for (auto& row : a) std::swap(row[t], row[bj]);
    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (a[i][t] == 0) continue;
        const BigInt q = a[i][t] / a[t][t];
        for (std::size_t j = t; j < k; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < k; ++j) {
        if (a[t][j] == 0) continue;
        const BigInt q = a[t][j] / a[t][t];
        for (std::size_t i = t; i < m; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) clean = false;
      }
      if (clean) break;
      // move the smallest remainder in row/column t onto the diagonal
      std::size_t si = t, sj = t;
      for (std::size_t i = t + 1; i < m; ++i)
        if (a[i][t] != 0 && abs_less(a[i][t], a[si][sj])) si = i, sj = t;
      for (std::size_t j = t + 1; j < k; ++j)
        if (a[t][j] != 0 && abs_less(a[t][j], a[si][sj])) si = t, sj = j;
      std::swap(a[t], a[si]);
      for (auto& row : a) std::swap(row[t], row[sj]);
    }
    diag.push_back(abs(a[t][t]));
  }
  return diag;
}

std::vector<BigInt> divisibility_chain(std::vector<BigInt> d) {
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      const BigInt g = boost::integer::gcd(d[i], d[j]);
      const BigInt l = d[i] / g * d[j];
      d[i] = g;
      d[j] = l;
    }
  return d;
}

template <class T>
class SparseEliminator {
 public:
  using Entry = std::pair<std::int32_t, T>;

  explicit SparseEliminator(const SparseMatrix& m)
      : cols_(m.columns.size()),
        row_cols_(static_cast<std::size_t>(m.rows)),
        row_count_(static_cast<std::size_t>(m.rows), 0),
        col_dead_(m.columns.size(), 0) {
    for (std::size_t c = 0; c < m.columns.size(); ++c) {
      for (const auto& [row, v] : m.columns[c]) {
        cols_[c].emplace_back(row, T(v));
        row_cols_[static_cast<std::size_t>(row)].push_back(static_cast<std::int32_t>(c));
        ++row_count_[static_cast<std::size_t>(row)];
      }
    }
  }

  SmithResult run() {
    using Key = std::pair<std::size_t, std::int32_t>;
    std::priority_queue<Key, std::vector<Key>, std::greater<>> queue;
    for (std::size_t c = 0; c < cols_.size(); ++c)
      if (!cols_[c].empty()) queue.emplace(cols_[c].size(), static_cast<std::int32_t>(c));
    std::int64_t rank = 0;
    while (!queue.empty()) {
      const auto [len, cid] = queue.top();
      queue.pop();
      const auto c = static_cast<std::size_t>(cid);
      if (col_dead_[c] || cols_[c].size() != len) continue;
      std::size_t best = cols_[c].size();
      for (std::size_t k = 0; k < cols_[c].size(); ++k) {
        if (!is_unit(cols_[c][k].second)) continue;
        if (best == cols_[c].size() ||
            row_count_[static_cast<std::size_t>(cols_[c][k].first)] <
                row_count_[static_cast<std::size_t>(cols_[c][best].first)])
          best = k;
      }
      if (best == cols_[c].size()) continue;
      pivot(c, best, queue);
      ++rank;
    }

    std::vector<std::size_t> live_cols;
    std::vector<std::int32_t> live_rows;
    for (std::size_t c = 0; c < cols_.size(); ++c) {
      if (col_dead_[c] || cols_[c].empty()) continue;
      live_cols.push_back(c);
      for (const auto& e : cols_[c]) live_rows.push_back(e.first);
    }
    std::sort(live_rows.begin(), live_rows.end());
    live_rows.erase(std::unique(live_rows.begin(), live_rows.end()), live_rows.end());
    SmithResult result;
    result.rank = rank;
    if (live_cols.empty()) return result;
    std::vector<std::vector<BigInt>> dense(live_rows.size(), std::vector<BigInt>(live_cols.size()));
    for (std::size_t j = 0; j < live_cols.size(); ++j)
      for (const auto& [row, v] : cols_[live_cols[j]]) {
        const auto i = static_cast<std::size_t>(
            std::lower_bound(live_rows.begin(), live_rows.end(), row) - live_rows.begin());
        dense[i][j] = BigInt(v);
      }
    for (const BigInt& d : divisibility_chain(dense_smith_diagonal(std::move(dense)))) {
      ++result.rank;
      if (d != 1) result.torsion.push_back(d);
    }
    return result;
  }

 private:
  template <class Queue>
  void pivot(std::size_t c, std::size_t k, Queue& queue) {
    const std::int32_t r = cols_[c][k].first;
    const T sign = cols_[c][k].second;  // +-1, its own inverse
    const auto& pc = cols_[c];
    auto& users = row_cols_[static_cast<std::size_t>(r)];
    for (std::size_t u = 0; u < users.size(); ++u) {
      const auto c2 = static_cast<std::size_t>(users[u]);
      if (c2 == c || col_dead_[c2]) continue;
      auto& col = cols_[c2];
      auto it = std::lower_bound(col.begin(), col.end(), r,
                                 [](const Entry& e, std::int32_t row) { return e.first < row; });
      if (it == col.end() || it->first != r) continue;
      const T factor = checked_mul(it->second, sign);
      std::vector<Entry> merged;
      merged.reserve(col.size() + pc.size());
      std::size_t i = 0, j = 0;
      while (i < col.size() || j < pc.size()) {
        if (j == pc.size() || (i < col.size() && col[i].first < pc[j].first)) {
          merged.push_back(std::move(col[i++]));
        } else if (i == col.size() || pc[j].first < col[i].first) {
          const auto row = static_cast<std::size_t>(pc[j].first);
          merged.emplace_back(pc[j].first, checked_sub(T(0), checked_mul(factor, pc[j].second)));
          ++row_count_[row];
          row_cols_[row].push_back(static_cast<std::int32_t>(c2));
          ++j;
        } else {
          T v = checked_sub(col[i].second, checked_mul(factor, pc[j].second));
          if (v != 0)
            merged.emplace_back(col[i].first, std::move(v));
          else
            --row_count_[static_cast<std::size_t>(col[i].first)];
          ++i;
          ++j;
        }
      }
      col = std::move(merged);
      if (!col.empty()) queue.emplace(col.size(), static_cast<std::int32_t>(c2));
    }
    for (const auto& e : pc) --row_count_[static_cast<std::size_t>(e.first)];
    col_dead_[c] = 1;
    cols_[c].clear();
    users.clear();
    users.shrink_to_fit();
  }

  std::vector<std::vector<Entry>> cols_;
  std::vector<std::vector<std::int32_t>> row_cols_;
  std::vector<std::int64_t> row_count_;
  std::vector<char> col_dead_;
};

}  // namespace

SmithResult smith_normal_form(const SparseMatrix& m) {
  try {
    return SparseEliminator<std::int64_t>(m).run();
  } catch (const Overflow&) {
    return SparseEliminator<BigInt>(m).run();
  }
}

std::int64_t rank_f2(const SparseMatrix& m) {
  const std::size_t words = (static_cast<std::size_t>(m.rows) + 63) / 64;
  std::vector<std::vector<std::uint64_t>> basis(static_cast<std::size_t>(m.rows));
  std::int64_t rank = 0;
  std::vector<std::uint64_t> v(words);
  for (const auto& column : m.columns) {
    std::fill(v.begin(), v.end(), 0);
    for (const auto& [row, x] : column)
      if (x % 2 != 0) v[static_cast<std::size_t>(row) / 64] ^= std::uint64_t{1} << (row % 64);
    for (std::size_t w = 0; w < words;) {
      if (v[w] == 0) {
        ++w;
        continue;
      }
      const std::size_t lead = w * 64 + static_cast<std::size_t>(__builtin_ctzll(v[w]));
      if (basis[lead].empty()) {
        basis[lead] = v;
        ++rank;
        break;
      }
      for (std::size_t k = w; k < words; ++k) v[k] ^= basis[lead][k];
    }
  }
  return rank;
}

std::int64_t rank_bareiss(const SparseMatrix& m) {
  auto a = to_dense(m);
  const std::size_t rows = a.size();
  const std::size_t cols = static_cast<std::size_t>(m.cols);
  BigInt prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return static_cast<std::int64_t>(r);
}

HomologySummary homology(const Complex& c) {
  if (c.dimension() > 2) throw InputError("homology: complex has dimension > 2");
  HomologySummary h;
  if (c.empty()) return h;
  TwoSkeleton skel(c);
  const auto f0 = static_cast<std::int64_t>(skel.num_vertices());
  const auto f1 = static_cast<std::int64_t>(skel.num_edges());
  const auto f2 = static_cast<std::int64_t>(skel.num_triangles());

  // spanning forest in canonical edge order
  std::vector<std::int32_t> parent(skel.num_vertices());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::int32_t x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  std::int64_t b0 = f0;
  std::vector<std::int32_t> row_of(skel.num_edges(), -1);
  std::int32_t rows = 0;
  for (std::size_t e = 0; e < skel.num_edges(); ++e) {
    const auto a = find(skel.vertex_id(skel.edge(e)[0]));
    const auto b = find(skel.vertex_id(skel.edge(e)[1]));
    if (a != b) {
      parent[static_cast<std::size_t>(a)] = b;
      --b0;
    } else {
      row_of[e] = rows++;
    }
  }

  SparseMatrix reduced;
  reduced.rows = rows;
  reduced.cols = f2;
  reduced.columns.resize(skel.num_triangles());
  for (std::size_t t = 0; t < skel.num_triangles(); ++t) {
    const auto& te = skel.triangle_edges(t);  // [v0v1] +1, [v0v2] -1, [v1v2] +1
    const std::int64_t sign[3] = {1, -1, 1};
    auto& col = reduced.columns[t];
    for (int k = 0; k < 3; ++k) {
      const auto row = row_of[static_cast<std::size_t>(te[static_cast<std::size_t>(k)])];
      if (row >= 0) col.emplace_back(row, sign[k]);
    }
    std::sort(col.begin(), col.end());
  }
  const SmithResult snf = smith_normal_form(reduced);
  std::int64_t even = 0;
  for (const BigInt& d : snf.torsion)
    if (d % 2 == 0) ++even;
  h.betti_q = {b0, f1 - (f0 - b0) - snf.rank, f2 - snf.rank};
  h.betti_f2 = {b0, h.betti_q[1] + even, h.betti_q[2] + even};
  h.h1_torsion = snf.torsion;

  if (f1 * f2 <= 4'000'000 && rank_f2(reduced) != snf.rank - even)
    throw std::logic_error("homology: F2 rank disagrees with Smith form parity");
  return h;
}

bool has_two_torsion_h1(const Complex& c) {
  for (const BigInt& d : homology(c).h1_torsion)
    if (d % 2 == 0) return true;
  return false;
}

std::int64_t betti2_q(const Complex& c) { return homology(c).betti_q[2]; }

std::string homology_csv_header() { return "b0_q,b1_q,b2_q,b0_f2,b1_f2,b2_f2,h1_torsion"; }

std::string homology_csv_row(const HomologySummary& h) {
  std::string out;
  for (auto b : h.betti_q) out += std::to_string(b) + ",";
  for (auto b : h.betti_f2) out += std::to_string(b) + ",";
  for (std::size_t i = 0; i < h.h1_torsion.size(); ++i) out += (i ? ";" : "") + to_string(h.h1_torsion[i]);
  return out;
}

}  // namespace randcx
