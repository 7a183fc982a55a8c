#include "maxwell11/oracle.hpp"

#include <cassert>
#include <stdexcept>

namespace mx11::oracle {

namespace {

using Grid = std::vector<std::vector<ComplexRational>>;

Grid to_grid(const RepMatrix& m) {
  Grid g(ComponentIndex::kDim, std::vector<ComplexRational>(ComponentIndex::kDim));
  for (int i = 0; i < ComponentIndex::kDim; ++i)
    for (int j = 0; j < ComponentIndex::kDim; ++j) g[i][j] = m(i, j);
  return g;
}

Grid to_grid(const std::vector<Vec11>& columns) {
  Grid g(ComponentIndex::kDim, std::vector<ComplexRational>(columns.size()));
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (int r = 0; r < ComponentIndex::kDim; ++r) g[r][c] = columns[c](r);
  return g;
}

// Clears denominators so the Bareiss recurrence runs over Gaussian integers.
void scale_row_integral(std::vector<ComplexRational>& row) {
  mpz_class l(1);
  for (const auto& z : row) {
    l = lcm(l, z.re.get_den());
    l = lcm(l, z.im.get_den());
  }
  if (l == 1) return;
  ComplexRational f{Rational(l)};
  for (auto& z : row) z *= f;
}

struct Echelon {
  Grid m;                      // upper echelon in permuted column order
  std::vector<int> col_perm;   // position -> original column
  int rank = 0;
};

// Fraction-free (Bareiss) elimination with full pivoting. Pivot choice is
// deterministic: first nonzero entry of the remaining block, row-major.
Echelon reduce(Grid g) {
  const int rows = static_cast<int>(g.size());
  const int cols = rows ? static_cast<int>(g[0].size()) : 0;
  Echelon e;
  e.m = std::move(g);
  e.col_perm.resize(cols);
  for (int j = 0; j < cols; ++j) e.col_perm[j] = j;
  for (auto& row : e.m) scale_row_integral(row);

  ComplexRational prev_pivot{Rational(1)};
  int step = 0;
  while (step < rows && step < cols) {
    int pr = -1, pc = -1;
    for (int i = step; i < rows && pr < 0; ++i)
      for (int j = step; j < cols; ++j)
        if (!e.m[i][j].is_zero()) {
          pr = i;
          pc = j;
          break;
        }
    if (pr < 0) break;
    std::swap(e.m[step], e.m[pr]);
    if (pc != step) {
      for (int i = 0; i < rows; ++i) std::swap(e.m[i][step], e.m[i][pc]);
      std::swap(e.col_perm[step], e.col_perm[pc]);
    }
    const ComplexRational pivot = e.m[step][step];
    for (int i = step + 1; i < rows; ++i) {
      for (int j = step + 1; j < cols; ++j)
        e.m[i][j] = (pivot * e.m[i][j] - e.m[i][step] * e.m[step][j]) / prev_pivot;
      e.m[i][step] = ComplexRational(0);
    }
    prev_pivot = pivot;
    ++step;
  }
  e.rank = step;
  return e;
}

}  // namespace

int rank(const std::vector<Vec11>& columns) {
  if (columns.empty()) return 0;
  return reduce(to_grid(columns)).rank;
}

int rank(const RepMatrix& m) { return reduce(to_grid(m)).rank; }

NullspaceBasis null_space(const RepMatrix& m) {
  const int n = ComponentIndex::kDim;
  Echelon e = reduce(to_grid(m));
  NullspaceBasis basis;
  for (int free_pos = e.rank; free_pos < n; ++free_pos) {
    std::vector<ComplexRational> x(n, ComplexRational(0));  // permuted order
    x[free_pos] = ComplexRational(1);
    for (int i = e.rank - 1; i >= 0; --i) {
      ComplexRational s;
      for (int j = i + 1; j < n; ++j) s += e.m[i][j] * x[j];
      x[i] = -s / e.m[i][i];
    }
    Vec11 v;
    for (int pos = 0; pos < n; ++pos) v(e.col_perm[pos]) = x[pos];
    basis.vectors.push_back(v);
  }
  assert(basis.dimension() + e.rank == n);
  // Direct residual check, multiplied out by hand.
  for (const Vec11& v : basis.vectors)
    for (int i = 0; i < n; ++i) {
      ComplexRational s;
      for (int j = 0; j < n; ++j) s += m(i, j) * v(j);
      if (!s.is_zero()) throw std::logic_error("oracle: nullspace vector fails M v = 0");
    }
  return basis;
}

namespace {

// Solves A c = b exactly (A given column-wise); nullopt when inconsistent.
// Free variables are fixed to zero.
std::optional<std::vector<ComplexRational>> solve_exact(
    const std::vector<std::vector<ComplexRational>>& a_cols,
    const std::vector<ComplexRational>& b) {
  const int rows = static_cast<int>(b.size());
  const int cols = static_cast<int>(a_cols.size());
  Grid g(rows, std::vector<ComplexRational>(cols + 1));
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) g[i][j] = a_cols[j][i];
    g[i][cols] = b[i];
  }
  // Plain exact Gauss with row pivoting; columns stay in place so the
  // augmented column is never swapped.
  std::vector<int> pivot_col;
  int row = 0;
  for (int col = 0; col < cols && row < rows; ++col) {
    int pr = -1;
    for (int i = row; i < rows; ++i)
      if (!g[i][col].is_zero()) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    std::swap(g[row], g[pr]);
    for (int i = row + 1; i < rows; ++i) {
      if (g[i][col].is_zero()) continue;
      ComplexRational f = g[i][col] / g[row][col];
      for (int j = col; j <= cols; ++j) g[i][j] -= f * g[row][j];
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (int i = row; i < rows; ++i)
    if (!g[i][cols].is_zero()) return std::nullopt;
  std::vector<ComplexRational> x(cols, ComplexRational(0));
  for (int i = static_cast<int>(pivot_col.size()) - 1; i >= 0; --i) {
    int pc = pivot_col[i];
    ComplexRational s = g[i][cols];
    for (int j = pc + 1; j < cols; ++j) s -= g[i][j] * x[j];
    x[pc] = s / g[i][pc];
  }
  return x;
}

std::vector<ComplexRational> vectorize(const RepMatrix& m) {
  std::vector<ComplexRational> v;
  v.reserve(ComponentIndex::kDim * ComponentIndex::kDim);
  for (int i = 0; i < ComponentIndex::kDim; ++i)
    for (int j = 0; j < ComponentIndex::kDim; ++j) v.push_back(m(i, j));
  return v;
}

RepMatrix multiply_by_hand(const RepMatrix& a, const RepMatrix& b) {
  RepMatrix r = RepMatrix::Zero();
  for (int i = 0; i < ComponentIndex::kDim; ++i)
    for (int k = 0; k < ComponentIndex::kDim; ++k) {
      if (a(i, k).is_zero()) continue;
      for (int j = 0; j < ComponentIndex::kDim; ++j) r(i, j) += a(i, k) * b(k, j);
    }
  return r;
}

}  // namespace

std::vector<ComplexRational> minimal_polynomial(const RepMatrix& m, int max_degree) {
  assert(max_degree >= 1 && max_degree <= ComponentIndex::kDim);
  std::vector<std::vector<ComplexRational>> power_vecs;
  power_vecs.push_back(vectorize(RepMatrix::Identity()));
  RepMatrix power = RepMatrix::Identity();
  for (int d = 1; d <= max_degree; ++d) {
    power = multiply_by_hand(power, m);
    std::vector<ComplexRational> target = vectorize(power);
    for (auto& t : target) t = -t;
    auto c = solve_exact(power_vecs, target);
    if (c) {
      c->push_back(ComplexRational(1));
      return *c;
    }
    power_vecs.push_back(vectorize(power));
  }
  return {};
}

RankOneReport rank_one_check(const RepMatrix& m) {
  RankOneReport rep;
  if (is_exactly_zero(m)) {
    rep.witness = "zero matrix";
    return rep;
  }
  const int n = ComponentIndex::kDim;
  for (int r1 = 0; r1 < n; ++r1)
    for (int r2 = r1 + 1; r2 < n; ++r2)
      for (int c1 = 0; c1 < n; ++c1)
        for (int c2 = c1 + 1; c2 < n; ++c2) {
          ComplexRational minor = m(r1, c1) * m(r2, c2) - m(r1, c2) * m(r2, c1);
          if (!minor.is_zero()) {
            rep.witness = "nonzero 2x2 minor, rows (" +
                          ComponentIndex::from_code(r1).label() + "," +
                          ComponentIndex::from_code(r2).label() + ") cols (" +
                          ComponentIndex::from_code(c1).label() + "," +
                          ComponentIndex::from_code(c2).label() + ") = " + to_string(minor);
            return rep;
          }
        }
  rep.pass = true;
  return rep;
}

bool same_span(const std::vector<Vec11>& a, const std::vector<Vec11>& b) {
  std::vector<Vec11> joint = a;
  joint.insert(joint.end(), b.begin(), b.end());
  const int ra = rank(a), rb = rank(b), rj = rank(joint);
  return ra == rb && rb == rj;
}

std::vector<Vec11> nonzero_columns(const RepMatrix& m) {
  std::vector<Vec11> cols;
  for (int j = 0; j < ComponentIndex::kDim; ++j) {
    Vec11 v = m.col(j);
    bool nz = false;
    for (int i = 0; i < ComponentIndex::kDim; ++i)
      if (!v(i).is_zero()) {
        nz = true;
        break;
      }
    if (nz) cols.push_back(v);
  }
  return cols;
}

}  // namespace mx11::oracle
