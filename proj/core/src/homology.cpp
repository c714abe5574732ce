#include "vdh/homology.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace vdh {

std::vector<ChainBoundary> boundary_matrices(const SimplicialComplex& k) {
  std::vector<ChainBoundary> out;
  for (int p = 1; p <= k.dimension(); ++p) {
    ChainBoundary b;
    b.dim = p;
    b.rows = k.simplex_count(p - 1);
    b.cols = k.simplex_count(p);
    const auto& faces = k.simplices(p - 1);
    std::map<std::vector<int>, int> face_index;
    for (std::size_t i = 0; i < faces.size(); ++i)
      face_index[faces[i]] = static_cast<int>(i);
    const auto& cells = k.simplices(p);
    for (std::size_t j = 0; j < cells.size(); ++j) {
      const auto& s = cells[j];
      int sign = 1;
      for (std::size_t skip = 0; skip <= static_cast<std::size_t>(p); ++skip) {
        std::vector<int> face;
        face.reserve(s.size() - 1);
        for (std::size_t i = 0; i < s.size(); ++i)
          if (i != skip) face.push_back(s[i]);
        auto it = face_index.find(face);
        if (it == face_index.end())
          fail(ErrorCode::Internal, "complex is not closed under faces");
        b.entries.push_back({it->second, static_cast<int>(j), sign});
        sign = -sign;
      }
    }
    out.push_back(std::move(b));
  }
  return out;
}

namespace {

// Sparse integer matrix supporting the row and column operations needed by
// the Smith reduction. Rows are maps column -> value; a per-column set of
// row indices tracks the sparsity pattern.
class SparseMat {
 public:
  SparseMat(std::size_t rows, std::size_t cols,
            const std::vector<ChainBoundary::Entry>& entries)
      : rows_(rows), col_rows_(cols) {
    for (const auto& e : entries) {
      if (e.value == 0) continue;
      auto [it, fresh] = rows_[static_cast<std::size_t>(e.row)].emplace(
          e.col, BigInt(e.value));
      if (!fresh) {
        it->second += e.value;
        if (it->second == 0) {
          rows_[static_cast<std::size_t>(e.row)].erase(it);
          continue;
        }
      }
      col_rows_[static_cast<std::size_t>(e.col)].insert(e.row);
    }
  }

  const BigInt* get(int r, int c) const {
    const auto& row = rows_[static_cast<std::size_t>(r)];
    auto it = row.find(c);
    return it == row.end() ? nullptr : &it->second;
  }

  void set(int r, int c, BigInt v) {
    auto& row = rows_[static_cast<std::size_t>(r)];
    auto it = row.find(c);
    if (v == 0) {
      if (it != row.end()) {
        row.erase(it);
        col_rows_[static_cast<std::size_t>(c)].erase(r);
      }
      return;
    }
    if (it != row.end()) {
      it->second = std::move(v);
    } else {
      row.emplace(c, std::move(v));
      col_rows_[static_cast<std::size_t>(c)].insert(r);
    }
  }

  // row[dst] -= q * row[src]
  void row_axpy(int dst, int src, const BigInt& q) {
    if (q == 0) return;
    for (const auto& [c, v] : rows_[static_cast<std::size_t>(src)]) {
      const BigInt* cur = get(dst, c);
      BigInt next = cur ? BigInt(*cur - q * v) : BigInt(-q * v);
      set(dst, c, std::move(next));
    }
  }

  // col[dst] -= q * col[src]
  void col_axpy(int dst, int src, const BigInt& q) {
    if (q == 0) return;
    auto rows_of_src = col_rows_[static_cast<std::size_t>(src)];
    for (int r : rows_of_src) {
      const BigInt& v = *get(r, src);
      const BigInt* cur = get(r, dst);
      BigInt next = cur ? *cur - q * v : BigInt(-q * v);
      set(r, dst, std::move(next));
    }
  }

  std::size_t row_nnz(int r) const {
    return rows_[static_cast<std::size_t>(r)].size();
  }
  std::size_t col_nnz(int c) const {
    return col_rows_[static_cast<std::size_t>(c)].size();
  }
  const std::map<int, BigInt>& row(int r) const {
    return rows_[static_cast<std::size_t>(r)];
  }
  const std::set<int>& col(int c) const {
    return col_rows_[static_cast<std::size_t>(c)];
  }
  std::size_t nrows() const { return rows_.size(); }
  std::size_t ncols() const { return col_rows_.size(); }

 private:
  std::vector<std::map<int, BigInt>> rows_;
  std::vector<std::set<int>> col_rows_;
};

BigInt abs_big(const BigInt& v) { return v < 0 ? BigInt(-v) : v; }

// Quotient with remainder of minimal absolute value.
BigInt balanced_quotient(const BigInt& a, const BigInt& p) {
  BigInt q = a / p;
  BigInt r = a - q * p;
  if (r != 0) {
    BigInt ap = abs_big(p);
    if (2 * abs_big(r) > ap) q += (r > 0) == (p > 0) ? 1 : -1;
  }
  return q;
}

}  // namespace

SnfResult smith_normal_form(std::size_t rows, std::size_t cols,
                            const std::vector<ChainBoundary::Entry>& entries) {
  SparseMat m(rows, cols, entries);
  std::vector<BigInt> diagonal;

  for (;;) {
    // Pivot selection: scan for the sparsest nonzero line (row or column),
    // then within it take the entry of smallest magnitude, breaking ties by
    // the Markowitz fill estimate. One O(rows+cols) scan per pivot.
    std::size_t best_line = 0;
    int line_index = -1;
    bool line_is_col = true;
    for (std::size_t c = 0; c < cols; ++c) {
      std::size_t nnz = m.col_nnz(static_cast<int>(c));
      if (nnz == 0) continue;
      if (line_index < 0 || nnz < best_line) {
        best_line = nnz;
        line_index = static_cast<int>(c);
        line_is_col = true;
        if (nnz == 1) break;
      }
    }
    if (line_index >= 0 && best_line > 1) {
      for (std::size_t r = 0; r < rows; ++r) {
        std::size_t nnz = m.row_nnz(static_cast<int>(r));
        if (nnz == 0 || nnz >= best_line) continue;
        best_line = nnz;
        line_index = static_cast<int>(r);
        line_is_col = false;
        if (nnz == 1) break;
      }
    }
    if (line_index < 0) break;

    int pr = -1, pc = -1;
    BigInt best_val;
    std::size_t best_fill = 0;
    bool have = false;
    auto consider = [&](int r, int c) {
      const BigInt& v = *m.get(r, c);
      BigInt av = abs_big(v);
      std::size_t fill = (m.row_nnz(r) - 1) * (m.col_nnz(c) - 1);
      if (!have || av < best_val || (av == best_val && fill < best_fill)) {
        have = true;
        best_val = std::move(av);
        best_fill = fill;
        pr = r;
        pc = c;
      }
    };
    if (line_is_col) {
      for (int r : m.col(line_index)) consider(r, line_index);
    } else {
      for (const auto& [c, v] : m.row(line_index)) consider(line_index, c);
    }
    if (!have) break;

    // Clear the pivot column and row; a nonzero remainder becomes the new
    // (strictly smaller) pivot, so this terminates.
    for (;;) {
      bool clean = true;
      BigInt p = *m.get(pr, pc);
      auto col_rows = m.col(pc);
      for (int r : col_rows) {
        if (r == pr) continue;
        BigInt a = *m.get(r, pc);
        BigInt q = balanced_quotient(a, p);
        m.row_axpy(r, pr, q);
        if (m.get(r, pc) != nullptr) {
          pr = r;
          clean = false;
          break;
        }
      }
      if (!clean) continue;
      p = *m.get(pr, pc);
      auto row_entries = m.row(pr);
      for (const auto& [c, a] : row_entries) {
        if (c == pc) continue;
        BigInt q = balanced_quotient(a, p);
        m.col_axpy(c, pc, q);
        if (m.get(pr, c) != nullptr) {
          pc = c;
          clean = false;
          break;
        }
      }
      if (clean && m.col_nnz(pc) == 1 && m.row_nnz(pr) == 1) break;
    }
    diagonal.push_back(abs_big(*m.get(pr, pc)));
    m.set(pr, pc, BigInt(0));
  }

  // Diagonal entries from independent pivots need not divide each other;
  // the gcd/lcm exchange sorts them into the invariant-factor chain.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < diagonal.size(); ++i)
      for (std::size_t j = i + 1; j < diagonal.size(); ++j) {
        if (diagonal[j] % diagonal[i] == 0) continue;
        BigInt g = boost::multiprecision::gcd(diagonal[i], diagonal[j]);
        BigInt l = diagonal[i] / g * diagonal[j];
        diagonal[i] = g;
        diagonal[j] = l;
        changed = true;
      }
  }
  std::sort(diagonal.begin(), diagonal.end());
  SnfResult out;
  out.invariants = std::move(diagonal);
  out.rank = out.invariants.size();
  return out;
}

std::size_t rank_over_rationals(
    std::size_t rows, std::size_t cols,
    const std::vector<ChainBoundary::Entry>& entries) {
  // Independent elimination path: integer row echelon with content
  // stripping; only the rank is tracked.
  std::vector<std::map<int, BigInt>> mat(rows);
  for (const auto& e : entries) {
    if (e.value == 0) continue;
    auto [it, fresh] = mat[static_cast<std::size_t>(e.row)].emplace(
        e.col, BigInt(e.value));
    if (!fresh) {
      it->second += e.value;
      if (it->second == 0) mat[static_cast<std::size_t>(e.row)].erase(it);
    }
  }
  std::vector<std::size_t> live;
  for (std::size_t r = 0; r < rows; ++r)
    if (!mat[r].empty()) live.push_back(r);

  auto strip_content = [](std::map<int, BigInt>& row) {
    BigInt g = 0;
    for (const auto& [c, v] : row) {
      g = boost::multiprecision::gcd(g, abs_big(v));
      if (g == 1) return;
    }
    if (g > 1)
      for (auto& [c, v] : row) v /= g;
  };

  std::size_t rank = 0;
  (void)cols;
  while (!live.empty()) {
    // Pick the pivot row with the fewest entries, then the entry of
    // smallest magnitude within it.
    std::size_t best = 0;
    for (std::size_t i = 1; i < live.size(); ++i)
      if (mat[live[i]].size() < mat[live[best]].size()) best = i;
    std::size_t prow = live[best];
    live.erase(live.begin() + static_cast<std::ptrdiff_t>(best));
    if (mat[prow].empty()) continue;
    strip_content(mat[prow]);
    int pcol = mat[prow].begin()->first;
    BigInt pval = mat[prow].begin()->second;
    for (const auto& [c, v] : mat[prow])
      if (abs_big(v) < abs_big(pval)) {
        pcol = c;
        pval = v;
      }
    ++rank;
    for (std::size_t r : live) {
      auto it = mat[r].find(pcol);
      if (it == mat[r].end()) continue;
      BigInt a = it->second;
      if (a % pval == 0) {
        BigInt q = a / pval;
        for (const auto& [c, v] : mat[prow]) {
          auto [jt, fresh] = mat[r].emplace(c, BigInt(0));
          jt->second -= q * v;
          if (jt->second == 0) mat[r].erase(jt);
        }
      } else {
        // r := pval * r - a * pivot keeps the row integral.
        std::map<int, BigInt> next;
        for (const auto& [c, v] : mat[r]) next[c] = pval * v;
        for (const auto& [c, v] : mat[prow]) {
          auto [jt, fresh] = next.emplace(c, BigInt(0));
          jt->second -= a * v;
          if (jt->second == 0) next.erase(jt);
        }
        mat[r] = std::move(next);
        strip_content(mat[r]);
      }
    }
    std::erase_if(live, [&](std::size_t r) { return mat[r].empty(); });
  }
  return rank;
}

HomologyProfile reduced_homology(const SimplicialComplex& k,
                                 bool crosscheck_rank) {
  HomologyProfile out;
  int dim = k.dimension();
  if (dim < 0) return out;

  auto boundaries = boundary_matrices(k);
  std::vector<SnfResult> snf(boundaries.size());
  for (std::size_t i = 0; i < boundaries.size(); ++i) {
    snf[i] = smith_normal_form(boundaries[i].rows, boundaries[i].cols,
                               boundaries[i].entries);
    if (crosscheck_rank) {
      std::size_t qrank = rank_over_rationals(
          boundaries[i].rows, boundaries[i].cols, boundaries[i].entries);
      if (qrank != snf[i].rank)
        fail(ErrorCode::Internal,
             "integral and rational rank paths disagree in dimension " +
                 std::to_string(boundaries[i].dim));
    }
  }

  auto rank_of = [&](int p) -> std::size_t {
    if (p <= 0 || static_cast<std::size_t>(p) > snf.size()) return 0;
    return snf[static_cast<std::size_t>(p - 1)].rank;
  };

  out.betti.resize(static_cast<std::size_t>(dim) + 1);
  out.torsion.resize(static_cast<std::size_t>(dim) + 1);
  for (int p = 0; p <= dim; ++p) {
    long long n_p = static_cast<long long>(k.simplex_count(p));
    long long r_p = p == 0 ? (n_p > 0 ? 1 : 0)  // reduced: augmentation rank
                           : static_cast<long long>(rank_of(p));
    long long r_next = static_cast<long long>(rank_of(p + 1));
    out.betti[static_cast<std::size_t>(p)] = n_p - r_p - r_next;
    if (static_cast<std::size_t>(p) < snf.size())
      for (const auto& d : snf[static_cast<std::size_t>(p)].invariants)
        if (d > 1) out.torsion[static_cast<std::size_t>(p)].push_back(d);
  }

  long long chi = 0;
  for (int p = 0; p <= dim; ++p)
    chi += (p % 2 == 0 ? 1 : -1) * static_cast<long long>(k.simplex_count(p));
  out.euler = chi;
  long long chi_betti = 1;  // reduced Betti numbers miss the augmentation
  for (int p = 0; p <= dim; ++p)
    chi_betti += (p % 2 == 0 ? 1 : -1) * out.betti[static_cast<std::size_t>(p)];
  if (chi != chi_betti)
    fail(ErrorCode::Internal,
         "Euler characteristic cross-check failed: " + std::to_string(chi) +
             " vs " + std::to_string(chi_betti));
  for (long long b : out.betti)
    if (b < 0) fail(ErrorCode::Internal, "negative Betti number");
  return out;
}

}  // namespace vdh
