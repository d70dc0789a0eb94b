#include <rtq/snf.hpp>
#include <algorithm>
#include <set>

namespace rtq {

namespace {

void row_swap(IMat& m, size_t i, size_t j) {
  for (size_t c = 0; c < m.cols; ++c) std::swap(m(i, c), m(j, c));
}
void col_swap(IMat& m, size_t i, size_t j) {
  for (size_t r = 0; r < m.rows; ++r) std::swap(m(r, i), m(r, j));
}
// row i -= q * row j
void row_axpy(IMat& m, size_t i, size_t j, const Int& q) {
  for (size_t c = 0; c < m.cols; ++c) m(i, c) -= q * m(j, c);
}
void col_axpy(IMat& m, size_t i, size_t j, const Int& q) {
  for (size_t r = 0; r < m.rows; ++r) m(r, i) -= q * m(r, j);
}

}  // namespace

SmithForm smith_form(IMat a) {
  size_t rows = a.rows, cols = a.cols;
  IMat u = IMat::identity(rows), v = IMat::identity(cols);
  size_t n = std::min(rows, cols);
  for (size_t k = 0; k < n; ++k) {
    // pivot: minimal nonzero absolute value in the remaining block
    size_t pi = rows, pj = cols;
    Int best;
    for (size_t i = k; i < rows; ++i)
      for (size_t j = k; j < cols; ++j)
        if (a(i, j) != 0) {
          Int ab = abs(a(i, j));
          if (pi == rows || ab < best) {
            best = ab;
            pi = i;
            pj = j;
          }
        }
    if (pi == rows) break;  // all zero
    row_swap(a, k, pi);
    row_swap(u, k, pi);
    col_swap(a, k, pj);
    col_swap(v, k, pj);
    bool again = true;
    while (again) {
      again = false;
      for (size_t i = k + 1; i < rows; ++i)
        if (a(i, k) != 0) {
          Int q;
          mpz_fdiv_q(q.get_mpz_t(), a(i, k).get_mpz_t(), a(k, k).get_mpz_t());
          row_axpy(a, i, k, q);
          row_axpy(u, i, k, q);
          if (a(i, k) != 0) {  // remainder became new smaller pivot
            row_swap(a, k, i);
            row_swap(u, k, i);
            again = true;
          }
        }
      for (size_t j = k + 1; j < cols; ++j)
        if (a(k, j) != 0) {
          Int q;
          mpz_fdiv_q(q.get_mpz_t(), a(k, j).get_mpz_t(), a(k, k).get_mpz_t());
          col_axpy(a, j, k, q);
          col_axpy(v, j, k, q);
          if (a(k, j) != 0) {
            col_swap(a, k, j);
            col_swap(v, k, j);
            again = true;
          }
        }
    }
  }
  // sign normalisation
  for (size_t k = 0; k < n; ++k)
    if (a(k, k) < 0) {
      for (size_t c = 0; c < cols; ++c) a(k, c) = -a(k, c);
      for (size_t c = 0; c < rows; ++c) u(k, c) = -u(k, c);
    }
  // enforce divisibility chain d_k | d_{k+1}
  for (size_t k = 0; k + 1 < n; ++k)
    for (size_t j = k + 1; j < n; ++j) {
      if (a(k, k) == 0 || a(j, j) % a(k, k) == 0) continue;
      // fold a(j,j) into position k: add column j to column k, re-reduce
      col_axpy(a, k, j, Int(-1));
      col_axpy(v, k, j, Int(-1));
      // now entry (j,k) = a(j,j); redo elimination from k
      // simplest: recurse on the whole block via a fresh smith form
      SmithForm inner = smith_form(a);
      inner.u = inner.u * u;
      inner.v = v * inner.v;
      return inner;
    }
  return {a, u, v};
}

IMat hermite_row_basis(const IMat& a) {
  IMat m = a;
  size_t rows = m.rows, cols = m.cols;
  size_t pr = 0;
  for (size_t pc = 0; pc < cols && pr < rows; ++pc) {
    // reduce column pc below pr with euclidean steps
    while (true) {
      size_t piv = rows;
      Int best;
      for (size_t i = pr; i < rows; ++i)
        if (m(i, pc) != 0) {
          Int ab = abs(m(i, pc));
          if (piv == rows || ab < best) {
            best = ab;
            piv = i;
          }
        }
      if (piv == rows) break;
      row_swap(m, pr, piv);
      bool clean = true;
      for (size_t i = pr + 1; i < rows; ++i)
        if (m(i, pc) != 0) {
          Int q;
          mpz_fdiv_q(q.get_mpz_t(), m(i, pc).get_mpz_t(), m(pr, pc).get_mpz_t());
          row_axpy(m, i, pr, q);
          if (m(i, pc) != 0) clean = false;
        }
      if (clean) break;
    }
    if (m(pr, pc) == 0) continue;
    if (m(pr, pc) < 0)
      for (size_t c = 0; c < cols; ++c) m(pr, c) = -m(pr, c);
    // reduce entries above the pivot
    for (size_t i = 0; i < pr; ++i) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), m(i, pc).get_mpz_t(), m(pr, pc).get_mpz_t());
      row_axpy(m, i, pr, q);
    }
    ++pr;
  }
  IMat out(pr, cols);
  for (size_t i = 0; i < pr; ++i)
    for (size_t j = 0; j < cols; ++j) out(i, j) = m(i, j);
  return out;
}

CongSolution solve_congruence(const IMat& a, const QVec& b, bool enumerate_all) {
  size_t rows = a.rows, cols = a.cols;
  SmithForm s = smith_form(a);
  // transformed rhs c = U b ; system becomes D y == c (mod Z^rows), x = V y
  QVec c = to_qmat(s.u).apply(b);
  size_t n = std::min(rows, cols);
  CongSolution sol;
  std::vector<Int> divisors;   // nonzero d_i
  std::vector<size_t> di_pos;  // their positions
  bool positive_dim = false;
  QVec y0(cols, Rat(0));
  for (size_t i = 0; i < rows; ++i) {
    Int di = (i < n) ? s.d(i, i) : Int(0);
    if (di != 0) {
      y0[i] = c[i] / Rat(di);
      divisors.push_back(di);
      di_pos.push_back(i);
    } else {
      if (!is_integer(c[i])) {
        sol.status = CongStatus::Empty;
        return sol;
      }
      if (i < cols) positive_dim = true;  // free coordinate
    }
  }
  sol.status = positive_dim ? CongStatus::PositiveDim : CongStatus::Finite;
  QMat vq = to_qmat(s.v);
  auto reduce01 = [cols](QVec x) {
    for (size_t i = 0; i < cols; ++i) x[i] = frac(x[i]);
    return x;
  };
  sol.particular = reduce01(vq.apply(y0));
  if (sol.status == CongStatus::PositiveDim) return sol;
  Int count = 1;
  for (const auto& d : divisors) count *= d;
  sol.count = count;
  if (!enumerate_all) return sol;
  // enumerate y_i = (c_i + j)/d_i over all combinations
  std::vector<Int> idx(divisors.size(), 0);
  std::set<QVec> reps;
  while (true) {
    QVec y = y0;
    for (size_t t = 0; t < divisors.size(); ++t)
      y[di_pos[t]] = (c[di_pos[t]] + Rat(idx[t])) / Rat(divisors[t]);
    reps.insert(reduce01(vq.apply(y)));
    size_t t = 0;
    for (; t < divisors.size(); ++t) {
      if (++idx[t] < divisors[t]) break;
      idx[t] = 0;
    }
    if (t == divisors.size()) break;
  }
  sol.reps.assign(reps.begin(), reps.end());
  if (Int((long)sol.reps.size()) != count)
    throw std::runtime_error("solve_congruence: representative count mismatch");
  return sol;
}

CongSolution solve_linear_congruence(const IMat& a, const QVec& b, const IMat& l,
                                     bool enumerate_all) {
  // x with A x - b in L Z^rows.  Multiply by L^{-1}: (L^{-1}A) x == L^{-1} b
  // (mod Z^rows); clear the denominator q of the left side with x = q u.
  auto linv = q_inverse(to_qmat(l));
  if (!linv) throw std::invalid_argument("solve_linear_congruence: L singular");
  QMat bt = *linv * to_qmat(a);
  QVec ct = linv->apply(b);
  Int q = 1;
  for (const auto& x : bt.a) q = lcm(q, rat_den(x));
  IMat ai(bt.rows, bt.cols);
  for (size_t i = 0; i < bt.a.size(); ++i) ai.a[i] = rat_num(bt.a[i] * Rat(q));
  CongSolution inner = solve_congruence(ai, ct, enumerate_all || q != 1);
  if (q == 1 || inner.status != CongStatus::Finite) {
    if (q != 1 && inner.status == CongStatus::PositiveDim) {
      for (auto& x : inner.particular) x = frac(x * Rat(q));
    }
    return inner;
  }
  // x = q u; reduce representatives of u mod Z back to x mod Z
  CongSolution out;
  out.status = CongStatus::Finite;
  std::set<QVec> reps;
  for (const auto& u : inner.reps) {
    QVec x(u.size());
    for (size_t i = 0; i < u.size(); ++i) x[i] = frac(u[i] * Rat(q));
    reps.insert(x);
  }
  out.reps.assign(reps.begin(), reps.end());
  out.count = (long)out.reps.size();
  out.particular = out.reps.empty() ? QVec{} : out.reps.front();
  if (!enumerate_all) out.reps.clear();
  return out;
}

}  // namespace rtq
