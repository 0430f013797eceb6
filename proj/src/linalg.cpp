#include "halg/linalg.hpp"

#include <algorithm>

namespace halg {

namespace {

struct SnfWork {
  Matrix S, U, V;
  bool track;
  std::size_t rank = 0;
};

void snf_row_op(SnfWork& w, std::size_t dst, std::size_t src, const Scalar& c) {
  w.S.add_row_multiple(dst, src, c);
  if (w.track) w.U.add_row_multiple(dst, src, c);
}

void snf_col_op(SnfWork& w, std::size_t dst, std::size_t src, const Scalar& c) {
  w.S.add_col_multiple(dst, src, c);
  if (w.track) w.V.add_col_multiple(dst, src, c);
}

void snf_swap(SnfWork& w, std::size_t t, std::size_t i, std::size_t j) {
  w.S.swap_rows(t, i);
  w.S.swap_cols(t, j);
  if (w.track) {
    w.U.swap_rows(t, i);
    w.V.swap_cols(t, j);
  }
}

void run_snf(SnfWork& w) {
  Matrix& S = w.S;
  const Ring& R = S.ring();
  const std::size_t m = S.rows(), n = S.cols();
  std::size_t t = 0;
  for (; t < std::min(m, n); ++t) {
    bool found = false;
    std::size_t pi = 0, pj = 0;
    Integer best;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j) {
        if (Ring::is_zero(S(i, j))) continue;
        Integer s = R.size(S(i, j));
        if (!found || s < best) {
          found = true;
          best = s;
          pi = i;
          pj = j;
        }
      }
    if (!found) break;
    snf_swap(w, t, pi, pj);

    for (;;) {
      bool residue = false;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (Ring::is_zero(S(i, t))) continue;
        snf_row_op(w, i, t, R.neg(R.quotient(S(i, t), S(t, t))));
        if (!Ring::is_zero(S(i, t))) residue = true;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (Ring::is_zero(S(t, j))) continue;
        snf_col_op(w, j, t, R.neg(R.quotient(S(t, j), S(t, t))));
        if (!Ring::is_zero(S(t, j))) residue = true;
      }
      if (residue) {
        // bring the smallest remainder in the pivot cross to (t, t)
        std::size_t bi = t, bj = t;
        Integer bs = R.size(S(t, t));
        for (std::size_t i = t + 1; i < m; ++i)
          if (!Ring::is_zero(S(i, t)) && R.size(S(i, t)) < bs) {
            bs = R.size(S(i, t));
            bi = i;
            bj = t;
          }
        for (std::size_t j = t + 1; j < n; ++j)
          if (!Ring::is_zero(S(t, j)) && R.size(S(t, j)) < bs) {
            bs = R.size(S(t, j));
            bi = t;
            bj = j;
          }
        snf_swap(w, t, bi, bj);
        continue;
      }
      if (R.kind() != Ring::Kind::Integers) break;
      bool fixed = false;
      for (std::size_t i = t + 1; i < m && !fixed; ++i)
        for (std::size_t j = t + 1; j < n; ++j) {
          if (mpz_divisible_p(S(i, j).get_num().get_mpz_t(), S(t, t).get_num().get_mpz_t())) continue;
          snf_row_op(w, t, i, R.one());
          fixed = true;
          break;
        }
      if (!fixed) break;
    }
    Scalar u = R.normalizing_unit(S(t, t));
    if (u != 1) {
      S.scale_row(t, u);
      if (w.track) w.U.scale_row(t, u);
    }
  }
  w.rank = t;
}

Matrix reverse_rows(const Matrix& a) {
  Matrix r(a.ring(), a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(a.rows() - 1 - i, j) = a(i, j);
  return r;
}

Matrix reverse_cols(const Matrix& a) {
  Matrix r(a.ring(), a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, a.cols() - 1 - j) = a(i, j);
  return r;
}

// Reduces an echelon form (first r columns carry pivots) to column Hermite form.
void hermite_reduce(Matrix& E, const std::vector<std::size_t>& pivots) {
  const Ring& R = E.ring();
  for (std::size_t j = 0; j < pivots.size(); ++j) {
    std::size_t p = pivots[j];
    Scalar u = R.normalizing_unit(E(p, j));
    if (u != 1) E.scale_col(j, u);
    for (std::size_t c = 0; c < j; ++c) {
      if (Ring::is_zero(E(p, c))) continue;
      E.add_col_multiple(c, j, R.neg(R.quotient(E(p, c), E(p, j))));
    }
  }
}

Matrix saturated_kernel(const Matrix& a) {
  ColumnEchelon ce = column_echelon(a, true);
  std::size_t r = ce.rank();
  return ce.V.block(0, r, a.cols(), a.cols() - r);
}

}  // namespace

std::vector<Scalar> SmithDecomposition::diagonal() const {
  std::vector<Scalar> d;
  for (std::size_t i = 0; i < rank; ++i) d.push_back(S(i, i));
  return d;
}

SmithDecomposition smith_normal_form(const Matrix& a) {
  const Ring& R = a.ring();
  SnfWork w{a, Matrix::identity(R, a.rows()), Matrix::identity(R, a.cols()), true};
  run_snf(w);
  return {std::move(w.U), std::move(w.S), std::move(w.V), w.rank};
}

std::vector<Scalar> invariant_factors(const Matrix& a) {
  SnfWork w{a, Matrix(), Matrix(), false};
  run_snf(w);
  std::vector<Scalar> d;
  for (std::size_t i = 0; i < w.rank; ++i) d.push_back(w.S(i, i));
  return d;
}

ColumnEchelon column_echelon(const Matrix& a, bool track) {
  const Ring& R = a.ring();
  const std::size_t m = a.rows(), n = a.cols();
  ColumnEchelon ce{a, track ? Matrix::identity(R, n) : Matrix(), {}};
  Matrix& E = ce.E;
  std::size_t pc = 0;
  for (std::size_t r = 0; r < m && pc < n; ++r) {
    for (;;) {
      std::size_t best = n;
      Integer bs;
      for (std::size_t c = pc; c < n; ++c) {
        if (Ring::is_zero(E(r, c))) continue;
        Integer s = R.size(E(r, c));
        if (best == n || s < bs) {
          best = c;
          bs = s;
          if (bs == 1) break;
        }
      }
      if (best == n) break;
      E.swap_cols(pc, best);
      if (track) ce.V.swap_cols(pc, best);
      bool clean = true;
      for (std::size_t c = pc + 1; c < n; ++c) {
        if (Ring::is_zero(E(r, c))) continue;
        Scalar q = R.neg(R.quotient(E(r, c), E(r, pc)));
        E.add_col_multiple(c, pc, q);
        if (track) ce.V.add_col_multiple(c, pc, q);
        if (!Ring::is_zero(E(r, c))) clean = false;
      }
      if (clean) {
        ce.pivot_rows.push_back(r);
        ++pc;
        break;
      }
    }
  }
  return ce;
}

std::size_t rank(const Matrix& a) { return column_echelon(a, false).rank(); }

Matrix canonical_basis(const Matrix& basis) {
  ColumnEchelon ce = column_echelon(reverse_rows(basis), false);
  if (ce.rank() != basis.cols()) throw DomainError("basis columns are not independent");
  hermite_reduce(ce.E, ce.pivot_rows);
  return reverse_cols(reverse_rows(ce.E));
}

Matrix kernel_basis(const Matrix& a) { return canonical_basis(saturated_kernel(a)); }

Matrix image_basis(const Matrix& a) {
  ColumnEchelon ce = column_echelon(a, false);
  hermite_reduce(ce.E, ce.pivot_rows);
  return ce.E.block(0, 0, a.rows(), ce.rank());
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  if (!(a.ring() == b.ring())) throw RingError("ring mismatch in solve");
  if (a.rows() != b.rows()) throw ShapeError("solve: right-hand side has wrong row count");
  const Ring& R = a.ring();
  ColumnEchelon ce = column_echelon(a, true);
  const std::size_t r = ce.rank();
  Matrix y(R, r, b.cols());
  for (std::size_t col = 0; col < b.cols(); ++col) {
    for (std::size_t j = 0; j < r; ++j) {
      std::size_t p = ce.pivot_rows[j];
      Scalar s = b(p, col);
      for (std::size_t i = 0; i < j; ++i)
        if (!Ring::is_zero(ce.E(p, i)) && !Ring::is_zero(y(i, col)))
          s = R.sub(s, R.mul(ce.E(p, i), y(i, col)));
      try {
        y(j, col) = R.divide_exact(s, ce.E(p, j));
      } catch (const DivisibilityError&) {
        return std::nullopt;
      }
    }
  }
  Matrix basis = ce.E.block(0, 0, a.rows(), r);
  if (!(basis * y == b)) return std::nullopt;
  return ce.V.block(0, 0, a.cols(), r) * y;
}

std::optional<Matrix> inverse(const Matrix& a) {
  if (!a.is_square()) throw ShapeError("inverse of a non-square matrix");
  if (rank(a) != a.rows()) return std::nullopt;
  return solve(a, Matrix::identity(a.ring(), a.rows()));
}

HomologyGroup homology_at(const Matrix& d_in, const Matrix& d_out) {
  if (d_in.rows() != d_out.cols()) throw ShapeError("homology_at: differentials do not compose");
  if (!(d_in.ring() == d_out.ring())) throw RingError("homology_at: ring mismatch");
  if (!(d_out * d_in).is_zero()) throw NotAComplex("homology_at: composite of differentials is nonzero");
  Matrix K = saturated_kernel(d_out);
  auto C = solve(K, d_in);
  if (!C) throw NotAComplex("homology_at: boundaries are not cycles");
  HomologyGroup h;
  auto factors = invariant_factors(*C);
  h.free_rank = K.cols() - factors.size();
  if (d_in.ring().kind() == Ring::Kind::Integers)
    for (const auto& d : factors)
      if (d != 1) h.torsion.push_back(d.get_num());
  return h;
}

bool is_injective(const Matrix& a) { return rank(a) == a.cols(); }

bool has_free_cokernel(const Matrix& a) {
  if (a.ring().is_field()) return true;
  for (const auto& d : invariant_factors(a))
    if (d != 1) return false;
  return true;
}

bool is_surjective(const Matrix& a) {
  if (a.ring().is_field()) return rank(a) == a.rows();
  auto f = invariant_factors(a);
  if (f.size() != a.rows()) return false;
  return std::all_of(f.begin(), f.end(), [](const Scalar& d) { return d == 1; });
}

}  // namespace halg
