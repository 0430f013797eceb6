#pragma once

#include <optional>
#include <vector>

#include "halg/matrix.hpp"

namespace halg {

// U·A·V = S with S diagonal, d_1 | d_2 | ... positive (all 1 over a field).
struct SmithDecomposition {
  Matrix U, S, V;
  std::size_t rank = 0;
  std::vector<Scalar> diagonal() const;  // the nonzero d_i
};

// Smallest-size pivot first, ties broken by lowest (row, column).
SmithDecomposition smith_normal_form(const Matrix& a);
// The nonzero diagonal of the Smith form, computed without transforms.
std::vector<Scalar> invariant_factors(const Matrix& a);

std::size_t rank(const Matrix& a);

// Column echelon form E = A·V with V unimodular. Columns 0..r-1 of E have
// their first nonzero entry ("pivot") at pivot_rows[j], strictly increasing;
// the remaining columns of E are zero.
struct ColumnEchelon {
  Matrix E, V;
  std::vector<std::size_t> pivot_rows;
  std::size_t rank() const { return pivot_rows.size(); }
};
ColumnEchelon column_echelon(const Matrix& a, bool track_transform = true);

// Saturated basis of ker A in canonical form: each column's last nonzero
// entry is its pivot, pivots are positive (1 over a field), columns are
// ordered by increasing pivot row, and the entries of earlier columns in
// a later pivot row are reduced modulo that pivot.
Matrix kernel_basis(const Matrix& a);
// Basis of the column lattice of A, in column Hermite form (top pivots).
Matrix image_basis(const Matrix& a);
// Puts a matrix with independent columns into the canonical kernel form
// above, spanning the same lattice.
Matrix canonical_basis(const Matrix& basis);

// A solution X of A·X = B (every column), or nothing.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);
std::optional<Matrix> inverse(const Matrix& a);

struct HomologyGroup {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;  // invariant factors > 1, divisibility chain
  bool is_zero() const { return free_rank == 0 && torsion.empty(); }
  bool operator==(const HomologyGroup&) const = default;
};

// Homology at the middle term of  · --d_in--> ambient --d_out--> · .
HomologyGroup homology_at(const Matrix& d_in, const Matrix& d_out);

bool is_surjective(const Matrix& a);
bool is_injective(const Matrix& a);
bool has_free_cokernel(const Matrix& a);

}  // namespace halg
