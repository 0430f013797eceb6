#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "halg/complex.hpp"
#include "halg/delta.hpp"

namespace halg {

// Opaque cell label. Simplices and nerve chains use their vertex tuples.
using Cell = std::vector<int>;

// Levelwise finite simplicial set truncated at `horizon`. Face and degeneracy
// functions are index maps between the ordered cell lists.
class FinSimplicialSet {
 public:
  FinSimplicialSet() = default;
  // faces[m][i][c] = index of d_{m,i}(c) for 1 <= m <= H (faces[0] empty);
  // degens[m][i][c] = index of s_{m,i}(c) for 0 <= m < H.
  FinSimplicialSet(std::size_t horizon, std::vector<std::vector<Cell>> cells,
                   std::vector<std::vector<std::vector<std::size_t>>> faces,
                   std::vector<std::vector<std::vector<std::size_t>>> degens);

  std::size_t horizon() const { return horizon_; }
  std::size_t count(std::size_t m) const { return cells_.at(m).size(); }
  const std::vector<Cell>& cells(std::size_t m) const { return cells_.at(m); }
  std::size_t face(std::size_t m, std::size_t i, std::size_t c) const { return faces_[m][i][c]; }
  std::size_t degen(std::size_t m, std::size_t i, std::size_t c) const { return degens_[m][i][c]; }
  std::optional<std::size_t> index_of(std::size_t m, const Cell& c) const;
  // A cell is degenerate iff it is the image of some degeneracy.
  bool is_degenerate(std::size_t m, std::size_t c) const;

  bool operator==(const FinSimplicialSet& o) const = default;

 private:
  std::size_t horizon_ = 0;
  std::vector<std::vector<Cell>> cells_{{}};
  std::vector<std::vector<std::vector<std::size_t>>> faces_{{}}, degens_;
};

// Δⁿ: weakly increasing tuples in [n]; faces drop, degeneracies repeat a coordinate.
FinSimplicialSet simplex_set(std::size_t n, std::size_t horizon);
// ∂Δⁿ: the non-surjective tuples. DomainError for n = 0.
FinSimplicialSet boundary_simplex_set(std::size_t n, std::size_t horizon);

class FinPoset {
 public:
  // DomainError unless leq is a square partial order.
  FinPoset(std::vector<std::string> elements, std::vector<std::vector<bool>> leq);
  static FinPoset chain(std::size_t n);  // 0 < 1 < ... < n

  std::size_t size() const { return elements_.size(); }
  const std::vector<std::string>& elements() const { return elements_; }
  bool leq(std::size_t a, std::size_t b) const { return leq_[a][b]; }
  const std::vector<std::vector<bool>>& relation() const { return leq_; }
  std::optional<std::size_t> least_element() const;

 private:
  std::vector<std::string> elements_;
  std::vector<std::vector<bool>> leq_;
};

FinPoset product(const FinPoset& a, const FinPoset& b);

// Chains a_0 <= ... <= a_m of element indices, in lexicographic order.
FinSimplicialSet nerve(const FinPoset& p, std::size_t horizon);
// ShapeError on horizon mismatch. Product cells concatenate the two labels
// around a -1 separator; coproduct cells are prefixed by the summand index.
FinSimplicialSet product(const FinSimplicialSet& u, const FinSimplicialSet& v);
FinSimplicialSet coproduct(const FinSimplicialSet& u, const FinSimplicialSet& v);
// A levelwise bijection commuting with all structure maps, if one exists.
std::optional<std::vector<std::vector<std::size_t>>> find_isomorphism(const FinSimplicialSet& u,
                                                                      const FinSimplicialSet& v);

// Levelwise free modules with face/degeneracy matrices up to the horizon.
class SimplicialModule {
 public:
  SimplicialModule() = default;
  // faces[m][i] = d_{m,i} for 1 <= m <= H (faces[0] empty);
  // degens[m][i] = s_{m,i} for 0 <= m < H. Only shapes are checked.
  SimplicialModule(Ring ring, std::size_t horizon, std::vector<std::size_t> ranks,
                   std::vector<std::vector<Matrix>> faces, std::vector<std::vector<Matrix>> degens);

  const Ring& ring() const { return ring_; }
  std::size_t horizon() const { return horizon_; }
  const std::vector<std::size_t>& ranks() const { return ranks_; }
  std::size_t rank(std::size_t m) const { return ranks_.at(m); }
  const Matrix& face(std::size_t m, std::size_t i) const { return faces_.at(m).at(i); }
  const Matrix& degen(std::size_t m, std::size_t i) const { return degens_.at(m).at(i); }
  Matrix& mutable_face(std::size_t m, std::size_t i) { return faces_.at(m).at(i); }

  SimplicialModule truncated(std::size_t horizon) const;
  bool operator==(const SimplicialModule& o) const = default;

 private:
  Ring ring_;
  std::size_t horizon_ = 0;
  std::vector<std::size_t> ranks_{0};
  std::vector<std::vector<Matrix>> faces_{{}}, degens_;
};

// Levelwise matrices between two simplicial modules (equal horizons).
class SimplicialMap {
 public:
  SimplicialMap() = default;
  SimplicialMap(SimplicialModule source, SimplicialModule target, std::vector<Matrix> components);

  const SimplicialModule& source() const { return source_; }
  const SimplicialModule& target() const { return target_; }
  const Matrix& component(std::size_t m) const { return components_.at(m); }
  bool operator==(const SimplicialMap& o) const = default;

 private:
  SimplicialModule source_, target_;
  std::vector<Matrix> components_;
};

SimplicialMap identity_map(const SimplicialModule& m);
SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f);
// Commutes with every face and degeneracy below the horizon.
bool is_simplicial(const SimplicialMap& f);

struct IdentityViolation {
  std::string relation;  // "dd", "ss" or "ds"
  std::size_t n = 0, i = 0, j = 0;
  std::string describe() const;
};
// Every failing instance of the simplicial identities below the horizon.
std::vector<IdentityViolation> check_simplicial_identities(const SimplicialModule& m);
std::vector<IdentityViolation> check_simplicial_identities(const FinSimplicialSet& u);

SimplicialModule free_module(const FinSimplicialSet& u, const Ring& ring);

// Level n of DK(X) is ⊕ X_k over surjections [n] -> [k], ordered by k and
// then lexicographically; the identity block comes last.
struct DkBlock {
  MonotoneMap surjection;
  std::size_t offset = 0;
};
std::vector<DkBlock> dk_blocks(const ConnComplex& x, std::size_t n);
// The matrix DK(X)(η) : DK(X)_m -> DK(X)_n for η : [n] -> [m].
Matrix dk_structure_map(const ConnComplex& x, const MonotoneMap& eta);
SimplicialModule dk(const ConnComplex& x, std::size_t horizon);
SimplicialMap dk_map(const ChainMap& g, std::size_t horizon);

// A complex with its degreewise embedding into a simplicial module.
struct EmbeddedComplex {
  ConnComplex complex;
  std::vector<Matrix> embedding;  // embedding[n] : complex_n -> M_n
};

// Intersection of the kernels of d_{n,0..n-1} with ∂_n = (-1)^n d_{n,n}.
EmbeddedComplex nor(const SimplicialModule& m);
// NotSimplicial if f does not commute with the structure maps.
ChainMap nor_map(const SimplicialMap& f);
// Levelwise M with ∂_n = Σ (-1)^i d_{n,i}.
ConnComplex moore(const SimplicialModule& m);
// D_n = Σ_{i<n} im s_{n-1,i}, a subcomplex of the Moore complex.
EmbeddedComplex degenerate_part(const SimplicialModule& m);

SimplicialModule direct_sum(const SimplicialModule& m, const SimplicialModule& n);
// Levelwise Kronecker product; horizon is the smaller of the two.
SimplicialModule tensor_sm(const SimplicialModule& m, const SimplicialModule& n);
// R^(U) ⊗ M at M's horizon; DomainError if U stops earlier.
SimplicialModule copower(const SimplicialModule& m, const FinSimplicialSet& u);

struct Cylinder {
  SimplicialModule sum;       // M ⊕ M
  SimplicialModule cylinder;  // M^(Δ¹)
  SimplicialMap kappa;        // M ⊕ M -> M^(Δ¹), from the two endpoints of Δ¹
  SimplicialMap xi;           // M^(Δ¹) -> M, collapsing Δ¹
};
Cylinder cylinder(const SimplicialModule& m);

// The contraction of the normalized chains of the nerve of a poset with a
// least element e, on the quotient C/D spanned by nondegenerate chains.
struct NerveContraction {
  ConnComplex quotient;            // C/D up to the horizon
  std::vector<Matrix> homotopy;    // t_m : (C/D)_m -> (C/D)_{m+1}, m < horizon
  std::vector<Matrix> unit_counit; // ζε : (C/D)_m -> (C/D)_m
};
// DomainError if the poset has no least element.
NerveContraction nerve_contraction(const FinPoset& p, std::size_t horizon, const Ring& ring = Ring::integers());

}  // namespace halg
