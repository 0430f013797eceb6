#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "halg/linalg.hpp"

namespace halg {

// Bounded connective complex of finitely generated free modules. Degrees
// outside 0..top are zero.
class ConnComplex {
 public:
  ConnComplex() = default;
  // diffs[n-1] is ∂_n : X_n -> X_{n-1} for n = 1..top. Checks shapes
  // (ShapeError) and ∂∘∂ = 0 (NotAComplex).
  ConnComplex(Ring ring, std::vector<std::size_t> ranks, std::vector<Matrix> diffs);
  static ConnComplex zero(const Ring& ring);

  const Ring& ring() const { return ring_; }
  std::size_t top() const { return ranks_.size() - 1; }
  const std::vector<std::size_t>& ranks() const { return ranks_; }
  std::size_t rank(std::size_t n) const { return n < ranks_.size() ? ranks_[n] : 0; }
  std::size_t total_rank() const;
  // ∂_n as a rank(n-1) x rank(n) matrix; zero outside 1..top.
  Matrix diff(std::size_t n) const;

  // Drops vanishing degrees above the last nonzero one.
  ConnComplex trimmed() const;
  // Keeps degrees 0..n only.
  ConnComplex truncated(std::size_t n) const;

  bool operator==(const ConnComplex& o) const;

 private:
  Ring ring_;
  std::vector<std::size_t> ranks_{0};
  std::vector<Matrix> diffs_;  // diffs_[n-1] = ∂_n
};

class ChainMap {
 public:
  ChainMap() = default;
  // components[n] : X_n -> Y_n for n = 0..max(tops); missing trailing
  // components are zero. Checks shapes and every commuting square.
  ChainMap(ConnComplex source, ConnComplex target, std::vector<Matrix> components);

  const ConnComplex& source() const { return source_; }
  const ConnComplex& target() const { return target_; }
  const Ring& ring() const { return source_.ring(); }
  std::size_t top() const { return std::max(source_.top(), target_.top()); }
  Matrix component(std::size_t n) const;

  bool operator==(const ChainMap& o) const;

 private:
  ConnComplex source_, target_;
  std::vector<Matrix> components_;
};

ConnComplex sphere(std::size_t n, const Ring& ring = Ring::integers());
// DomainError for n = 0.
ConnComplex disk(std::size_t n, const Ring& ring = Ring::integers());

HomologyGroup homology_at_degree(const ConnComplex& x, std::size_t n);
std::vector<HomologyGroup> homology(const ConnComplex& x);
bool is_exact(const ConnComplex& x);
// Basis of Z_n(X) = ker ∂_n.
Matrix cycle_basis(const ConnComplex& x, std::size_t n);

ChainMap identity_map(const ConnComplex& x);
ChainMap zero_map(const ConnComplex& x, const ConnComplex& y);
// g∘f
ChainMap compose(const ChainMap& g, const ChainMap& f);
ChainMap operator+(const ChainMap& a, const ChainMap& b);
ChainMap scaled(const ChainMap& f, const Scalar& c);

ConnComplex direct_sum(const ConnComplex& x, const ConnComplex& y);
ChainMap inclusion_first(const ConnComplex& x, const ConnComplex& y);   // X -> X⊕Y
ChainMap inclusion_second(const ConnComplex& x, const ConnComplex& y);  // Y -> X⊕Y
ChainMap projection_first(const ConnComplex& x, const ConnComplex& y);  // X⊕Y -> X
ChainMap projection_second(const ConnComplex& x, const ConnComplex& y); // X⊕Y -> Y
ChainMap direct_sum(const ChainMap& f, const ChainMap& g);

// Degree-n summand X_k ⊗ Y_l of a tensor product, starting at `offset`.
struct TensorBlock {
  std::size_t k = 0, l = 0, offset = 0;
};

struct TensorComplex {
  ConnComplex complex;
  // blocks[n] in increasing k; each block uses the Kronecker basis x_a⊗y_b
  // at offset + a·rank(Y_l) + b.
  std::vector<std::vector<TensorBlock>> blocks;
};

// ∂(x⊗y) = ∂x⊗y + (-1)^k x⊗∂y
TensorComplex tensor(const ConnComplex& x, const ConnComplex& y);
// f⊗g : X⊗Y -> X'⊗Y'
ChainMap tensor_maps(const ChainMap& f, const ChainMap& g);

// cone_n = X_{n-1} ⊕ Y_n with ∂ = [[-∂X, 0], [-f, ∂Y]].
ConnComplex mapping_cone(const ChainMap& f);

struct ModelClass {
  bool fibration = false;
  bool cofibration = false;
  bool weak_equivalence = false;
  bool trivial_fibration() const { return fibration && weak_equivalence; }
  bool trivial_cofibration() const { return cofibration && weak_equivalence; }
  bool operator==(const ModelClass&) const = default;
};

bool is_fibration(const ChainMap& f);       // surjective in degrees >= 1
bool is_cofibration(const ChainMap& f);     // injective with free cokernel
bool is_weak_equivalence(const ChainMap& f);  // exact mapping cone
ModelClass classify(const ChainMap& f);

struct Factorization {
  ChainMap kappa, eta;  // f = eta∘kappa
};

// kappa a trivial cofibration, eta a fibration. The middle object is X ⊕ P
// where P sums one disk D(n) per basis element of Y_n, n >= 1.
Factorization factor_trivcof_fib(const ChainMap& f);
// kappa a cofibration, eta a trivial fibration, built degree by degree.
Factorization factor_cof_trivfib(const ChainMap& f);

// A diagonal phi : B -> C with phi∘f = top and g∘phi = bottom, for f : A -> B
// a cofibration and g : C -> D a trivial fibration. SquareError if the square
// does not commute, ClassError if f or g is outside its class.
ChainMap lift_square(const ChainMap& f, const ChainMap& g, const ChainMap& top, const ChainMap& bottom);

// ι^n : S(n-1) -> D(n), n >= 1.
ChainMap sphere_disk_inclusion(std::size_t n, const Ring& ring = Ring::integers());

struct GeneratorCheck {
  std::string name;  // "lambda", "iota^n" (family X) or "kappa^n" (family Y)
  char family = 'X';
  std::size_t n = 0;
  bool pass = false;
};

struct RlpReport {
  std::vector<GeneratorCheck> checks;
  bool all_x_pass() const;
  bool all_y_pass() const;
};

// Decides the right lifting property of f against each generator up to
// max_n by a single surjectivity test per generator.
RlpReport rlp_generator_check(const ChainMap& f, std::size_t max_n);

}  // namespace halg
