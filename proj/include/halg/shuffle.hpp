#pragma once

#include <vector>

#include "halg/complex.hpp"
#include "halg/delta.hpp"
#include "halg/simplicial.hpp"

namespace halg {

// Summand X_k ⊗ Y_l of X⊠Y indexed by a jointly monic pair (f, g).
struct ShuffleBlock {
  SurjectionPair pair;
  std::size_t offset = 0;
  std::size_t k() const { return pair.k(); }
  std::size_t l() const { return pair.l(); }
};

struct ShuffleComplex {
  ConnComplex underlying;
  std::vector<std::vector<ShuffleBlock>> blocks;  // per degree, in pair order
};

// Degree n is ⊕ X_k ⊗ Y_l over jointly monic (f, g) out of [n]; the
// differential is Σ (-1)^i d_i ⊗ d_i with each face taken from DK.
ShuffleComplex shuffle_product(const ConnComplex& x, const ConnComplex& y);
// X⊠θ and θ⊠Y, blockwise 1⊗θ_l and θ_k⊗1.
ChainMap shuffle_map_right(const ConnComplex& x, const ChainMap& theta);
ChainMap shuffle_map_left(const ChainMap& theta, const ConnComplex& y);

// ∇(x⊗y) = Σ sgn(ν_{f,g}) λ_{f,g}(x⊗y) over pairs with k + l = n.
ChainMap ez_map(const ConnComplex& x, const ConnComplex& y);

struct NorTensorReport {
  std::vector<std::size_t> tensor_ranks, shuffle_ranks;
  std::vector<HomologyGroup> tensor_homology, shuffle_homology;
  bool pass = false;
};
// Compares nor(M ⊗ N) with nor(M) ⊠ nor(N) through degree horizon.
NorTensorReport nor_tensor_compare(const SimplicialModule& m, const SimplicialModule& n);

struct BoxtimesReport {
  ModelClass with_disk;    // μ ⊠ D(n)
  ModelClass with_sphere;  // μ ⊠ S(0)
};
BoxtimesReport boxtimes_generator_tests(const ChainMap& mu, std::size_t n);

}  // namespace halg
