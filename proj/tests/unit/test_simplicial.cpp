#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "halg/linalg.hpp"
#include "halg/simplicial.hpp"
#include "testkit.hpp"

using namespace halg;
using namespace halg::testkit;

namespace {

const Ring Z = Ring::integers();

bool zero_below(const std::vector<HomologyGroup>& h, std::size_t limit) {
  for (std::size_t n = 0; n < std::min(limit, h.size()); ++n)
    if (!h[n].is_zero()) return false;
  return true;
}

// Complex padded with zero ranks up to `top`, for comparing truncations.
bool same_up_to(const ConnComplex& a, const ConnComplex& b, std::size_t top) {
  for (std::size_t n = 0; n <= top; ++n) {
    if (a.rank(n) != b.rank(n)) return false;
    if (n && !(a.diff(n) == b.diff(n))) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("simplices and their boundaries") {
  for (std::size_t n = 0; n <= 4; ++n) {
    FinSimplicialSet s = simplex_set(n, 5);
    for (std::size_t m = 0; m <= 5; ++m) CHECK(s.count(m) == pascal(n + m + 1, n));
    CHECK(check_simplicial_identities(s).empty());
    if (n == 0) continue;
    FinSimplicialSet b = boundary_simplex_set(n, 5);
    for (std::size_t m = 0; m <= 5; ++m) CHECK(b.count(m) == pascal(n + m + 1, n) - pascal(m, n));
    CHECK(check_simplicial_identities(b).empty());
  }
  CHECK_THROWS_AS(boundary_simplex_set(0, 3), DomainError);
}

TEST_CASE("nerves, products and coproducts") {
  FinSimplicialSet n1 = nerve(FinPoset::chain(1), 4);
  CHECK(find_isomorphism(n1, simplex_set(1, 4)).has_value());
  CHECK_FALSE(find_isomorphism(n1, simplex_set(2, 4)).has_value());
  FinPoset p = FinPoset::chain(1), q = FinPoset::chain(2);
  FinSimplicialSet lhs = nerve(product(p, q), 3), rhs = product(nerve(p, 3), nerve(q, 3));
  CHECK(check_simplicial_identities(lhs).empty());
  CHECK(check_simplicial_identities(rhs).empty());
  CHECK(find_isomorphism(lhs, rhs).has_value());
  FinSimplicialSet co = coproduct(simplex_set(1, 3), simplex_set(0, 3));
  CHECK(check_simplicial_identities(co).empty());
  CHECK(co.count(2) == 4 + 1);
  CHECK_THROWS_AS(product(simplex_set(1, 2), simplex_set(1, 3)), ShapeError);
  // Δ¹ × Δ¹ has 4 vertices, 5 edges and 2 triangles that are nondegenerate
  FinSimplicialSet sq = product(simplex_set(1, 3), simplex_set(1, 3));
  std::vector<std::size_t> nondeg;
  for (std::size_t m = 0; m <= 3; ++m) {
    std::size_t c = 0;
    for (std::size_t i = 0; i < sq.count(m); ++i) c += !sq.is_degenerate(m, i);
    nondeg.push_back(c);
  }
  CHECK(nondeg == std::vector<std::size_t>{4, 5, 2, 0});
}

TEST_CASE("poset validation") {
  CHECK_THROWS_AS(FinPoset({"a", "b"}, {{true, true}, {true, true}}), DomainError);
  CHECK_THROWS_AS(FinPoset({"a", "b"}, {{true, false}}), DomainError);
  CHECK_THROWS_AS(FinPoset({"a", "b", "c"}, {{true, true, false}, {false, true, true}, {false, false, true}}), DomainError);
  CHECK_THROWS_AS(FinPoset({"a"}, {{false}}), DomainError);
  CHECK(FinPoset::chain(3).least_element() == 0u);
  CHECK_FALSE(FinPoset({"a", "b"}, {{true, false}, {false, true}}).least_element().has_value());
}

TEST_CASE("normalized chains of the 1-simplex") {
  for (const Ring& ring : {Z, Ring::rationals(), Ring::prime_field(5)}) {
    EmbeddedComplex e = nor(free_module(simplex_set(1, 3), ring));
    CHECK(e.complex.ranks() == std::vector<std::size_t>{2, 1, 0, 0});
    CHECK(e.complex.diff(1) == Matrix::from_rows(ring, {{1}, {-1}}));
  }
}

TEST_CASE("structure of DK modules") {
  Rng rng(31);
  for (const Ring& ring : {Z, Ring::prime_field(2)}) {
    for (int trial = 0; trial < 15; ++trial) {
      ConnComplex x = random_complex(rng, ring, 2, 2);
      CHECK(check_simplicial_identities(dk(x, 4)).empty());
      // functoriality of the structure maps: DK(θ∘η) = DK(η)·DK(θ)
      for (std::size_t n = 0; n <= 2; ++n)
        for (std::size_t m = 0; m <= 2; ++m)
          for (std::size_t k = 0; k <= 3; ++k)
            for (const auto& eta : enumerate_monotone_maps(n, m))
              for (const auto& theta : enumerate_monotone_maps(m, k))
                CHECK(dk_structure_map(x, compose(theta, eta)) == dk_structure_map(x, eta) * dk_structure_map(x, theta));
      for (std::size_t n = 0; n <= 3; ++n) {
        std::size_t size = 0;
        for (const auto& b : dk_blocks(x, n)) size += x.rank(b.surjection.target_top());
        CHECK(dk_structure_map(x, MonotoneMap::identity(n)) == Matrix::identity(ring, size));
      }
    }
  }
}

TEST_CASE("DK block order puts the identity block last") {
  ConnComplex x(Z, {1, 1, 1}, {Matrix::from_rows(Z, {{3}}), Matrix(Z, 1, 1)});
  auto blocks = dk_blocks(x, 2);
  REQUIRE(blocks.size() == 4);
  CHECK(blocks[0].surjection.values() == std::vector<std::size_t>{0, 0, 0});
  CHECK(blocks[1].surjection.values() == std::vector<std::size_t>{0, 0, 1});
  CHECK(blocks[2].surjection.values() == std::vector<std::size_t>{0, 1, 1});
  CHECK(blocks[3].surjection.values() == std::vector<std::size_t>{0, 1, 2});
  CHECK(dk_structure_map(x, face(2, 2)) == Matrix::from_rows(Z, {{1, -3, 0, 0}, {0, 0, 1, 0}}));
}

TEST_CASE("Dold-Kan round trip") {
  Rng rng(32);
  for (const Ring& ring : {Z, Ring::prime_field(2), Ring::rationals()}) {
    for (int trial = 0; trial < 25; ++trial) {
      ConnComplex x = random_complex(rng, ring, 3, 3);
      EmbeddedComplex e = nor(dk(x, x.top() + 1));
      CHECK(same_up_to(e.complex, x, x.top() + 1));
      // the embedding is the inclusion of the identity block
      for (std::size_t n = 0; n <= x.top(); ++n) {
        std::size_t total = e.embedding[n].rows();
        Matrix expected(ring, total, x.rank(n));
        expected.set_block(total - x.rank(n), 0, Matrix::identity(ring, x.rank(n)));
        CHECK(e.embedding[n] == expected);
      }
    }
  }
}

TEST_CASE("normalization of DK maps recovers the chain map") {
  Rng rng(33);
  for (int trial = 0; trial < 20; ++trial) {
    ConnComplex x = random_complex(rng, Z, 2, 2), y = random_complex(rng, Z, 2, 2);
    ChainMap f = random_chain_map(rng, x, y), g = random_homotopic_to_identity(rng, y);
    const std::size_t h = 3;
    SimplicialMap df = dk_map(f, h);
    CHECK(is_simplicial(df));
    CHECK(compose(dk_map(g, h), df) == dk_map(compose(g, f), h));
    CHECK(dk_map(identity_map(x), h) == identity_map(dk(x, h)));
    ChainMap back = nor_map(df);
    for (std::size_t n = 0; n <= f.top(); ++n) CHECK(back.component(n) == f.component(n));
  }
}

TEST_CASE("non-simplicial maps are rejected") {
  SimplicialModule m = free_module(simplex_set(1, 2), Z);
  std::vector<Matrix> comps;
  for (std::size_t n = 0; n <= 2; ++n) comps.push_back(Matrix::identity(Z, m.rank(n)));
  comps[0] = comps[0].scaled(Scalar(2));
  SimplicialMap bad(m, m, comps);
  CHECK_FALSE(is_simplicial(bad));
  CHECK_THROWS_AS(nor_map(bad), NotSimplicial);
}

TEST_CASE("identity checker reports corrupted structure maps") {
  SimplicialModule m = free_module(simplex_set(2, 3), Z);
  CHECK(check_simplicial_identities(m).empty());
  m.mutable_face(2, 0) = m.face(2, 0).scaled(Scalar(-1));
  auto v = check_simplicial_identities(m);
  CHECK_FALSE(v.empty());
  bool saw_dd = false;
  for (const auto& x : v) saw_dd = saw_dd || x.relation == "dd";
  CHECK(saw_dd);
}

TEST_CASE("Moore, normalized and degenerate complexes") {
  Rng rng(34);
  std::vector<SimplicialModule> modules{free_module(simplex_set(2, 4), Z), free_module(boundary_simplex_set(2, 4), Z),
                                        free_module(nerve(FinPoset({"a", "b"}, {{true, false}, {false, true}}), 4), Z),
                                        free_module(product(simplex_set(1, 4), boundary_simplex_set(2, 4)), Z)};
  for (int i = 0; i < 4; ++i) modules.push_back(dk(random_complex(rng, Z, 2, 2), 4));
  for (const auto& m : modules) {
    const std::size_t h = m.horizon();
    auto moore_h = homology(moore(m)), nor_h = homology(nor(m).complex);
    for (std::size_t n = 0; n < h; ++n) CHECK(moore_h[n] == nor_h[n]);
    CHECK(zero_below(homology(degenerate_part(m).complex), h));
    // Moore ranks split as normalized plus degenerate
    EmbeddedComplex d = degenerate_part(m), nm = nor(m);
    for (std::size_t n = 0; n <= h; ++n) CHECK(nm.complex.rank(n) + d.complex.rank(n) == m.rank(n));
  }
  // the boundary of the 2-simplex is a circle
  auto circle = homology(nor(free_module(boundary_simplex_set(2, 4), Z)).complex);
  CHECK(circle[0].free_rank == 1);
  CHECK(circle[1].free_rank == 1);
  CHECK(circle[2].is_zero());
}

TEST_CASE("tensor products of simplicial modules") {
  SimplicialModule a = free_module(simplex_set(1, 3), Z), b = free_module(boundary_simplex_set(2, 3), Z);
  SimplicialModule t = tensor_sm(a, b);
  CHECK(check_simplicial_identities(t).empty());
  for (std::size_t n = 0; n <= 3; ++n) CHECK(t.rank(n) == a.rank(n) * b.rank(n));
  // free modules turn products into tensor products
  SimplicialModule p = free_module(product(simplex_set(1, 3), boundary_simplex_set(2, 3)), Z);
  CHECK(p.ranks() == t.ranks());
  auto hp = homology(nor(p).complex), ht = homology(nor(t).complex);
  for (std::size_t n = 0; n < 3; ++n) CHECK(hp[n] == ht[n]);
  SimplicialModule s = direct_sum(a, b);
  CHECK(check_simplicial_identities(s).empty());
  CHECK_THROWS_AS(copower(free_module(simplex_set(1, 4), Z), simplex_set(1, 3)), DomainError);
}

TEST_CASE("cylinder") {
  Rng rng(35);
  for (int trial = 0; trial < 8; ++trial) {
    ConnComplex x = random_complex(rng, Z, 2, 2);
    const std::size_t h = x.top() + 2;
    SimplicialModule m = dk(x, h);
    Cylinder c = cylinder(m);
    CHECK(check_simplicial_identities(c.cylinder).empty());
    CHECK(is_simplicial(c.kappa));
    CHECK(is_simplicial(c.xi));
    ChainMap xi = nor_map(c.xi), kappa = nor_map(c.kappa);
    // ξ is a weak equivalence below the horizon and κ is injective with free cokernel
    CHECK(zero_below(homology(mapping_cone(xi)), h));
    CHECK(is_cofibration(kappa));
    // ξκ is the fold map M ⊕ M -> M
    SimplicialMap fold = compose(c.xi, c.kappa);
    for (std::size_t n = 0; n <= h; ++n)
      CHECK(fold.component(n) == hstack(Matrix::identity(Z, m.rank(n)), Matrix::identity(Z, m.rank(n))));
  }
}

TEST_CASE("nerves of posets with a least element are contractible") {
  auto posets = posets_with_least_element(4);
  CHECK(posets.size() == 1 + 1 + 2 + 5);
  for (const auto& p : posets) {
    auto h = homology(nor(free_module(nerve(p, 4), Z)).complex);
    CHECK(h[0].free_rank == 1);
    CHECK(h[0].torsion.empty());
    for (std::size_t n = 1; n < 4; ++n) CHECK(h[n].is_zero());
    NerveContraction nc = nerve_contraction(p, 4);
    const ConnComplex& q = nc.quotient;
    CHECK(homology(q)[0].free_rank == 1);
    for (std::size_t m = 0; m < 4; ++m) {
      Matrix lhs = Matrix::identity(Z, q.rank(m)) - nc.unit_counit[m];
      Matrix rhs = q.diff(m + 1) * nc.homotopy[m];
      if (m > 0) rhs = rhs + nc.homotopy[m - 1] * q.diff(m);
      CHECK(lhs == rhs);
    }
  }
  FinPoset discrete({"a", "b"}, {{true, false}, {false, true}});
  CHECK_THROWS_AS(nerve_contraction(discrete, 3), DomainError);
  CHECK(homology(nor(free_module(nerve(discrete, 3), Z)).complex)[0].free_rank == 2);
}

TEST_CASE("normalized and degenerate parts split the Moore complex over Z") {
  Rng rng(37);
  std::vector<SimplicialModule> modules{free_module(simplex_set(3, 4), Z), free_module(boundary_simplex_set(3, 4), Z),
                                        free_module(nerve(FinPoset::chain(2), 4), Z)};
  for (int i = 0; i < 6; ++i) modules.push_back(dk(random_complex(rng, Z, 3, 2), 4));
  for (const auto& m : modules) {
    CHECK(check_simplicial_identities(m).empty());
    EmbeddedComplex nm = nor(m), d = degenerate_part(m);
    for (std::size_t n = 0; n <= m.horizon(); ++n) {
      // [Nor | D] is square and unimodular: the two parts span and meet trivially
      Matrix both(Z, m.rank(n), nm.complex.rank(n) + d.complex.rank(n));
      both.set_block(0, 0, nm.embedding[n]);
      both.set_block(0, nm.complex.rank(n), d.embedding[n]);
      REQUIRE(both.cols() == both.rows());
      CHECK(rank(both) == both.rows());
      for (const auto& f : invariant_factors(both)) CHECK(f == 1);
    }
  }
}

TEST_CASE("normalized chains of simplices") {
  for (std::size_t n = 0; n <= 4; ++n) {
    const std::size_t h = 5;
    ConnComplex c = nor(free_module(simplex_set(n, h), Z)).complex;
    for (std::size_t m = 0; m <= h; ++m) CHECK(c.rank(m) == pascal(n + 1, m + 1));
    auto hom = homology(c);
    CHECK(hom[0] == HomologyGroup{1, {}});
    for (std::size_t m = 1; m < h; ++m) CHECK(hom[m].is_zero());
  }
}
