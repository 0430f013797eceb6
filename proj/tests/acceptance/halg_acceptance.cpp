// Runs each acceptance criterion and prints one PASS/FAIL line per criterion.
// Exit status is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "halg/shuffle.hpp"
#include "testkit.hpp"

using namespace halg;
using namespace halg::testkit;

namespace {

const Ring Z = Ring::integers();

struct Outcome {
  std::size_t failures = 0;
  std::ostringstream detail;
  void expect(bool ok, const std::string& what) {
    if (ok) return;
    if (failures++ < 3) detail << " [" << what << "]";
  }
};

int run(int id, const std::string& title, double limit_s, const std::function<void(Outcome&)>& body) {
  Outcome out;
  auto start = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.expect(false, std::string("exception: ") + e.what());
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_s > 0) out.expect(secs < limit_s, "over time limit");
  bool pass = out.failures == 0;
  std::printf("%s %2d %s (%.2f s%s)%s%s\n", pass ? "PASS" : "FAIL", id, title.c_str(), secs,
              limit_s > 0 ? (", limit " + std::to_string(int(limit_s)) + " s").c_str() : "",
              pass ? "" : (" failures=" + std::to_string(out.failures)).c_str(), out.detail.str().c_str());
  std::fflush(stdout);
  return pass ? 0 : 1;
}

bool has_nonzero_diff(const ConnComplex& x) {
  for (std::size_t n = 1; n <= x.top(); ++n)
    if (!x.diff(n).is_zero()) return true;
  return false;
}

bool is_zero_map(const ChainMap& f) {
  for (std::size_t n = 0; n <= f.top(); ++n)
    if (!f.component(n).is_zero()) return false;
  return true;
}

std::size_t block_offset(const std::vector<DkBlock>& blocks, const std::vector<std::size_t>& label) {
  for (const auto& b : blocks)
    if (b.surjection.values() == label) return b.offset;
  throw IndexError("no block with the requested surjection");
}

// The level-2 to level-1 map for the face missing 2, with columns taken in
// the order (000),(011),(001),(012) and rows in the order (00),(01).
Matrix face_by_labels(const ConnComplex& x) {
  Matrix full = dk_structure_map(x, face(2, 2));
  auto cols = dk_blocks(x, 2), rows = dk_blocks(x, 1);
  const std::vector<std::vector<std::size_t>> col_labels{{0, 0, 0}, {0, 1, 1}, {0, 0, 1}, {0, 1, 2}};
  const std::vector<std::vector<std::size_t>> row_labels{{0, 0}, {0, 1}};
  Matrix out(x.ring(), 2, 4);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      out(i, j) = full(block_offset(rows, row_labels[i]), block_offset(cols, col_labels[j]));
  return out;
}

void criterion_dk_example(Outcome& out) {
  std::vector<ConnComplex> cases;
  for (const Ring& ring : {Z, Ring::rationals(), Ring::prime_field(5), Ring::prime_field(2)})
    for (long a = -4; a <= 4; ++a) {
      Matrix m = Matrix::from_rows(ring, {{a}}), zero(ring, 1, 1);
      cases.emplace_back(ring, std::vector<std::size_t>{1, 1, 1}, std::vector<Matrix>{m, zero});
      cases.emplace_back(ring, std::vector<std::size_t>{1, 1, 1}, std::vector<Matrix>{zero, m});
      cases.emplace_back(ring, std::vector<std::size_t>{1, 1, 1, 1}, std::vector<Matrix>{m, zero, m});
    }
  for (const auto& x : cases) {
    const Ring& R = x.ring();
    Matrix expected(R, 2, 4);
    expected(0, 0) = 1;
    expected(1, 1) = 1;
    expected(0, 2) = R.neg(x.diff(1)(0, 0));
    expected(1, 3) = x.diff(2)(0, 0);
    out.expect(face_by_labels(x) == expected, "block matrix mismatch");
  }
  out.detail << " complexes=" << cases.size();
}

void criterion_counts(Outcome& out) {
  for (std::size_t n = 0; n <= 4; ++n) {
    FinSimplicialSet s = simplex_set(n, 5);
    for (std::size_t m = 0; m <= 5; ++m)
      out.expect(s.count(m) == pascal(n + m + 1, n), "simplex cells n=" + std::to_string(n) + " m=" + std::to_string(m));
  }
  for (std::size_t p = 0; p <= 8; ++p)
    for (std::size_t q = 0; p + q <= 8; ++q) {
      out.expect(enumerate_shuffles(p, q).size() == pascal(p + q, p), "shuffles p=" + std::to_string(p));
      out.expect(shuffle_count(p, q) == Integer(std::to_string(pascal(p + q, p))), "shuffle_count");
    }
}

void criterion_nerves(Outcome& out) {
  auto posets = posets_with_least_element(4);
  out.expect(posets.size() == 9, "expected 9 posets");
  for (const auto& p : posets) {
    auto h = homology(nor(free_module(nerve(p, 4), Z)).complex);
    out.expect(h[0] == HomologyGroup{1, {}}, "H0 != Z");
    for (std::size_t n = 1; n < 4; ++n) out.expect(h[n].is_zero(), "higher homology");
    NerveContraction nc = nerve_contraction(p, 4);
    const ConnComplex& q = nc.quotient;
    for (std::size_t m = 0; m < 4; ++m) {
      Matrix lhs = Matrix::identity(Z, q.rank(m)) - nc.unit_counit[m];
      Matrix rhs = q.diff(m + 1) * nc.homotopy[m];
      if (m > 0) rhs = rhs + nc.homotopy[m - 1] * q.diff(m);
      out.expect(lhs == rhs, "contraction identity");
    }
  }
  out.detail << " posets=" << posets.size();
}

void criterion_nor_simplex(Outcome& out) {
  for (const Ring& ring : {Z, Ring::rationals(), Ring::prime_field(5)}) {
    ConnComplex c = nor(free_module(simplex_set(1, 3), ring)).complex;
    out.expect(c.ranks() == std::vector<std::size_t>{2, 1, 0, 0}, "ranks over " + ring.tag());
    out.expect(c.diff(1) == Matrix::from_rows(ring, {{1}, {-1}}), "differential over " + ring.tag());
  }
}

void criterion_dold_kan(Outcome& out) {
  Rng rng(1001);
  std::size_t nontrivial = 0, total = 0;
  for (const Ring& ring : {Z, Ring::prime_field(2)}) {
    for (int trial = 0; trial < 200; ++trial, ++total) {
      ConnComplex x = random_complex(rng, ring, 3, 3);
      nontrivial += has_nonzero_diff(x);
      std::size_t h = x.top() + 1;
      EmbeddedComplex e = nor(dk(x, h));
      bool ok = e.complex.rank(h) == 0;
      for (std::size_t n = 0; n <= x.top(); ++n) {
        ok = ok && e.complex.rank(n) == x.rank(n) && (n == 0 || e.complex.diff(n) == x.diff(n));
        std::size_t rows = e.embedding[n].rows();
        Matrix block(ring, rows, x.rank(n));
        block.set_block(rows - x.rank(n), 0, Matrix::identity(ring, x.rank(n)));
        ok = ok && e.embedding[n] == block;
      }
      out.expect(ok, "round trip over " + ring.tag());
    }
  }
  out.detail << " complexes=" << total << " with_nonzero_differential=" << nontrivial;
}

void criterion_eilenberg_zilber(Outcome& out) {
  Rng rng(1002);
  std::size_t torsion_cases = 0;
  for (int trial = 0; trial < 100; ++trial) {
    ConnComplex x = random_complex(rng, Z, 2, 2), y = random_complex(rng, Z, 2, 2);
    const ConnComplex b = shuffle_product(x, y).underlying;
    for (std::size_t n = 2; n <= b.top(); ++n) out.expect((b.diff(n - 1) * b.diff(n)).is_zero(), "d squared");
    ChainMap nabla = ez_map(x, y);
    const ConnComplex& t = nabla.source();
    for (std::size_t n = 1; n <= nabla.top(); ++n)
      out.expect(b.diff(n) * nabla.component(n) == nabla.component(n - 1) * t.diff(n), "not a chain map");
    out.expect(is_exact(mapping_cone(nabla)), "cone not exact");
    auto ht = homology(tensor(x, y).complex), hb = homology(b);
    out.expect(ht == hb, "homology differs");
    for (const auto& g : hb) torsion_cases += !g.torsion.empty();
  }
  out.detail << " pairs=100 groups_with_torsion=" << torsion_cases;
}

void criterion_nor_tensor(Outcome& out) {
  Rng rng(1003);
  const std::size_t h = 4;
  for (int trial = 0; trial < 50; ++trial) {
    ConnComplex x = random_complex(rng, Z, 2, 2), y = random_complex(rng, Z, 2, 2);
    ConnComplex left = nor(tensor_sm(dk(x, h), dk(y, h))).complex;
    ConnComplex right = shuffle_product(x, y).underlying.truncated(h);
    bool ok = true;
    for (std::size_t d = 0; d <= h; ++d) ok = ok && left.rank(d) == right.rank(d);
    out.expect(ok, "ranks differ");
    out.expect(homology(left) == homology(right), "homology differs");
    out.expect(nor_tensor_compare(dk(x, h), dk(y, h)).pass, "library comparison failed");
  }
  out.detail << " pairs=50 horizon=" << h;
}

void criterion_factorizations(Outcome& out) {
  Rng rng(1004);
  std::size_t zero_maps = 0, weak = 0;
  for (int trial = 0; trial < 100; ++trial) {
    ChainMap f = random_map(rng, Z, 3, 3);
    zero_maps += is_zero_map(f);
    weak += is_weak_equivalence(f);
    Factorization a = factor_trivcof_fib(f);
    out.expect(compose(a.eta, a.kappa) == f, "trivcof-fib does not compose");
    out.expect(classify(a.kappa).trivial_cofibration(), "kappa not a trivial cofibration");
    out.expect(classify(a.eta).fibration, "eta not a fibration");
    Factorization b = factor_cof_trivfib(f);
    out.expect(compose(b.eta, b.kappa) == f, "cof-trivfib does not compose");
    out.expect(classify(b.kappa).cofibration, "kappa not a cofibration");
    out.expect(classify(b.eta).trivial_fibration(), "eta not a trivial fibration");
  }
  out.detail << " maps=100 zero=" << zero_maps << " weak_equivalences=" << weak;
}

void criterion_lifting(Outcome& out) {
  Rng rng(1005);
  for (int trial = 0; trial < 50; ++trial) {
    ChainMap f = factor_cof_trivfib(random_map(rng, Z, 2, 2)).kappa;
    ChainMap g = factor_cof_trivfib(random_map(rng, Z, 2, 2)).eta;
    ChainMap bottom = random_chain_map(rng, f.target(), g.target());
    // a commuting top edge, obtained by lifting against 0 -> A
    ConnComplex zero(Z, {0}, {});
    ChainMap top = lift_square(zero_map(zero, f.source()), g, zero_map(zero, g.source()), compose(bottom, f));
    ChainMap phi = lift_square(f, g, top, bottom);
    out.expect(compose(phi, f) == top, "upper triangle");
    out.expect(compose(g, phi) == bottom, "lower triangle");
    for (std::size_t n = 1; n <= phi.top(); ++n)
      out.expect(phi.target().diff(n) * phi.component(n) == phi.component(n - 1) * phi.source().diff(n),
                 "lift is not a chain map");
  }
  out.detail << " squares=50";
}

void criterion_rlp(Outcome& out) {
  Rng rng(1006);
  std::size_t fib = 0, trivfib = 0;
  for (int trial = 0; trial < 100; ++trial) {
    ChainMap f = random_map(rng, Z, 3, 3);
    RlpReport rep = rlp_generator_check(f, f.top() + 1);
    ModelClass cls = classify(f);
    fib += cls.fibration;
    trivfib += cls.trivial_fibration();
    out.expect(rep.all_x_pass() == cls.trivial_fibration(), "X generators disagree");
    out.expect(rep.all_y_pass() == cls.fibration, "Y generators disagree");
  }
  out.detail << " maps=100 fibrations=" << fib << " trivial_fibrations=" << trivfib;
}

void criterion_boxtimes(Outcome& out) {
  Rng rng(1007);
  for (int trial = 0; trial < 25; ++trial) {
    ChainMap mu = factor_cof_trivfib(random_map(rng, Z, 2, 2)).kappa;
    out.expect(classify(mu).cofibration, "generated map is not a cofibration");
    for (std::size_t n = 1; n <= 3; ++n)
      out.expect(classify(shuffle_map_left(mu, disk(n))).trivial_cofibration(), "mu boxtimes D(n)");
  }
  for (int trial = 0; trial < 25; ++trial) {
    ChainMap mu = factor_trivcof_fib(random_map(rng, Z, 2, 2)).kappa;
    out.expect(classify(mu).trivial_cofibration(), "generated map is not a trivial cofibration");
    out.expect(classify(shuffle_map_left(mu, sphere(0))).trivial_cofibration(), "mu boxtimes S(0)");
  }
  out.detail << " cofibrations=25 trivial_cofibrations=25";
}

void criterion_oracle(Outcome& out) {
  Rng rng(1008);
  std::size_t checked = 0, nonzero_homology = 0;
  for (const Ring& ring : {Ring::prime_field(2), Ring::prime_field(3)}) {
    for (int trial = 0; trial < 400; ++trial) {
      ConnComplex x = random_complex(rng, ring, 3, 3);
      std::size_t total = 0;
      for (std::size_t n = 0; n <= x.top(); ++n) total += x.rank(n);
      if (total > 6) continue;
      ++checked;
      auto brute = brute_homology_dims(x);
      for (std::size_t n = 0; n <= x.top(); ++n) {
        HomologyGroup h = homology_at_degree(x, n);
        out.expect(h.torsion.empty() && h.free_rank == brute[n], "dimension mismatch over " + ring.tag());
        nonzero_homology += h.free_rank > 0;
      }
    }
  }
  out.detail << " complexes=" << checked << " nonzero_groups=" << nonzero_homology;
}

}  // namespace

int main() {
  int failed = 0;
  failed += run(1, "DK face map in block-label order", 1, criterion_dk_example);
  failed += run(2, "simplex and shuffle counts", 0, criterion_counts);
  failed += run(3, "nerves of posets with a least element", 30, criterion_nerves);
  failed += run(4, "normalized chains of the 1-simplex over Z, Q, F5", 0, criterion_nor_simplex);
  failed += run(5, "Dold-Kan round trip over Z and F2", 0, criterion_dold_kan);
  failed += run(6, "Eilenberg-Zilber suite", 60, criterion_eilenberg_zilber);
  failed += run(7, "normalized levelwise tensor vs shuffle product", 0, criterion_nor_tensor);
  failed += run(8, "both factorizations", 0, criterion_factorizations);
  failed += run(9, "lifting in generated squares", 0, criterion_lifting);
  failed += run(10, "generator lifting tests vs classify", 0, criterion_rlp);
  failed += run(11, "shuffle with disks and S(0) keeps trivial cofibrations", 0, criterion_boxtimes);
  failed += run(12, "homology vs subspace enumeration over F2 and F3", 0, criterion_oracle);
  std::printf("%d of 12 criteria failed\n", failed);
  return failed;
}
