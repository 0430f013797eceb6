#include "halg/complex.hpp"

#include <map>
#include <utility>

namespace halg {

// ---------------------------------------------------------------- complexes

ConnComplex::ConnComplex(Ring ring, std::vector<std::size_t> ranks, std::vector<Matrix> diffs)
    : ring_(std::move(ring)), ranks_(std::move(ranks)), diffs_(std::move(diffs)) {
  if (ranks_.empty()) ranks_.push_back(0);
  if (diffs_.size() > top()) throw ShapeError("more differentials than degrees");
  while (diffs_.size() < top()) {
    std::size_t n = diffs_.size() + 1;
    diffs_.emplace_back(ring_, ranks_[n - 1], ranks_[n]);
  }
  for (std::size_t n = 1; n <= top(); ++n) {
    const Matrix& d = diffs_[n - 1];
    if (!(d.ring() == ring_)) throw RingError("differential " + std::to_string(n) + " has the wrong ring");
    if (d.rows() != ranks_[n - 1] || d.cols() != ranks_[n])
      throw ShapeError("differential " + std::to_string(n) + " has shape " + std::to_string(d.rows()) + "x" +
                       std::to_string(d.cols()) + ", expected " + std::to_string(ranks_[n - 1]) + "x" +
                       std::to_string(ranks_[n]));
  }
  for (std::size_t n = 2; n <= top(); ++n)
    if (!(diffs_[n - 2] * diffs_[n - 1]).is_zero())
      throw NotAComplex("d_" + std::to_string(n - 1) + " * d_" + std::to_string(n) + " is nonzero");
}

ConnComplex ConnComplex::zero(const Ring& ring) { return ConnComplex(ring, {0}, {}); }

std::size_t ConnComplex::total_rank() const {
  std::size_t s = 0;
  for (auto r : ranks_) s += r;
  return s;
}

Matrix ConnComplex::diff(std::size_t n) const {
  if (n >= 1 && n <= top()) return diffs_[n - 1];
  return Matrix(ring_, n == 0 ? 0 : rank(n - 1), rank(n));
}

ConnComplex ConnComplex::trimmed() const {
  std::size_t t = top();
  while (t > 0 && ranks_[t] == 0) --t;
  return truncated(t);
}

ConnComplex ConnComplex::truncated(std::size_t n) const {
  std::vector<std::size_t> r;
  std::vector<Matrix> d;
  for (std::size_t i = 0; i <= n; ++i) {
    r.push_back(rank(i));
    if (i >= 1) d.push_back(diff(i));
  }
  return ConnComplex(ring_, std::move(r), std::move(d));
}

bool ConnComplex::operator==(const ConnComplex& o) const {
  return ring_ == o.ring_ && ranks_ == o.ranks_ && diffs_ == o.diffs_;
}

// --------------------------------------------------------------- chain maps

ChainMap::ChainMap(ConnComplex source, ConnComplex target, std::vector<Matrix> components)
    : source_(std::move(source)), target_(std::move(target)), components_(std::move(components)) {
  const Ring& R = source_.ring();
  if (!(R == target_.ring())) throw RingError("chain map between complexes over different rings");
  std::size_t t = top();
  if (components_.size() > t + 1) throw ShapeError("more components than degrees");
  while (components_.size() < t + 1) {
    std::size_t n = components_.size();
    components_.emplace_back(R, target_.rank(n), source_.rank(n));
  }
  for (std::size_t n = 0; n <= t; ++n) {
    const Matrix& f = components_[n];
    if (!(f.ring() == R)) throw RingError("component " + std::to_string(n) + " has the wrong ring");
    if (f.rows() != target_.rank(n) || f.cols() != source_.rank(n))
      throw ShapeError("component " + std::to_string(n) + " has shape " + std::to_string(f.rows()) + "x" +
                       std::to_string(f.cols()) + ", expected " + std::to_string(target_.rank(n)) + "x" +
                       std::to_string(source_.rank(n)));
  }
  for (std::size_t n = 1; n <= t; ++n)
    if (!(components_[n - 1] * source_.diff(n) == target_.diff(n) * components_[n]))
      throw DomainError("not a chain map: square at degree " + std::to_string(n) + " does not commute");
}

Matrix ChainMap::component(std::size_t n) const {
  if (n < components_.size()) return components_[n];
  return Matrix(ring(), target_.rank(n), source_.rank(n));
}

bool ChainMap::operator==(const ChainMap& o) const {
  return source_ == o.source_ && target_ == o.target_ && components_ == o.components_;
}

// ------------------------------------------------------ standard complexes

ConnComplex sphere(std::size_t n, const Ring& ring) {
  std::vector<std::size_t> r(n + 1, 0);
  r[n] = 1;
  return ConnComplex(ring, r, {});
}

ConnComplex disk(std::size_t n, const Ring& ring) {
  if (n == 0) throw DomainError("disk(0) is not defined");
  std::vector<std::size_t> r(n + 1, 0);
  r[n] = r[n - 1] = 1;
  std::vector<Matrix> d;
  for (std::size_t i = 1; i <= n; ++i) d.emplace_back(ring, r[i - 1], r[i]);
  d[n - 1] = Matrix::identity(ring, 1);
  return ConnComplex(ring, r, std::move(d));
}

ChainMap sphere_disk_inclusion(std::size_t n, const Ring& ring) {
  if (n == 0) throw DomainError("sphere_disk_inclusion needs n >= 1");
  ConnComplex s = sphere(n - 1, ring), d = disk(n, ring);
  std::vector<Matrix> c;
  for (std::size_t i = 0; i <= n; ++i) c.emplace_back(ring, d.rank(i), s.rank(i));
  c[n - 1] = Matrix::identity(ring, 1);
  return ChainMap(s, d, std::move(c));
}

// ----------------------------------------------------------------- homology

Matrix cycle_basis(const ConnComplex& x, std::size_t n) { return kernel_basis(x.diff(n)); }

HomologyGroup homology_at_degree(const ConnComplex& x, std::size_t n) {
  return homology_at(x.diff(n + 1), x.diff(n));
}

std::vector<HomologyGroup> homology(const ConnComplex& x) {
  std::vector<HomologyGroup> h;
  for (std::size_t n = 0; n <= x.top(); ++n) h.push_back(homology_at_degree(x, n));
  return h;
}

bool is_exact(const ConnComplex& x) {
  for (std::size_t n = 0; n <= x.top(); ++n)
    if (!homology_at_degree(x, n).is_zero()) return false;
  return true;
}

// ------------------------------------------------------- map arithmetic

ChainMap identity_map(const ConnComplex& x) {
  std::vector<Matrix> c;
  for (std::size_t n = 0; n <= x.top(); ++n) c.push_back(Matrix::identity(x.ring(), x.rank(n)));
  return ChainMap(x, x, std::move(c));
}

ChainMap zero_map(const ConnComplex& x, const ConnComplex& y) { return ChainMap(x, y, {}); }

ChainMap compose(const ChainMap& g, const ChainMap& f) {
  if (!(f.target() == g.source())) throw ShapeError("compose: target of first map is not source of second");
  std::vector<Matrix> c;
  std::size_t t = std::max(f.source().top(), g.target().top());
  for (std::size_t n = 0; n <= t; ++n) c.push_back(g.component(n) * f.component(n));
  return ChainMap(f.source(), g.target(), std::move(c));
}

ChainMap operator+(const ChainMap& a, const ChainMap& b) {
  if (!(a.source() == b.source()) || !(a.target() == b.target())) throw ShapeError("sum of maps with different ends");
  std::vector<Matrix> c;
  for (std::size_t n = 0; n <= a.top(); ++n) c.push_back(a.component(n) + b.component(n));
  return ChainMap(a.source(), a.target(), std::move(c));
}

ChainMap scaled(const ChainMap& f, const Scalar& s) {
  std::vector<Matrix> c;
  for (std::size_t n = 0; n <= f.top(); ++n) c.push_back(f.component(n).scaled(s));
  return ChainMap(f.source(), f.target(), std::move(c));
}

// ------------------------------------------------------------ direct sums

ConnComplex direct_sum(const ConnComplex& x, const ConnComplex& y) {
  if (!(x.ring() == y.ring())) throw RingError("direct sum over different rings");
  std::size_t t = std::max(x.top(), y.top());
  std::vector<std::size_t> r;
  std::vector<Matrix> d;
  for (std::size_t n = 0; n <= t; ++n) {
    r.push_back(x.rank(n) + y.rank(n));
    if (n >= 1) d.push_back(direct_sum(x.diff(n), y.diff(n)));
  }
  return ConnComplex(x.ring(), std::move(r), std::move(d));
}

namespace {

enum class Slot { First, Second };

ChainMap sum_inclusion(const ConnComplex& x, const ConnComplex& y, Slot slot) {
  ConnComplex s = direct_sum(x, y);
  const ConnComplex& part = slot == Slot::First ? x : y;
  std::vector<Matrix> c;
  for (std::size_t n = 0; n <= s.top(); ++n) {
    Matrix m(x.ring(), s.rank(n), part.rank(n));
    m.set_block(slot == Slot::First ? 0 : x.rank(n), 0, Matrix::identity(x.ring(), part.rank(n)));
    c.push_back(std::move(m));
  }
  return ChainMap(part, s, std::move(c));
}

ChainMap sum_projection(const ConnComplex& x, const ConnComplex& y, Slot slot) {
  ConnComplex s = direct_sum(x, y);
  const ConnComplex& part = slot == Slot::First ? x : y;
  std::vector<Matrix> c;
  for (std::size_t n = 0; n <= s.top(); ++n) {
    Matrix m(x.ring(), part.rank(n), s.rank(n));
    m.set_block(0, slot == Slot::First ? 0 : x.rank(n), Matrix::identity(x.ring(), part.rank(n)));
    c.push_back(std::move(m));
  }
  return ChainMap(s, part, std::move(c));
}

}  // namespace

ChainMap inclusion_first(const ConnComplex& x, const ConnComplex& y) { return sum_inclusion(x, y, Slot::First); }
ChainMap inclusion_second(const ConnComplex& x, const ConnComplex& y) { return sum_inclusion(x, y, Slot::Second); }
ChainMap projection_first(const ConnComplex& x, const ConnComplex& y) { return sum_projection(x, y, Slot::First); }
ChainMap projection_second(const ConnComplex& x, const ConnComplex& y) { return sum_projection(x, y, Slot::Second); }

ChainMap direct_sum(const ChainMap& f, const ChainMap& g) {
  ConnComplex s = direct_sum(f.source(), g.source()), t = direct_sum(f.target(), g.target());
  std::vector<Matrix> c;
  for (std::size_t n = 0; n <= std::max(s.top(), t.top()); ++n)
    c.push_back(direct_sum(f.component(n), g.component(n)));
  return ChainMap(s, t, std::move(c));
}

// ------------------------------------------------------------------ tensor

TensorComplex tensor(const ConnComplex& x, const ConnComplex& y) {
  if (!(x.ring() == y.ring())) throw RingError("tensor product over different rings");
  const Ring& R = x.ring();
  std::size_t t = x.top() + y.top();
  TensorComplex out;
  std::vector<std::size_t> ranks(t + 1, 0);
  out.blocks.resize(t + 1);
  for (std::size_t n = 0; n <= t; ++n)
    for (std::size_t k = n > y.top() ? n - y.top() : 0; k <= std::min(n, x.top()); ++k) {
      out.blocks[n].push_back({k, n - k, ranks[n]});
      ranks[n] += x.rank(k) * y.rank(n - k);
    }
  auto find = [&](std::size_t n, std::size_t k) -> const TensorBlock* {
    for (const auto& b : out.blocks[n])
      if (b.k == k) return &b;
    return nullptr;
  };
  std::vector<Matrix> diffs;
  for (std::size_t n = 1; n <= t; ++n) {
    Matrix d(R, ranks[n - 1], ranks[n]);
    for (const auto& b : out.blocks[n]) {
      if (b.k >= 1)
        if (const TensorBlock* tb = find(n - 1, b.k - 1))
          d.set_block(tb->offset, b.offset, kron(x.diff(b.k), Matrix::identity(R, y.rank(b.l))));
      if (b.l >= 1)
        if (const TensorBlock* tb = find(n - 1, b.k)) {
          Matrix m = kron(Matrix::identity(R, x.rank(b.k)), y.diff(b.l));
          d.set_block(tb->offset, b.offset, b.k % 2 ? -m : m);
        }
    }
    diffs.push_back(std::move(d));
  }
  out.complex = ConnComplex(R, std::move(ranks), std::move(diffs));
  return out;
}

ChainMap tensor_maps(const ChainMap& f, const ChainMap& g) {
  TensorComplex s = tensor(f.source(), g.source()), t = tensor(f.target(), g.target());
  const Ring& R = f.ring();
  std::vector<Matrix> c;
  std::size_t top = std::max(s.complex.top(), t.complex.top());
  for (std::size_t n = 0; n <= top; ++n) {
    Matrix m(R, t.complex.rank(n), s.complex.rank(n));
    if (n < s.blocks.size() && n < t.blocks.size())
      for (const auto& sb : s.blocks[n])
        for (const auto& tb : t.blocks[n])
          if (sb.k == tb.k) m.set_block(tb.offset, sb.offset, kron(f.component(sb.k), g.component(sb.l)));
    c.push_back(std::move(m));
  }
  return ChainMap(s.complex, t.complex, std::move(c));
}

// -------------------------------------------------------------------- cone

ConnComplex mapping_cone(const ChainMap& f) {
  const ConnComplex& x = f.source();
  const ConnComplex& y = f.target();
  const Ring& R = f.ring();
  std::size_t t = std::max(x.top() + 1, y.top());
  std::vector<std::size_t> ranks;
  std::vector<Matrix> diffs;
  for (std::size_t n = 0; n <= t; ++n) {
    std::size_t xr = n ? x.rank(n - 1) : 0;
    ranks.push_back(xr + y.rank(n));
    if (n == 0) continue;
    std::size_t xr_prev = n >= 2 ? x.rank(n - 2) : 0;
    Matrix d(R, xr_prev + y.rank(n - 1), xr + y.rank(n));
    if (n >= 2) d.set_block(0, 0, -x.diff(n - 1));
    d.set_block(xr_prev, 0, -f.component(n - 1));
    d.set_block(xr_prev, xr, y.diff(n));
    diffs.push_back(std::move(d));
  }
  return ConnComplex(R, std::move(ranks), std::move(diffs));
}

// ---------------------------------------------------------- classification

bool is_fibration(const ChainMap& f) {
  for (std::size_t n = 1; n <= f.top(); ++n)
    if (!is_surjective(f.component(n))) return false;
  return true;
}

bool is_cofibration(const ChainMap& f) {
  for (std::size_t n = 0; n <= f.top(); ++n) {
    Matrix c = f.component(n);
    if (!is_injective(c) || !has_free_cokernel(c)) return false;
  }
  return true;
}

bool is_weak_equivalence(const ChainMap& f) { return is_exact(mapping_cone(f)); }

ModelClass classify(const ChainMap& f) { return {is_fibration(f), is_cofibration(f), is_weak_equivalence(f)}; }

// ----------------------------------------------------------- factorization

Factorization factor_trivcof_fib(const ChainMap& f) {
  const ConnComplex& x = f.source();
  const ConnComplex& y = f.target();
  const Ring& R = f.ring();
  const std::size_t t = std::max(x.top(), y.top());
  // P_m = [one disk top per basis vector of Y_m (m >= 1)] ⊕ [one disk bottom per basis vector of Y_{m+1}]
  auto tops = [&](std::size_t m) { return m >= 1 ? y.rank(m) : 0; };
  auto bottoms = [&](std::size_t m) { return y.rank(m + 1); };
  std::vector<std::size_t> ranks;
  std::vector<Matrix> diffs, kappa, eta;
  for (std::size_t m = 0; m <= t; ++m) {
    std::size_t p = tops(m) + bottoms(m);
    ranks.push_back(x.rank(m) + p);
    if (m >= 1) {
      Matrix d(R, ranks[m - 1], ranks[m]);
      d.set_block(0, 0, x.diff(m));
      // tops of D(m) go to the matching bottoms one degree down
      d.set_block(x.rank(m - 1) + tops(m - 1), x.rank(m), Matrix::identity(R, tops(m)));
      diffs.push_back(std::move(d));
    }
    Matrix k(R, ranks[m], x.rank(m));
    k.set_block(0, 0, Matrix::identity(R, x.rank(m)));
    kappa.push_back(std::move(k));
    Matrix e(R, y.rank(m), ranks[m]);
    e.set_block(0, 0, f.component(m));
    if (tops(m)) e.set_block(0, x.rank(m), Matrix::identity(R, tops(m)));
    e.set_block(0, x.rank(m) + tops(m), y.diff(m + 1));
    eta.push_back(std::move(e));
  }
  ConnComplex mid(R, std::move(ranks), std::move(diffs));
  return {ChainMap(x, mid, std::move(kappa)), ChainMap(mid, y, std::move(eta))};
}

Factorization factor_cof_trivfib(const ChainMap& f) {
  const ConnComplex& x = f.source();
  const ConnComplex& y = f.target();
  const Ring& R = f.ring();
  const std::size_t t = std::max(x.top(), y.top());

  // Degree 0: Q_0 = X_0 ⊕ Y_0 with eta_0 = [f_0 | 1].
  std::vector<std::size_t> ranks{x.rank(0) + y.rank(0)};
  std::vector<Matrix> diffs, eta{hstack(f.component(0), Matrix::identity(R, y.rank(0)))};
  Matrix prev_diff(R, 0, ranks[0]);

  for (std::size_t n = 1;; ++n) {
    // L_n = {(z, y) : z a cycle of Q_{n-1}, eta(z) = ∂y}, a saturated lattice
    Matrix cycles = kernel_basis(prev_diff);
    Matrix cover = kernel_basis(hstack(eta[n - 1] * cycles, -y.diff(n)));
    std::size_t p = cover.cols();
    Matrix z_part = cover.block(0, 0, cycles.cols(), p);
    Matrix y_part = cover.block(cycles.cols(), 0, y.rank(n), p);
    if (n > t && x.rank(n) + p == 0) break;

    std::size_t qn = x.rank(n) + p;
    Matrix d(R, ranks[n - 1], qn);
    d.set_block(0, 0, x.diff(n));  // X sits first in every Q_m
    d.set_block(0, x.rank(n), cycles * z_part);
    ranks.push_back(qn);
    diffs.push_back(d);
    eta.push_back(hstack(f.component(n), y_part));
    prev_diff = std::move(d);
  }
  ConnComplex mid(R, ranks, std::move(diffs));
  std::vector<Matrix> kappa;
  for (std::size_t n = 0; n <= std::max(mid.top(), x.top()); ++n) {
    Matrix k(R, mid.rank(n), x.rank(n));
    k.set_block(0, 0, Matrix::identity(R, x.rank(n)));
    kappa.push_back(std::move(k));
  }
  while (eta.size() < std::max(mid.top(), y.top()) + 1) {
    std::size_t n = eta.size();
    eta.emplace_back(R, y.rank(n), mid.rank(n));
  }
  return {ChainMap(x, mid, std::move(kappa)), ChainMap(mid, y, std::move(eta))};
}

// ----------------------------------------------------------------- lifting

ChainMap lift_square(const ChainMap& f, const ChainMap& g, const ChainMap& top, const ChainMap& bottom) {
  const ConnComplex& a = f.source();
  const ConnComplex& b = f.target();
  const ConnComplex& c = g.source();
  if (!(top.source() == a) || !(top.target() == c) || !(bottom.source() == b) || !(bottom.target() == g.target()))
    throw ShapeError("lift_square: maps do not form a square");
  if (!(compose(g, top) == compose(bottom, f))) throw SquareError("lift_square: the square does not commute");
  if (!is_cofibration(f)) throw ClassError("lift_square: left map is not a cofibration");
  ModelClass gc = classify(g);
  if (!gc.trivial_fibration()) throw ClassError("lift_square: right map is not a trivial fibration");

  const Ring& R = f.ring();
  std::vector<Matrix> phi;
  for (std::size_t n = 0; n <= b.top(); ++n) {
    Matrix fn = f.component(n), gn = g.component(n);
    SmithDecomposition snf = smith_normal_form(fn);
    const std::size_t r = snf.rank, bn = b.rank(n);
    // B_n = im(f_n) ⊕ P_n; the Smith form has unit diagonal since the cokernel is free
    Matrix u_inv = *inverse(snf.U);
    Matrix s_inv(R, r, r);
    for (std::size_t i = 0; i < r; ++i) s_inv(i, i) = R.inverse(snf.S(i, i));
    Matrix to_source = snf.V.block(0, 0, fn.cols(), r) * s_inv * snf.U.block(0, 0, r, bn);
    Matrix to_complement = snf.U.block(r, 0, bn - r, bn);
    Matrix complement = u_inv.block(0, r, bn, bn - r);

    auto rho = solve(gn, bottom.component(n) * complement);
    if (!rho) throw ClassError("lift_square: right map is not surjective in degree " + std::to_string(n));
    Matrix psi = top.component(n) * to_source + *rho * to_complement;
    if (n >= 1 && complement.cols() > 0) {
      Matrix zeta = c.diff(n) * psi * complement - phi[n - 1] * b.diff(n) * complement;
      Matrix kg = kernel_basis(gn);
      auto mu = solve(c.diff(n) * kg, zeta);
      if (!mu) throw ClassError("lift_square: kernel of the right map is not exact");
      psi = psi - kg * *mu * to_complement;
    }
    phi.push_back(std::move(psi));
  }
  return ChainMap(b, c, std::move(phi));
}

// --------------------------------------------------------------------- RLP

bool RlpReport::all_x_pass() const {
  for (const auto& c : checks)
    if (c.family == 'X' && !c.pass) return false;
  return true;
}

bool RlpReport::all_y_pass() const {
  for (const auto& c : checks)
    if (c.family == 'Y' && !c.pass) return false;
  return true;
}

RlpReport rlp_generator_check(const ChainMap& f, std::size_t max_n) {
  const ConnComplex& x = f.source();
  const ConnComplex& y = f.target();
  RlpReport rep;
  // Squares from λ are indexed by Z_0(Y) = Y_0, lifts by Z_0(X) = X_0.
  rep.checks.push_back({"lambda", 'X', 0, is_surjective(f.component(0))});
  for (std::size_t n = 1; n <= max_n; ++n) {
    // Squares from ι^n correspond to the pullback Z_{n-1}(X) ×_{Z_{n-1}(Y)} Y_n,
    // lifts to X_n; every square has a lift iff z ↦ (∂z, f_n z) is onto.
    Matrix cycles = cycle_basis(x, n - 1);
    Matrix pullback = kernel_basis(hstack(f.component(n - 1) * cycles, -y.diff(n)));
    Matrix image = vstack(*solve(cycles, x.diff(n)), f.component(n));
    auto coords = solve(pullback, image);
    if (!coords) throw DomainError("rlp_generator_check: image escapes the pullback");
    rep.checks.push_back({"iota^" + std::to_string(n), 'X', n, is_surjective(*coords)});
  }
  for (std::size_t n = 1; n <= max_n; ++n)
    rep.checks.push_back({"kappa^" + std::to_string(n), 'Y', n, is_surjective(f.component(n))});
  return rep;
}

}  // namespace halg
