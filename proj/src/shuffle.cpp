#include "halg/shuffle.hpp"

#include <map>
#include <optional>

namespace halg {

namespace {

// Effect of the i-th face of DK on the λ_f summand: either zero, or a move
// to another surjection optionally through the (signed) boundary of X_k.
struct FaceTerm {
  MonotoneMap target;
  bool through_boundary = false;
};

std::optional<FaceTerm> face_term(const MonotoneMap& f, std::size_t i) {
  const std::size_t n = f.source_top(), k = f.target_top();
  MonotoneMap c = compose(f, face(n, i));
  if (c.is_surjective()) return FaceTerm{c, false};
  if (i < n) return std::nullopt;
  // f hits k only at n: restrict to [n-1] -> [k-1]
  return FaceTerm{MonotoneMap(n - 1, k - 1, c.values()), true};
}

Matrix face_factor(const ConnComplex& x, std::size_t k, const FaceTerm& t) {
  if (!t.through_boundary) return Matrix::identity(x.ring(), x.rank(k));
  Matrix d = x.diff(k);
  return k % 2 ? -d : d;
}

using PairKey = std::pair<std::vector<std::size_t>, std::vector<std::size_t>>;

PairKey key(const SurjectionPair& p) { return {p.f.values(), p.g.values()}; }

std::map<PairKey, const ShuffleBlock*> index_blocks(const std::vector<ShuffleBlock>& blocks) {
  std::map<PairKey, const ShuffleBlock*> out;
  for (const auto& b : blocks) out[key(b.pair)] = &b;
  return out;
}

}  // namespace

ShuffleComplex shuffle_product(const ConnComplex& x, const ConnComplex& y) {
  if (!(x.ring() == y.ring())) throw RingError("shuffle product over different rings");
  const Ring& R = x.ring();
  const std::size_t t = x.top() + y.top();
  ShuffleComplex out;
  std::vector<std::size_t> ranks;
  for (std::size_t n = 0; n <= t; ++n) {
    std::vector<ShuffleBlock> level;
    std::size_t offset = 0;
    for (auto& p : enumerate_jointly_monic_pairs(n, x.top(), y.top())) {
      std::size_t size = x.rank(p.k()) * y.rank(p.l());
      level.push_back({std::move(p), offset});
      offset += size;
    }
    out.blocks.push_back(std::move(level));
    ranks.push_back(offset);
  }
  std::vector<Matrix> diffs;
  for (std::size_t n = 1; n <= t; ++n) {
    Matrix d(R, ranks[n - 1], ranks[n]);
    auto targets = index_blocks(out.blocks[n - 1]);
    for (const auto& b : out.blocks[n]) {
      if (x.rank(b.k()) * y.rank(b.l()) == 0) continue;
      for (std::size_t i = 0; i <= n; ++i) {
        auto tf = face_term(b.pair.f, i);
        if (!tf) continue;
        auto tg = face_term(b.pair.g, i);
        if (!tg) continue;
        SurjectionPair dest{tf->target, tg->target};
        auto it = targets.find(key(dest));
        if (it == targets.end()) throw DomainError("face of a jointly monic pair left the index set");
        Matrix term = kron(face_factor(x, b.k(), *tf), face_factor(y, b.l(), *tg));
        if (i % 2) term = -term;
        const ShuffleBlock& tb = *it->second;
        Matrix cur = d.block(tb.offset, b.offset, term.rows(), term.cols());
        d.set_block(tb.offset, b.offset, cur + term);
      }
    }
    diffs.push_back(std::move(d));
  }
  out.underlying = ConnComplex(R, std::move(ranks), std::move(diffs));
  return out;
}

namespace {

// Blockwise map between two shuffle products with the same pair index,
// `factor(k, l)` giving the block for a pair of type (k, l).
template <class Factor>
ChainMap blockwise(const ShuffleComplex& s, const ShuffleComplex& t, const Ring& R, Factor factor) {
  std::vector<Matrix> comps;
  const std::size_t top = std::max(s.underlying.top(), t.underlying.top());
  for (std::size_t n = 0; n <= top; ++n) {
    Matrix c(R, t.underlying.rank(n), s.underlying.rank(n));
    if (n < s.blocks.size() && n < t.blocks.size()) {
      auto dst = index_blocks(t.blocks[n]);
      for (const auto& b : s.blocks[n]) {
        auto it = dst.find(key(b.pair));
        if (it == dst.end()) continue;
        c.set_block(it->second->offset, b.offset, factor(b.k(), b.l()));
      }
    }
    comps.push_back(std::move(c));
  }
  return ChainMap(s.underlying, t.underlying, std::move(comps));
}

}  // namespace

ChainMap shuffle_map_right(const ConnComplex& x, const ChainMap& theta) {
  ShuffleComplex s = shuffle_product(x, theta.source()), t = shuffle_product(x, theta.target());
  return blockwise(s, t, x.ring(), [&](std::size_t k, std::size_t l) {
    return kron(Matrix::identity(x.ring(), x.rank(k)), theta.component(l));
  });
}

ChainMap shuffle_map_left(const ChainMap& theta, const ConnComplex& y) {
  ShuffleComplex s = shuffle_product(theta.source(), y), t = shuffle_product(theta.target(), y);
  return blockwise(s, t, y.ring(), [&](std::size_t k, std::size_t l) {
    return kron(theta.component(k), Matrix::identity(y.ring(), y.rank(l)));
  });
}

ChainMap ez_map(const ConnComplex& x, const ConnComplex& y) {
  TensorComplex src = tensor(x, y);
  ShuffleComplex dst = shuffle_product(x, y);
  const Ring& R = x.ring();
  std::vector<Matrix> comps;
  for (std::size_t n = 0; n <= src.complex.top(); ++n) {
    Matrix c(R, dst.underlying.rank(n), src.complex.rank(n));
    for (const auto& tb : src.blocks[n]) {
      std::size_t size = x.rank(tb.k) * y.rank(tb.l);
      if (size == 0) continue;
      for (const auto& sb : dst.blocks[n]) {
        if (sb.k() != tb.k || sb.l() != tb.l) continue;
        Matrix id = Matrix::identity(R, size);
        c.set_block(sb.offset, tb.offset, shuffle_of_pair(sb.pair.f, sb.pair.g).sign() < 0 ? -id : id);
      }
    }
    comps.push_back(std::move(c));
  }
  return ChainMap(src.complex, dst.underlying, std::move(comps));
}

NorTensorReport nor_tensor_compare(const SimplicialModule& m, const SimplicialModule& n) {
  const std::size_t h = std::min(m.horizon(), n.horizon());
  ConnComplex left = nor(tensor_sm(m.truncated(h), n.truncated(h))).complex;
  ConnComplex right =
      shuffle_product(nor(m.truncated(h)).complex, nor(n.truncated(h)).complex).underlying.truncated(h);
  NorTensorReport rep;
  for (std::size_t d = 0; d <= h; ++d) {
    rep.tensor_ranks.push_back(left.rank(d));
    rep.shuffle_ranks.push_back(right.rank(d));
  }
  rep.tensor_homology = homology(left);
  rep.shuffle_homology = homology(right);
  rep.pass = rep.tensor_ranks == rep.shuffle_ranks && rep.tensor_homology == rep.shuffle_homology;
  return rep;
}

BoxtimesReport boxtimes_generator_tests(const ChainMap& mu, std::size_t n) {
  const Ring& R = mu.ring();
  return {classify(shuffle_map_left(mu, disk(n, R))), classify(shuffle_map_left(mu, sphere(0, R)))};
}

}  // namespace halg
