#include "halg/simplicial.hpp"

#include <algorithm>
#include <functional>

namespace halg {

// ------------------------------------------------------------ simplicial sets

FinSimplicialSet::FinSimplicialSet(std::size_t horizon, std::vector<std::vector<Cell>> cells,
                                   std::vector<std::vector<std::vector<std::size_t>>> faces,
                                   std::vector<std::vector<std::vector<std::size_t>>> degens)
    : horizon_(horizon), cells_(std::move(cells)), faces_(std::move(faces)), degens_(std::move(degens)) {
  if (cells_.size() != horizon_ + 1 || faces_.size() != horizon_ + 1 || degens_.size() != horizon_)
    throw ShapeError("simplicial set data does not match its horizon");
  for (std::size_t m = 1; m <= horizon_; ++m) {
    if (faces_[m].size() != m + 1) throw ShapeError("wrong number of face maps at level " + std::to_string(m));
    for (const auto& f : faces_[m]) {
      if (f.size() != count(m)) throw ShapeError("face map has wrong length at level " + std::to_string(m));
      for (auto c : f)
        if (c >= count(m - 1)) throw IndexError("face map leaves level " + std::to_string(m - 1));
    }
  }
  for (std::size_t m = 0; m < horizon_; ++m) {
    if (degens_[m].size() != m + 1) throw ShapeError("wrong number of degeneracies at level " + std::to_string(m));
    for (const auto& s : degens_[m]) {
      if (s.size() != count(m)) throw ShapeError("degeneracy has wrong length at level " + std::to_string(m));
      for (auto c : s)
        if (c >= count(m + 1)) throw IndexError("degeneracy leaves level " + std::to_string(m + 1));
    }
  }
}

std::optional<std::size_t> FinSimplicialSet::index_of(std::size_t m, const Cell& c) const {
  const auto& level = cells_.at(m);
  auto it = std::find(level.begin(), level.end(), c);
  if (it == level.end()) return std::nullopt;
  return static_cast<std::size_t>(it - level.begin());
}

bool FinSimplicialSet::is_degenerate(std::size_t m, std::size_t c) const {
  if (m == 0) return false;
  for (const auto& s : degens_[m - 1])
    if (std::find(s.begin(), s.end(), c) != s.end()) return true;
  return false;
}

namespace {

// Cells are vertex tuples; d_i drops coordinate i and s_i repeats it.
FinSimplicialSet tuple_set(std::size_t horizon, std::vector<std::vector<Cell>> cells) {
  std::vector<std::map<Cell, std::size_t>> index(horizon + 1);
  for (std::size_t m = 0; m <= horizon; ++m)
    for (std::size_t c = 0; c < cells[m].size(); ++c) index[m][cells[m][c]] = c;
  auto lookup = [&](std::size_t m, const Cell& c) {
    auto it = index[m].find(c);
    if (it == index[m].end()) throw DomainError("cell set is not closed under structure maps");
    return it->second;
  };
  std::vector<std::vector<std::vector<std::size_t>>> faces(horizon + 1), degens(horizon);
  for (std::size_t m = 1; m <= horizon; ++m)
    for (std::size_t i = 0; i <= m; ++i) {
      std::vector<std::size_t> f;
      for (const auto& c : cells[m]) {
        Cell d = c;
        d.erase(d.begin() + i);
        f.push_back(lookup(m - 1, d));
      }
      faces[m].push_back(std::move(f));
    }
  for (std::size_t m = 0; m < horizon; ++m)
    for (std::size_t i = 0; i <= m; ++i) {
      std::vector<std::size_t> s;
      for (const auto& c : cells[m]) {
        Cell d = c;
        d.insert(d.begin() + i, c[i]);
        s.push_back(lookup(m + 1, d));
      }
      degens[m].push_back(std::move(s));
    }
  return FinSimplicialSet(horizon, std::move(cells), std::move(faces), std::move(degens));
}

Cell to_cell(const std::vector<std::size_t>& v) { return Cell(v.begin(), v.end()); }

}  // namespace

FinSimplicialSet simplex_set(std::size_t n, std::size_t horizon) {
  std::vector<std::vector<Cell>> cells(horizon + 1);
  for (std::size_t m = 0; m <= horizon; ++m)
    for (const auto& f : enumerate_monotone_maps(m, n)) cells[m].push_back(to_cell(f.values()));
  return tuple_set(horizon, std::move(cells));
}

FinSimplicialSet boundary_simplex_set(std::size_t n, std::size_t horizon) {
  if (n == 0) throw DomainError("the boundary of the 0-simplex is empty");
  std::vector<std::vector<Cell>> cells(horizon + 1);
  for (std::size_t m = 0; m <= horizon; ++m)
    for (const auto& f : enumerate_monotone_maps(m, n))
      if (!f.is_surjective()) cells[m].push_back(to_cell(f.values()));
  return tuple_set(horizon, std::move(cells));
}

FinPoset::FinPoset(std::vector<std::string> elements, std::vector<std::vector<bool>> leq)
    : elements_(std::move(elements)), leq_(std::move(leq)) {
  const std::size_t n = elements_.size();
  if (leq_.size() != n) throw DomainError("order table has the wrong number of rows");
  for (const auto& row : leq_)
    if (row.size() != n) throw DomainError("order table is not square");
  for (std::size_t a = 0; a < n; ++a) {
    if (!leq_[a][a]) throw DomainError("order is not reflexive at " + elements_[a]);
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b && leq_[a][b] && leq_[b][a])
        throw DomainError("order is not antisymmetric on " + elements_[a] + ", " + elements_[b]);
      for (std::size_t c = 0; c < n; ++c)
        if (leq_[a][b] && leq_[b][c] && !leq_[a][c])
          throw DomainError("order is not transitive on " + elements_[a] + ", " + elements_[b] + ", " + elements_[c]);
    }
  }
}

FinPoset FinPoset::chain(std::size_t n) {
  std::vector<std::string> e;
  std::vector<std::vector<bool>> leq(n + 1, std::vector<bool>(n + 1));
  for (std::size_t a = 0; a <= n; ++a) {
    e.push_back(std::to_string(a));
    for (std::size_t b = a; b <= n; ++b) leq[a][b] = true;
  }
  return FinPoset(std::move(e), std::move(leq));
}

std::optional<std::size_t> FinPoset::least_element() const {
  for (std::size_t a = 0; a < size(); ++a) {
    bool least = true;
    for (std::size_t b = 0; b < size() && least; ++b) least = leq_[a][b];
    if (least) return a;
  }
  return std::nullopt;
}

FinPoset product(const FinPoset& a, const FinPoset& b) {
  std::vector<std::string> e;
  std::size_t n = a.size() * b.size();
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
  for (std::size_t x = 0; x < a.size(); ++x)
    for (std::size_t y = 0; y < b.size(); ++y) {
      e.push_back("(" + a.elements()[x] + "," + b.elements()[y] + ")");
      for (std::size_t x2 = 0; x2 < a.size(); ++x2)
        for (std::size_t y2 = 0; y2 < b.size(); ++y2)
          leq[x * b.size() + y][x2 * b.size() + y2] = a.leq(x, x2) && b.leq(y, y2);
    }
  return FinPoset(std::move(e), std::move(leq));
}

FinSimplicialSet nerve(const FinPoset& p, std::size_t horizon) {
  std::vector<std::vector<Cell>> cells(horizon + 1);
  const int n = static_cast<int>(p.size());
  for (std::size_t m = 0; m <= horizon && n > 0; ++m) {
    Cell c(m + 1, 0);
    // odometer over all tuples in lexicographic order, keeping the chains
    for (;;) {
      bool chain = true;
      for (std::size_t i = 0; i + 1 < c.size() && chain; ++i) chain = p.leq(c[i], c[i + 1]);
      if (chain) cells[m].push_back(c);
      std::size_t i = c.size();
      while (i > 0 && c[i - 1] == n - 1) c[--i] = 0;
      if (i == 0) break;
      ++c[i - 1];
    }
  }
  return tuple_set(horizon, std::move(cells));
}

FinSimplicialSet product(const FinSimplicialSet& u, const FinSimplicialSet& v) {
  if (u.horizon() != v.horizon()) throw ShapeError("product of simplicial sets with different horizons");
  const std::size_t h = u.horizon();
  std::vector<std::vector<Cell>> cells(h + 1);
  std::vector<std::vector<std::vector<std::size_t>>> faces(h + 1), degens(h);
  for (std::size_t m = 0; m <= h; ++m)
    for (const auto& a : u.cells(m))
      for (const auto& b : v.cells(m)) {
        Cell c = a;
        c.push_back(-1);
        c.insert(c.end(), b.begin(), b.end());
        cells[m].push_back(std::move(c));
      }
  for (std::size_t m = 1; m <= h; ++m)
    for (std::size_t i = 0; i <= m; ++i) {
      std::vector<std::size_t> f;
      for (std::size_t a = 0; a < u.count(m); ++a)
        for (std::size_t b = 0; b < v.count(m); ++b) f.push_back(u.face(m, i, a) * v.count(m - 1) + v.face(m, i, b));
      faces[m].push_back(std::move(f));
    }
  for (std::size_t m = 0; m < h; ++m)
    for (std::size_t i = 0; i <= m; ++i) {
      std::vector<std::size_t> s;
      for (std::size_t a = 0; a < u.count(m); ++a)
        for (std::size_t b = 0; b < v.count(m); ++b) s.push_back(u.degen(m, i, a) * v.count(m + 1) + v.degen(m, i, b));
      degens[m].push_back(std::move(s));
    }
  return FinSimplicialSet(h, std::move(cells), std::move(faces), std::move(degens));
}

FinSimplicialSet coproduct(const FinSimplicialSet& u, const FinSimplicialSet& v) {
  if (u.horizon() != v.horizon()) throw ShapeError("coproduct of simplicial sets with different horizons");
  const std::size_t h = u.horizon();
  std::vector<std::vector<Cell>> cells(h + 1);
  std::vector<std::vector<std::vector<std::size_t>>> faces(h + 1), degens(h);
  for (std::size_t m = 0; m <= h; ++m) {
    for (const auto& a : u.cells(m)) {
      Cell c{0};
      c.insert(c.end(), a.begin(), a.end());
      cells[m].push_back(std::move(c));
    }
    for (const auto& b : v.cells(m)) {
      Cell c{1};
      c.insert(c.end(), b.begin(), b.end());
      cells[m].push_back(std::move(c));
    }
  }
  for (std::size_t m = 1; m <= h; ++m)
    for (std::size_t i = 0; i <= m; ++i) {
      std::vector<std::size_t> f;
      for (std::size_t a = 0; a < u.count(m); ++a) f.push_back(u.face(m, i, a));
      for (std::size_t b = 0; b < v.count(m); ++b) f.push_back(u.count(m - 1) + v.face(m, i, b));
      faces[m].push_back(std::move(f));
    }
  for (std::size_t m = 0; m < h; ++m)
    for (std::size_t i = 0; i <= m; ++i) {
      std::vector<std::size_t> s;
      for (std::size_t a = 0; a < u.count(m); ++a) s.push_back(u.degen(m, i, a));
      for (std::size_t b = 0; b < v.count(m); ++b) s.push_back(u.count(m + 1) + v.degen(m, i, b));
      degens[m].push_back(std::move(s));
    }
  return FinSimplicialSet(h, std::move(cells), std::move(faces), std::move(degens));
}

std::optional<std::vector<std::vector<std::size_t>>> find_isomorphism(const FinSimplicialSet& u,
                                                                      const FinSimplicialSet& v) {
  const std::size_t h = u.horizon();
  if (v.horizon() != h) return std::nullopt;
  for (std::size_t m = 0; m <= h; ++m)
    if (u.count(m) != v.count(m)) return std::nullopt;
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::vector<std::size_t>> phi(h + 1), used(h + 1);
  for (std::size_t m = 0; m <= h; ++m) {
    phi[m].assign(u.count(m), unset);
    used[m].assign(u.count(m), 0);
  }
  // a candidate is consistent when all structure maps between already
  // assigned cells agree
  auto consistent = [&](std::size_t m, std::size_t c, std::size_t target) {
    if (m >= 1)
      for (std::size_t i = 0; i <= m; ++i)
        if (phi[m - 1][u.face(m, i, c)] != v.face(m, i, target)) return false;
    if (m >= 1)
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t c0 = 0; c0 < u.count(m - 1); ++c0)
          if (u.degen(m - 1, i, c0) == c && v.degen(m - 1, i, phi[m - 1][c0]) != target) return false;
    return true;
  };
  std::function<bool(std::size_t, std::size_t)> search = [&](std::size_t m, std::size_t c) -> bool {
    if (m > h) return true;
    if (c == u.count(m)) return search(m + 1, 0);
    for (std::size_t t = 0; t < v.count(m); ++t) {
      if (used[m][t] || !consistent(m, c, t)) continue;
      phi[m][c] = t;
      used[m][t] = 1;
      if (search(m, c + 1)) return true;
      used[m][t] = 0;
      phi[m][c] = unset;
    }
    return false;
  };
  if (!search(0, 0)) return std::nullopt;
  return phi;
}

// --------------------------------------------------------- simplicial modules

SimplicialModule::SimplicialModule(Ring ring, std::size_t horizon, std::vector<std::size_t> ranks,
                                   std::vector<std::vector<Matrix>> faces, std::vector<std::vector<Matrix>> degens)
    : ring_(std::move(ring)),
      horizon_(horizon),
      ranks_(std::move(ranks)),
      faces_(std::move(faces)),
      degens_(std::move(degens)) {
  if (ranks_.size() != horizon_ + 1 || faces_.size() != horizon_ + 1 || degens_.size() != horizon_)
    throw ShapeError("simplicial module data does not match its horizon");
  auto check = [&](const Matrix& a, std::size_t r, std::size_t c, const std::string& what) {
    if (!(a.ring() == ring_)) throw RingError(what + " has the wrong ring");
    if (a.rows() != r || a.cols() != c) throw ShapeError(what + " has the wrong shape");
  };
  for (std::size_t m = 1; m <= horizon_; ++m) {
    if (faces_[m].size() != m + 1) throw ShapeError("wrong number of faces at level " + std::to_string(m));
    for (std::size_t i = 0; i <= m; ++i)
      check(faces_[m][i], ranks_[m - 1], ranks_[m], "d_{" + std::to_string(m) + "," + std::to_string(i) + "}");
  }
  for (std::size_t m = 0; m < horizon_; ++m) {
    if (degens_[m].size() != m + 1) throw ShapeError("wrong number of degeneracies at level " + std::to_string(m));
    for (std::size_t i = 0; i <= m; ++i)
      check(degens_[m][i], ranks_[m + 1], ranks_[m], "s_{" + std::to_string(m) + "," + std::to_string(i) + "}");
  }
}

SimplicialModule SimplicialModule::truncated(std::size_t horizon) const {
  if (horizon > horizon_) throw DomainError("cannot extend a simplicial module past its horizon");
  return SimplicialModule(ring_, horizon, std::vector<std::size_t>(ranks_.begin(), ranks_.begin() + horizon + 1),
                          std::vector<std::vector<Matrix>>(faces_.begin(), faces_.begin() + horizon + 1),
                          std::vector<std::vector<Matrix>>(degens_.begin(), degens_.begin() + horizon));
}

SimplicialMap::SimplicialMap(SimplicialModule source, SimplicialModule target, std::vector<Matrix> components)
    : source_(std::move(source)), target_(std::move(target)), components_(std::move(components)) {
  if (source_.horizon() != target_.horizon()) throw ShapeError("simplicial map between different horizons");
  if (!(source_.ring() == target_.ring())) throw RingError("simplicial map between different rings");
  if (components_.size() != source_.horizon() + 1) throw ShapeError("simplicial map needs one component per level");
  for (std::size_t m = 0; m < components_.size(); ++m)
    if (components_[m].rows() != target_.rank(m) || components_[m].cols() != source_.rank(m))
      throw ShapeError("component " + std::to_string(m) + " has the wrong shape");
}

SimplicialMap identity_map(const SimplicialModule& m) {
  std::vector<Matrix> c;
  for (std::size_t n = 0; n <= m.horizon(); ++n) c.push_back(Matrix::identity(m.ring(), m.rank(n)));
  return SimplicialMap(m, m, std::move(c));
}

SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f) {
  if (!(f.target() == g.source())) throw ShapeError("compose: simplicial maps are not composable");
  std::vector<Matrix> c;
  for (std::size_t n = 0; n <= f.source().horizon(); ++n) c.push_back(g.component(n) * f.component(n));
  return SimplicialMap(f.source(), g.target(), std::move(c));
}

bool is_simplicial(const SimplicialMap& f) {
  const auto& a = f.source();
  const auto& b = f.target();
  for (std::size_t m = 1; m <= a.horizon(); ++m)
    for (std::size_t i = 0; i <= m; ++i)
      if (!(f.component(m - 1) * a.face(m, i) == b.face(m, i) * f.component(m))) return false;
  for (std::size_t m = 0; m < a.horizon(); ++m)
    for (std::size_t i = 0; i <= m; ++i)
      if (!(f.component(m + 1) * a.degen(m, i) == b.degen(m, i) * f.component(m))) return false;
  return true;
}

std::string IdentityViolation::describe() const {
  auto s = [](std::size_t v) { return std::to_string(v); };
  if (relation == "dd")
    return "d_{" + s(n) + "," + s(i) + "} d_{" + s(n + 1) + "," + s(j) + "} != d_{" + s(n) + "," + s(j - 1) +
           "} d_{" + s(n + 1) + "," + s(i) + "}";
  if (relation == "ss")
    return "s_{" + s(n) + "," + s(i) + "} s_{" + s(n - 1) + "," + s(j) + "} != s_{" + s(n) + "," + s(j + 1) +
           "} s_{" + s(n - 1) + "," + s(i) + "}";
  return "d_{" + s(n) + "," + s(i) + "} s_{" + s(n - 1) + "," + s(j) + "} has the wrong value";
}

namespace {

// Runs the three families of simplicial identities against callbacks that
// compare both sides; shared by sets and modules.
template <class DD, class SS, class DS>
std::vector<IdentityViolation> run_identities(std::size_t h, DD dd, SS ss, DS ds) {
  std::vector<IdentityViolation> out;
  for (std::size_t n = 1; n + 1 <= h; ++n)
    for (std::size_t j = 1; j <= n + 1; ++j)
      for (std::size_t i = 0; i < j; ++i)
        if (!dd(n, i, j)) out.push_back({"dd", n, i, j});
  for (std::size_t n = 1; n + 1 <= h; ++n)
    for (std::size_t j = 0; j <= n - 1; ++j)
      for (std::size_t i = 0; i <= j; ++i)
        if (!ss(n, i, j)) out.push_back({"ss", n, i, j});
  for (std::size_t n = 1; n <= h; ++n)
    for (std::size_t j = 0; j <= n - 1; ++j)
      for (std::size_t i = 0; i <= n; ++i)
        if (!ds(n, i, j)) out.push_back({"ds", n, i, j});
  return out;
}

}  // namespace

std::vector<IdentityViolation> check_simplicial_identities(const SimplicialModule& m) {
  const Ring& R = m.ring();
  return run_identities(
      m.horizon(),
      [&](std::size_t n, std::size_t i, std::size_t j) {
        return m.face(n, i) * m.face(n + 1, j) == m.face(n, j - 1) * m.face(n + 1, i);
      },
      [&](std::size_t n, std::size_t i, std::size_t j) {
        return m.degen(n, i) * m.degen(n - 1, j) == m.degen(n, j + 1) * m.degen(n - 1, i);
      },
      [&](std::size_t n, std::size_t i, std::size_t j) {
        Matrix lhs = m.face(n, i) * m.degen(n - 1, j);
        if (i == j || i == j + 1) return lhs == Matrix::identity(R, m.rank(n - 1));
        if (i < j) return lhs == m.degen(n - 2, j - 1) * m.face(n - 1, i);
        return lhs == m.degen(n - 2, j) * m.face(n - 1, i - 1);
      });
}

std::vector<IdentityViolation> check_simplicial_identities(const FinSimplicialSet& u) {
  auto all = [](std::size_t count, auto pred) {
    for (std::size_t c = 0; c < count; ++c)
      if (!pred(c)) return false;
    return true;
  };
  return run_identities(
      u.horizon(),
      [&](std::size_t n, std::size_t i, std::size_t j) {
        return all(u.count(n + 1), [&](std::size_t c) {
          return u.face(n, i, u.face(n + 1, j, c)) == u.face(n, j - 1, u.face(n + 1, i, c));
        });
      },
      [&](std::size_t n, std::size_t i, std::size_t j) {
        return all(u.count(n - 1), [&](std::size_t c) {
          return u.degen(n, i, u.degen(n - 1, j, c)) == u.degen(n, j + 1, u.degen(n - 1, i, c));
        });
      },
      [&](std::size_t n, std::size_t i, std::size_t j) {
        return all(u.count(n - 1), [&](std::size_t c) {
          std::size_t lhs = u.face(n, i, u.degen(n - 1, j, c));
          if (i == j || i == j + 1) return lhs == c;
          if (i < j) return lhs == u.degen(n - 2, j - 1, u.face(n - 1, i, c));
          return lhs == u.degen(n - 2, j, u.face(n - 1, i - 1, c));
        });
      });
}

SimplicialModule free_module(const FinSimplicialSet& u, const Ring& ring) {
  const std::size_t h = u.horizon();
  std::vector<std::size_t> ranks;
  std::vector<std::vector<Matrix>> faces(h + 1), degens(h);
  for (std::size_t m = 0; m <= h; ++m) ranks.push_back(u.count(m));
  for (std::size_t m = 1; m <= h; ++m)
    for (std::size_t i = 0; i <= m; ++i) {
      Matrix d(ring, ranks[m - 1], ranks[m]);
      for (std::size_t c = 0; c < ranks[m]; ++c) d(u.face(m, i, c), c) = 1;
      faces[m].push_back(std::move(d));
    }
  for (std::size_t m = 0; m < h; ++m)
    for (std::size_t i = 0; i <= m; ++i) {
      Matrix s(ring, ranks[m + 1], ranks[m]);
      for (std::size_t c = 0; c < ranks[m]; ++c) s(u.degen(m, i, c), c) = 1;
      degens[m].push_back(std::move(s));
    }
  return SimplicialModule(ring, h, std::move(ranks), std::move(faces), std::move(degens));
}

// ------------------------------------------------------------------ Dold-Kan

std::vector<DkBlock> dk_blocks(const ConnComplex& x, std::size_t n) {
  std::vector<DkBlock> out;
  std::size_t offset = 0;
  for (std::size_t k = 0; k <= std::min(n, x.top()); ++k)
    for (auto& s : enumerate_surjections(n, k)) {
      out.push_back({std::move(s), offset});
      offset += x.rank(k);
    }
  return out;
}

namespace {

std::size_t level_rank(const ConnComplex& x, const std::vector<DkBlock>& blocks) {
  return blocks.empty() ? 0 : blocks.back().offset + x.rank(blocks.back().surjection.target_top());
}

}  // namespace

Matrix dk_structure_map(const ConnComplex& x, const MonotoneMap& eta) {
  const Ring& R = x.ring();
  const std::size_t n = eta.source_top(), m = eta.target_top();
  auto rows = dk_blocks(x, n), cols = dk_blocks(x, m);
  std::map<std::vector<std::size_t>, std::size_t> row_offset;
  for (const auto& b : rows) row_offset[b.surjection.values()] = b.offset;
  Matrix out(R, level_rank(x, rows), level_rank(x, cols));
  for (const auto& col : cols) {
    const std::size_t l = col.surjection.target_top();
    if (x.rank(l) == 0) continue;
    EpiMono em = epi_mono_factorize(compose(col.surjection, eta));
    const std::size_t k = em.epi.target_top();
    const std::size_t r = row_offset.at(em.epi.values());
    if (k == l) {
      out.set_block(r, col.offset, Matrix::identity(R, x.rank(l)));
    } else if (k + 1 == l && em.mono == face(l, l)) {
      Matrix d = x.diff(l);
      out.set_block(r, col.offset, l % 2 ? -d : d);
    }
  }
  return out;
}

SimplicialModule dk(const ConnComplex& x, std::size_t horizon) {
  std::vector<std::size_t> ranks;
  std::vector<std::vector<Matrix>> faces(horizon + 1), degens(horizon);
  for (std::size_t n = 0; n <= horizon; ++n) ranks.push_back(level_rank(x, dk_blocks(x, n)));
  for (std::size_t n = 1; n <= horizon; ++n)
    for (std::size_t i = 0; i <= n; ++i) faces[n].push_back(dk_structure_map(x, face(n, i)));
  for (std::size_t n = 0; n < horizon; ++n)
    for (std::size_t i = 0; i <= n; ++i) degens[n].push_back(dk_structure_map(x, degeneracy(n, i)));
  return SimplicialModule(x.ring(), horizon, std::move(ranks), std::move(faces), std::move(degens));
}

SimplicialMap dk_map(const ChainMap& g, std::size_t horizon) {
  const ConnComplex& x = g.source();
  const ConnComplex& y = g.target();
  SimplicialModule a = dk(x, horizon), b = dk(y, horizon);
  std::vector<Matrix> comps;
  for (std::size_t n = 0; n <= horizon; ++n) {
    Matrix c(g.ring(), b.rank(n), a.rank(n));
    auto src = dk_blocks(x, n), dst = dk_blocks(y, n);
    for (const auto& s : src)
      for (const auto& t : dst)
        if (s.surjection == t.surjection) c.set_block(t.offset, s.offset, g.component(s.surjection.target_top()));
    comps.push_back(std::move(c));
  }
  return SimplicialMap(std::move(a), std::move(b), std::move(comps));
}

// ------------------------------------------------------------- normalization

EmbeddedComplex nor(const SimplicialModule& m) {
  const Ring& R = m.ring();
  const std::size_t h = m.horizon();
  std::vector<Matrix> emb{Matrix::identity(R, m.rank(0))};
  std::vector<std::size_t> ranks{m.rank(0)};
  std::vector<Matrix> diffs;
  for (std::size_t n = 1; n <= h; ++n) {
    // intersect the kernels one face at a time
    Matrix basis = Matrix::identity(R, m.rank(n));
    for (std::size_t i = 0; i < n && basis.cols() > 0; ++i) basis = basis * kernel_basis(m.face(n, i) * basis);
    basis = canonical_basis(basis);
    Matrix image = m.face(n, n) * basis;
    auto d = solve(emb[n - 1], n % 2 ? -image : image);
    if (!d) throw NotSimplicial("last face does not map normalized chains into normalized chains");
    ranks.push_back(basis.cols());
    diffs.push_back(std::move(*d));
    emb.push_back(std::move(basis));
  }
  return {ConnComplex(R, std::move(ranks), std::move(diffs)), std::move(emb)};
}

ChainMap nor_map(const SimplicialMap& f) {
  if (!is_simplicial(f)) throw NotSimplicial("map does not commute with the face and degeneracy maps");
  EmbeddedComplex a = nor(f.source()), b = nor(f.target());
  std::vector<Matrix> comps;
  for (std::size_t n = 0; n <= f.source().horizon(); ++n) {
    auto c = solve(b.embedding[n], f.component(n) * a.embedding[n]);
    if (!c) throw NotSimplicial("map does not preserve normalized chains");
    comps.push_back(std::move(*c));
  }
  return ChainMap(a.complex, b.complex, std::move(comps));
}

ConnComplex moore(const SimplicialModule& m) {
  std::vector<Matrix> diffs;
  for (std::size_t n = 1; n <= m.horizon(); ++n) {
    Matrix d(m.ring(), m.rank(n - 1), m.rank(n));
    for (std::size_t i = 0; i <= n; ++i) d = i % 2 ? d - m.face(n, i) : d + m.face(n, i);
    diffs.push_back(std::move(d));
  }
  return ConnComplex(m.ring(), m.ranks(), std::move(diffs));
}

EmbeddedComplex degenerate_part(const SimplicialModule& m) {
  const Ring& R = m.ring();
  ConnComplex c = moore(m);
  std::vector<Matrix> emb{Matrix(R, m.rank(0), 0)};
  std::vector<std::size_t> ranks{0};
  std::vector<Matrix> diffs;
  for (std::size_t n = 1; n <= m.horizon(); ++n) {
    std::vector<Matrix> parts;
    for (std::size_t i = 0; i < n; ++i) parts.push_back(m.degen(n - 1, i));
    Matrix basis = image_basis(hstack(R, m.rank(n), parts));
    auto d = solve(emb[n - 1], c.diff(n) * basis);
    if (!d) throw NotSimplicial("degenerate chains are not closed under the boundary");
    ranks.push_back(basis.cols());
    diffs.push_back(std::move(*d));
    emb.push_back(std::move(basis));
  }
  return {ConnComplex(R, std::move(ranks), std::move(diffs)), std::move(emb)};
}

// ------------------------------------------------------- tensors and copowers

SimplicialModule direct_sum(const SimplicialModule& a, const SimplicialModule& b) {
  if (!(a.ring() == b.ring())) throw RingError("direct sum over different rings");
  const std::size_t h = std::min(a.horizon(), b.horizon());
  std::vector<std::size_t> ranks;
  std::vector<std::vector<Matrix>> faces(h + 1), degens(h);
  for (std::size_t n = 0; n <= h; ++n) ranks.push_back(a.rank(n) + b.rank(n));
  for (std::size_t n = 1; n <= h; ++n)
    for (std::size_t i = 0; i <= n; ++i) faces[n].push_back(direct_sum(a.face(n, i), b.face(n, i)));
  for (std::size_t n = 0; n < h; ++n)
    for (std::size_t i = 0; i <= n; ++i) degens[n].push_back(direct_sum(a.degen(n, i), b.degen(n, i)));
  return SimplicialModule(a.ring(), h, std::move(ranks), std::move(faces), std::move(degens));
}

SimplicialModule tensor_sm(const SimplicialModule& a, const SimplicialModule& b) {
  if (!(a.ring() == b.ring())) throw RingError("tensor product over different rings");
  const std::size_t h = std::min(a.horizon(), b.horizon());
  std::vector<std::size_t> ranks;
  std::vector<std::vector<Matrix>> faces(h + 1), degens(h);
  for (std::size_t n = 0; n <= h; ++n) ranks.push_back(a.rank(n) * b.rank(n));
  for (std::size_t n = 1; n <= h; ++n)
    for (std::size_t i = 0; i <= n; ++i) faces[n].push_back(kron(a.face(n, i), b.face(n, i)));
  for (std::size_t n = 0; n < h; ++n)
    for (std::size_t i = 0; i <= n; ++i) degens[n].push_back(kron(a.degen(n, i), b.degen(n, i)));
  return SimplicialModule(a.ring(), h, std::move(ranks), std::move(faces), std::move(degens));
}

SimplicialModule copower(const SimplicialModule& m, const FinSimplicialSet& u) {
  if (u.horizon() < m.horizon()) throw DomainError("copower: simplicial set stops below the module's horizon");
  return tensor_sm(free_module(u, m.ring()), m);
}

Cylinder cylinder(const SimplicialModule& m) {
  const Ring& R = m.ring();
  const std::size_t h = m.horizon();
  SimplicialModule sum = direct_sum(m, m);
  SimplicialModule cyl = copower(m, simplex_set(1, h));
  std::vector<Matrix> kappa, xi;
  for (std::size_t n = 0; n <= h; ++n) {
    const std::size_t r = m.rank(n), cells = n + 2;  // constant 0 first, constant 1 last
    Matrix k(R, cells * r, 2 * r), x(R, r, cells * r);
    k.set_block(0, 0, Matrix::identity(R, r));
    k.set_block((cells - 1) * r, r, Matrix::identity(R, r));
    for (std::size_t c = 0; c < cells; ++c) x.set_block(0, c * r, Matrix::identity(R, r));
    kappa.push_back(std::move(k));
    xi.push_back(std::move(x));
  }
  SimplicialMap kmap(sum, cyl, std::move(kappa)), xmap(cyl, m, std::move(xi));
  return {std::move(sum), std::move(cyl), std::move(kmap), std::move(xmap)};
}

// ---------------------------------------------------- nerve contraction

NerveContraction nerve_contraction(const FinPoset& p, std::size_t horizon, const Ring& ring) {
  auto least = p.least_element();
  if (!least) throw DomainError("poset has no least element");
  const int e = static_cast<int>(*least);
  FinSimplicialSet nv = nerve(p, horizon);
  // basis of C/D: the nondegenerate chains
  std::vector<std::vector<std::size_t>> basis(horizon + 1);
  std::vector<std::map<std::size_t, std::size_t>> position(horizon + 1);
  for (std::size_t m = 0; m <= horizon; ++m)
    for (std::size_t c = 0; c < nv.count(m); ++c)
      if (!nv.is_degenerate(m, c)) {
        position[m][c] = basis[m].size();
        basis[m].push_back(c);
      }
  std::vector<std::size_t> ranks;
  std::vector<Matrix> diffs;
  for (std::size_t m = 0; m <= horizon; ++m) {
    ranks.push_back(basis[m].size());
    if (m == 0) continue;
    Matrix d(ring, basis[m - 1].size(), basis[m].size());
    for (std::size_t j = 0; j < basis[m].size(); ++j)
      for (std::size_t i = 0; i <= m; ++i) {
        auto it = position[m - 1].find(nv.face(m, i, basis[m][j]));
        if (it == position[m - 1].end()) continue;
        d(it->second, j) = ring.add(d(it->second, j), ring.from_int(i % 2 ? -1 : 1));
      }
    diffs.push_back(std::move(d));
  }
  NerveContraction out;
  out.quotient = ConnComplex(ring, ranks, std::move(diffs));
  for (std::size_t m = 0; m <= horizon; ++m) {
    Matrix ze(ring, ranks[m], ranks[m]);
    if (m == 0)
      for (std::size_t j = 0; j < ranks[0]; ++j) ze(position[0].at(*nv.index_of(0, Cell{e})), j) = 1;
    out.unit_counit.push_back(std::move(ze));
    if (m == horizon) break;
    // t_m prepends the least element; the result is degenerate when a_0 = e
    Matrix t(ring, basis[m + 1].size(), ranks[m]);
    for (std::size_t j = 0; j < ranks[m]; ++j) {
      const Cell& c = nv.cells(m)[basis[m][j]];
      if (c.front() == e) continue;
      Cell longer{e};
      longer.insert(longer.end(), c.begin(), c.end());
      t(position[m + 1].at(*nv.index_of(m + 1, longer)), j) = 1;
    }
    out.homotopy.push_back(std::move(t));
  }
  return out;
}

}  // namespace halg
