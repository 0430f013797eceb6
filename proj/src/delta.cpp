#include "halg/delta.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace halg {

MonotoneMap::MonotoneMap(std::size_t source_top, std::size_t target_top, std::vector<std::size_t> values)
    : n_(source_top), m_(target_top), values_(std::move(values)) {
  if (values_.size() != n_ + 1) throw DomainError("monotone map needs source+1 values");
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] > m_) throw DomainError("monotone map value exceeds target");
    if (i && values_[i - 1] > values_[i]) throw DomainError("values are not weakly increasing");
  }
}

MonotoneMap MonotoneMap::identity(std::size_t n) {
  std::vector<std::size_t> v(n + 1);
  std::iota(v.begin(), v.end(), 0);
  return MonotoneMap(n, n, std::move(v));
}

bool MonotoneMap::is_injective() const {
  for (std::size_t i = 1; i < values_.size(); ++i)
    if (values_[i] == values_[i - 1]) return false;
  return true;
}

bool MonotoneMap::is_surjective() const {
  if (values_.front() != 0 || values_.back() != m_) return false;
  for (std::size_t i = 1; i < values_.size(); ++i)
    if (values_[i] > values_[i - 1] + 1) return false;
  return true;
}

std::string MonotoneMap::word() const {
  EpiMono em = epi_mono_factorize(*this);
  std::vector<std::string> parts;
  // mono = δ_{m_s} ∘ ... ∘ δ_{m_1} over the missed values m_1 < ... < m_s
  std::vector<std::size_t> missed;
  for (std::size_t v = 0, idx = 0; v <= m_; ++v) {
    const auto& img = em.mono.values();
    if (idx < img.size() && img[idx] == v)
      ++idx;
    else
      missed.push_back(v);
  }
  for (auto it = missed.rbegin(); it != missed.rend(); ++it) parts.push_back("d" + std::to_string(*it));
  for (std::size_t j : degeneracy_set(em.epi)) parts.push_back("s" + std::to_string(j));
  if (parts.empty()) return "id";
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? " " : "") + parts[i];
  return out;
}

std::string MonotoneMap::to_string() const {
  std::ostringstream os;
  os << "[" << n_ << "]->[" << m_ << "] (";
  for (std::size_t i = 0; i < values_.size(); ++i) os << (i ? "," : "") << values_[i];
  os << ")";
  return os.str();
}

MonotoneMap face(std::size_t n, std::size_t i) {
  if (n < 1 || i > n) throw IndexError("face index out of range");
  std::vector<std::size_t> v(n);
  for (std::size_t k = 0; k < n; ++k) v[k] = k < i ? k : k + 1;
  return MonotoneMap(n - 1, n, std::move(v));
}

MonotoneMap degeneracy(std::size_t n, std::size_t i) {
  if (i > n) throw IndexError("degeneracy index out of range");
  std::vector<std::size_t> v(n + 2);
  for (std::size_t k = 0; k <= n + 1; ++k) v[k] = k <= i ? k : k - 1;
  return MonotoneMap(n + 1, n, std::move(v));
}

MonotoneMap compose(const MonotoneMap& g, const MonotoneMap& f) {
  if (f.target_top() != g.source_top()) throw ShapeError("compose: " + g.to_string() + " after " + f.to_string());
  std::vector<std::size_t> v(f.source_top() + 1);
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = g(f(k));
  return MonotoneMap(f.source_top(), g.target_top(), std::move(v));
}

EpiMono epi_mono_factorize(const MonotoneMap& f) {
  std::vector<std::size_t> image, epi;
  for (std::size_t v : f.values()) {
    if (image.empty() || image.back() != v) image.push_back(v);
    epi.push_back(image.size() - 1);
  }
  std::size_t k = image.size() - 1;
  return {MonotoneMap(k, f.target_top(), std::move(image)), MonotoneMap(f.source_top(), k, std::move(epi))};
}

std::vector<MonotoneMap> enumerate_monotone_maps(std::size_t n, std::size_t m) {
  std::vector<MonotoneMap> out;
  std::vector<std::size_t> v(n + 1, 0);
  for (;;) {
    out.emplace_back(n, m, v);
    // next weakly increasing sequence in lexicographic order
    std::size_t i = n + 1;
    while (i > 0 && v[i - 1] == m) --i;
    if (i == 0) break;
    ++v[i - 1];
    for (std::size_t j = i; j <= n; ++j) v[j] = v[i - 1];
  }
  return out;
}

std::vector<MonotoneMap> enumerate_surjections(std::size_t n, std::size_t k) {
  std::vector<MonotoneMap> out;
  if (k > n) return out;
  for (auto& f : enumerate_monotone_maps(n, k))
    if (f.is_surjective()) out.push_back(std::move(f));
  return out;
}

std::vector<std::size_t> degeneracy_set(const MonotoneMap& f) {
  if (!f.is_surjective()) throw DomainError("degeneracy set of a non-surjective map " + f.to_string());
  std::vector<std::size_t> d;
  for (std::size_t j = 0; j + 1 < f.values().size(); ++j)
    if (f(j) == f(j + 1)) d.push_back(j);
  return d;
}

MonotoneMap surjection_with_degeneracies(std::size_t n, const std::vector<std::size_t>& positions) {
  if (positions.size() > n) throw DomainError("too many degeneracy positions");
  std::vector<std::size_t> v(n + 1, 0);
  for (std::size_t j = 0; j < n; ++j) {
    bool stay = std::find(positions.begin(), positions.end(), j) != positions.end();
    v[j + 1] = v[j] + (stay ? 0 : 1);
  }
  for (std::size_t p : positions)
    if (p >= n) throw DomainError("degeneracy position out of range");
  return MonotoneMap(n, n - positions.size(), std::move(v));
}

bool jointly_monic(const MonotoneMap& f, const MonotoneMap& g) {
  if (f.source_top() != g.source_top()) throw ShapeError("jointly_monic: different sources");
  auto a = degeneracy_set(f), b = degeneracy_set(g);
  for (std::size_t x : a)
    if (std::binary_search(b.begin(), b.end(), x)) return false;
  return true;
}

std::vector<SurjectionPair> enumerate_jointly_monic_pairs(std::size_t n, std::size_t max_k, std::size_t max_l) {
  std::vector<MonotoneMap> fs, gs;
  for (std::size_t k = 0; k <= std::min(n, max_k); ++k)
    for (auto& f : enumerate_surjections(n, k)) fs.push_back(std::move(f));
  for (std::size_t l = 0; l <= std::min(n, max_l); ++l)
    for (auto& g : enumerate_surjections(n, l)) gs.push_back(std::move(g));
  std::vector<SurjectionPair> out;
  for (const auto& f : fs)
    for (const auto& g : gs)
      if (jointly_monic(f, g)) out.push_back({f, g});
  std::sort(out.begin(), out.end(), [](const SurjectionPair& a, const SurjectionPair& b) {
    if (a.f.values() != b.f.values()) return a.f.values() < b.f.values();
    return a.g.values() < b.g.values();
  });
  return out;
}

int Shuffle::sign() const {
  std::size_t inversions = 0;
  for (std::size_t a = 0; a < p; ++a)
    for (std::size_t b = p; b < p + q; ++b)
      if (perm[a] > perm[b]) ++inversions;
  return inversions % 2 ? -1 : 1;
}

Shuffle shuffle_of_pair(const MonotoneMap& f, const MonotoneMap& g) {
  std::size_t n = f.source_top(), k = f.target_top(), l = g.target_top();
  if (g.source_top() != n) throw ShapeError("shuffle_of_pair: different sources");
  if (k + l != n) throw DomainError("shuffle_of_pair: k + l must equal n");
  if (!jointly_monic(f, g)) throw DomainError("shuffle_of_pair: pair is not jointly monic");
  Shuffle nu{k, l, {}};
  for (std::size_t i : degeneracy_set(g)) nu.perm.push_back(i + 1);
  for (std::size_t j : degeneracy_set(f)) nu.perm.push_back(j + 1);
  return nu;
}

SurjectionPair pair_of_shuffle(const Shuffle& nu) {
  std::size_t n = nu.p + nu.q;
  if (nu.perm.size() != n) throw DomainError("shuffle has wrong length");
  std::vector<std::size_t> dg, df;
  for (std::size_t a = 0; a < nu.p; ++a) dg.push_back(nu.perm[a] - 1);
  for (std::size_t b = nu.p; b < n; ++b) df.push_back(nu.perm[b] - 1);
  return {surjection_with_degeneracies(n, df), surjection_with_degeneracies(n, dg)};
}

std::vector<Shuffle> enumerate_shuffles(std::size_t p, std::size_t q) {
  std::vector<Shuffle> out;
  std::size_t n = p + q;
  std::vector<bool> first(n, false);
  std::fill(first.begin(), first.begin() + p, true);
  // choose the image of {1..p}; prev_permutation walks subsets lexicographically
  do {
    Shuffle s{p, q, {}};
    for (std::size_t i = 0; i < n; ++i)
      if (first[i]) s.perm.push_back(i + 1);
    for (std::size_t i = 0; i < n; ++i)
      if (!first[i]) s.perm.push_back(i + 1);
    out.push_back(std::move(s));
  } while (std::prev_permutation(first.begin(), first.end()));
  return out;
}

Integer binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Integer shuffle_count(std::size_t p, std::size_t q) { return binomial(p + q, p); }

}  // namespace halg
