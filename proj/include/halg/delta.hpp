#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "halg/ring.hpp"

namespace halg {

// Order-preserving map [n] -> [m], stored as its value sequence.
class MonotoneMap {
 public:
  MonotoneMap() = default;
  // Throws DomainError unless values has n+1 weakly increasing entries <= m.
  MonotoneMap(std::size_t source_top, std::size_t target_top, std::vector<std::size_t> values);
  static MonotoneMap identity(std::size_t n);

  std::size_t source_top() const { return n_; }
  std::size_t target_top() const { return m_; }
  const std::vector<std::size_t>& values() const { return values_; }
  std::size_t operator()(std::size_t k) const { return values_[k]; }

  bool is_injective() const;
  bool is_surjective() const;
  bool is_identity() const { return n_ == m_ && is_injective(); }

  // Lexicographic on (values, source, target).
  auto operator<=>(const MonotoneMap&) const = default;
  bool operator==(const MonotoneMap&) const = default;

  // Canonical face/degeneracy word, e.g. "d2 d0 s1" (applied right to left).
  std::string word() const;
  std::string to_string() const;

 private:
  std::size_t n_ = 0, m_ = 0;
  std::vector<std::size_t> values_{0};
};

// [n-1] -> [n] missing i
MonotoneMap face(std::size_t n, std::size_t i);
// [n+1] -> [n] hitting i twice
MonotoneMap degeneracy(std::size_t n, std::size_t i);
// g∘f; ShapeError unless f's target is g's source.
MonotoneMap compose(const MonotoneMap& g, const MonotoneMap& f);

struct EpiMono {
  MonotoneMap mono, epi;  // f = mono∘epi
};
EpiMono epi_mono_factorize(const MonotoneMap& f);

std::vector<MonotoneMap> enumerate_monotone_maps(std::size_t n, std::size_t m);
// Surjections [n] -> [k] in lexicographic order of their values.
std::vector<MonotoneMap> enumerate_surjections(std::size_t n, std::size_t k);

// Positions j with f(j) = f(j+1); DomainError if f is not surjective.
std::vector<std::size_t> degeneracy_set(const MonotoneMap& f);
// Inverse of degeneracy_set: the surjection [n] -> [n - |positions|].
MonotoneMap surjection_with_degeneracies(std::size_t n, const std::vector<std::size_t>& positions);

struct SurjectionPair {
  MonotoneMap f, g;
  std::size_t k() const { return f.target_top(); }
  std::size_t l() const { return g.target_top(); }
  auto operator<=>(const SurjectionPair&) const = default;
  bool operator==(const SurjectionPair&) const = default;
};

// (f, g) is jointly monic iff their degeneracy sets are disjoint.
bool jointly_monic(const MonotoneMap& f, const MonotoneMap& g);
// Jointly monic surjection pairs out of [n] with k <= max_k and l <= max_l,
// in lexicographic order of (f.values, g.values).
std::vector<SurjectionPair> enumerate_jointly_monic_pairs(std::size_t n, std::size_t max_k,
                                                          std::size_t max_l);

// Permutation of {1..p+q} increasing on {1..p} and on {p+1..p+q};
// perm[a-1] is the image of a.
struct Shuffle {
  std::size_t p = 0, q = 0;
  std::vector<std::size_t> perm;
  int sign() const;
  bool operator==(const Shuffle&) const = default;
};

// For f: [n]->[k], g: [n]->[l] jointly monic with k + l = n.
Shuffle shuffle_of_pair(const MonotoneMap& f, const MonotoneMap& g);
SurjectionPair pair_of_shuffle(const Shuffle& nu);
std::vector<Shuffle> enumerate_shuffles(std::size_t p, std::size_t q);

Integer binomial(std::size_t n, std::size_t k);
Integer shuffle_count(std::size_t p, std::size_t q);

}  // namespace halg
