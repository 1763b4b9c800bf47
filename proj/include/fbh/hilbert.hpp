// Integral balanced weightings: semigroup generators, Birkhoff decomposition
// and Hall extension of a matching by one more side.
#pragma once

#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "fbh/hypergraph.hpp"

namespace fbh {

/// Nonnegative integer weights on the complete d-partite hypergraph with the
/// given sides, constant degree on each side.
struct IntegralBalanced {
  std::vector<int> sides;
  std::map<Edge, long long> weights;  // zero entries omitted

  long long norm() const;
  friend bool operator==(const IntegralBalanced&, const IntegralBalanced&) = default;
  friend auto operator<=>(const IntegralBalanced& a, const IntegralBalanced& b) {
    return a.weights <=> b.weights;
  }
};

/// True when w is nonzero with constant degree on each side.
bool is_integral_balanced(const IntegralBalanced& w);

struct HilbertBasis {
  std::vector<IntegralBalanced> generators;  // by norm, then lexicographically
  long long closure_norm = 0;                // every generator has norm <= this
};

struct CapExceeded {
  std::vector<IntegralBalanced> partial;  // irreducible elements of norm <= cap
  long long needed_norm = 0;              // cap that would certify closure
};

/// Minimal generating set of the semigroup of integral balanced weightings.
/// Candidates are enumerated by increasing norm and kept when no earlier
/// generator fits below them. Closure is certified once the cap reaches the
/// largest norm a generator can have, bounded by the sum of the cone
/// dimension's worth of largest primitive extreme-ray norms.
/// At most 12 coordinates (product of side sizes).
std::variant<HilbertBasis, CapExceeded> hilbert_basis(const std::vector<int>& sides, long long norm_cap);

/// All integral balanced weightings of exactly the given norm.
std::vector<IntegralBalanced> balanced_of_norm(const std::vector<int>& sides, long long norm);

/// Permutation perm[i] = column (1-based) matched to row i + 1.
using Permutation = std::vector<int>;

/// Splits an n x n nonnegative integer matrix with equal line sums into
/// permutation matrices by repeatedly removing a perfect matching of the
/// support. Throws on unequal line sums.
std::vector<Permutation> birkhoff_decompose(const std::vector<std::vector<long long>>& w);

struct HallExtension {
  std::optional<std::vector<Edge>> matching;  // M with a new last coordinate
  std::vector<Edge> violator;                 // M-edges with too few options
};

/// Gives each edge e of M a distinct last-side vertex j with wprime(e + j) >= 1.
/// hprime has d + 1 sides, M is a matching of d-long edges each of which
/// extends to an edge in the support of wprime.
HallExtension hall_extend(const PartiteHypergraph& hprime, const std::vector<Edge>& m,
                          const WeightFunction& wprime);

}  // namespace fbh
