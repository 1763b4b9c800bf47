// Explicit balanced hypergraphs with small matching number.
#pragma once

#include "fbh/hypergraph.hpp"
#include "fbh/rational.hpp"

namespace fbh {

/// Sides (2,2,2), edges 111, 122, 212, 221, f = 1/4.
WeightedHypergraph pasch();

/// floor(n/2) Pasch copies on index blocks {2i-1, 2i}, plus the edge (n,n,n)
/// when n is odd. f = 1/4 on Pasch edges and 1/2 on the extra edge.
WeightedHypergraph nnn_tight(int n);

/// Sides (2n-2, n, n): (i,j,j) for i < n and (i,j,j+1) for i >= n, indices of
/// the last two sides read cyclically. f = 1.
WeightedHypergraph drisko(int n);

/// The three-block construction for sides (k, n, n), floor(3n/4) < k < n.
/// Throws if a weight would be negative.
WeightedHypergraph mlessn(int k, int n);

/// The block construction for sides (k, n, n) when m = floor(n/2) < k and
/// (k - m) divides m.
WeightedHypergraph mlessn2(int k, int n);

/// Sides (n, n, k) with P = 2rn/(2r+1) and N = k - P. Requires rn, 2r and P
/// integral and P <= k <= rn. Zero-weight edges are left out.
WeightedHypergraph main_negative(int n, const Rational& r, int k);

/// Bipartite (d = 2) graph with A = [m] + {a} (a is index n) and B = [N + m],
/// m = n - 1, N = m^2 - m. Needs n >= 3.
WeightedHypergraph zeta_counterexample(int n);

/// A d = 2 hypergraph as a multigraph; labels are edge positions.
Multigraph as_multigraph(const PartiteHypergraph& h);

/// Projective plane of prime order p = q - 1 minus one point and its lines:
/// q sides of size q - 1, (q-1)^2 edges, pairwise intersecting.
PartiteHypergraph truncated_projective(int q);

/// Appends m copies of the last side; every edge repeats its last index.
PartiteHypergraph duplicate_side(const PartiteHypergraph& h, int m);

/// J_n(k): n sides of size k (side = row, index = column); J_n(1) = I_n and
/// J_n(2) = I_n + J_n. Needs 2^(k-1) - 1 < n/2.
PartiteHypergraph column_blocks(int n, int k);

/// Side-wise disjoint union; both parts need the same d.
PartiteHypergraph disjoint_union(const PartiteHypergraph& a, const PartiteHypergraph& b);

/// n-partite, sides of size n, nu = 2:
///   1: H_q + I_q with q = n
///   2: H_q^1 + I_n + J_n with q = n - 1
///   3: H_q^(p-2) + H_p^(q-2) with q + p - 2 = n (param = q, or 0 for the smallest valid q)
///   4: H_q^(k-1) + J_n(k) with q = n - k + 1 (param = k, or 0 for the largest valid k)
PartiteHypergraph conj_nn(int n, int variant, int param = 0);

bool is_prime(int p);

}  // namespace fbh
