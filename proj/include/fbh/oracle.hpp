// Deliberately naive reference computations. Nothing here calls the main
// library's algorithms; checks compare the two.
#pragma once

#include <map>
#include <vector>

#include "fbh/rational.hpp"

namespace fbh::oracle {

using Tuple = std::vector<int>;

/// Maximum matching size by trying every edge in or out, in input order.
int matching_number(const std::vector<Tuple>& edges);

/// Degrees recomputed from scratch; true when each side is constant and the
/// weights are nonnegative and not all zero.
bool constant_degrees(const std::vector<int>& sides, const std::map<Tuple, Rational>& f);

/// Degree of every vertex, [side][index - 1].
std::vector<std::vector<Rational>> degree_table(const std::vector<int>& sides, const std::map<Tuple, Rational>& f);

/// Indicators of the n! permutation matrices, as sets of (row, column).
std::vector<std::map<Tuple, long long>> permutation_indicators(int n);

/// Indicators of the unions of n disjoint stars K_{1,s} centred on the n
/// left vertices and covering the n*s right vertices.
std::vector<std::map<Tuple, long long>> star_unions(int n, int s);

/// Every integer vector w >= 0 on the complete hypergraph with constant
/// side degrees and 0 < |w| <= cap, found by filtering every vector of
/// total at most cap.
std::vector<std::map<Tuple, long long>> balanced_vectors(const std::vector<int>& sides, long long cap);

/// Whether w is a sum of members of gens (repetition allowed).
bool decomposes(const std::map<Tuple, long long>& w, const std::vector<std::map<Tuple, long long>>& gens);

/// Maximum number of pairwise disjoint members; a member is a list of open
/// intervals given as (lo, hi) pairs.
int disjoint_family_size(const std::vector<std::vector<std::pair<Rational, Rational>>>& members);

/// Meshulam's game by plain minimax on an edge list over vertices 0..n-1;
/// -1 stands for infinity.
int game_value(int n, const std::vector<std::pair<int, int>>& edges);

}  // namespace fbh::oracle
