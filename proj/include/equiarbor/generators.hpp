#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "equiarbor/graph.hpp"

namespace equiarbor {

// Labelled families for the verification catalog. Labellings are fixed so
// witnesses in reports are stable:
//   complete(n)             0..n-1
//   complete_bipartite(m,n) parts {0..m-1} and {m..m+n-1}
//   cycle(n)                i ~ i+1 (mod n)
//   star(n)                 order n, centre 0
//   double_star(m,n)        centres 0 and 1; leaves of 0 are 2..m+1, of 1 are m+2..m+n+1
//   hypercube(d)            bit strings as integers, adjacent when one bit differs
//   petersen()              outer cycle 0..4, inner pentagram 5..9 (i+5 ~ (i+2)%5+5), spokes i ~ i+5
//   triangular_prism()      triangles {0,1,2} and {3,4,5}, rungs i ~ i+3
//   hamming(d,q)            base-q strings of length d in lexicographic order (most significant digit first)
//   johnson(n,k)            k-subsets of {0..n-1} in lexicographic order, adjacent when they share k-1 points

Graph complete(std::size_t n);
Graph complete_bipartite(std::size_t m, std::size_t n);
Graph cycle(std::size_t n);
Graph star(std::size_t n);
Graph double_star(std::size_t m, std::size_t n);
Graph hypercube(std::size_t d);
Graph petersen();
Graph triangular_prism();
Graph hamming(std::size_t d, std::size_t q);
Graph johnson(std::size_t n, std::size_t k);

/// Dispatches on the family name. Throws ParameterError for unknown families
/// or invalid parameters.
Graph generate(std::string_view family, std::span<const long long> params);

const std::vector<std::string>& family_names();

}  // namespace equiarbor
