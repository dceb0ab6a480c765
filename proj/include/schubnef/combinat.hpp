#pragma once

#include <vector>

#include "schubnef/numeric.hpp"
#include "schubnef/partition.hpp"

namespace schubnef {

/// Combinatorial binomial coefficient. Returns 0 whenever a < 0, b < 0 or
/// a < b, so callers never need to guard degenerate counting arguments.
Int binom_comb(long long a, long long b);

Int factorial(int n);

/// All partitions fitting in the box, in graded-lexicographic order.
/// The count equals binom_comb(rows + cols, rows).
std::vector<Partition> partitions_in_box(const BoxConstraint& box);

/// Partitions in the box with the given weight, in lexicographic order.
std::vector<Partition> partitions_in_box_of_weight(const BoxConstraint& box, int weight);

/// Littlewood-Richardson coefficient c^mu_{lambda,nu}, computed by direct
/// enumeration of LR skew tableaux of shape mu/lambda and content nu
/// (semistandard fillings whose reverse reading word is a ballot word).
/// Returns 0 when lambda is not contained in mu or |mu| != |lambda| + |nu|.
/// Results are memoized behind a mutex; the cache is a pure cache.
Int lr_coefficient(const Partition& lambda, const Partition& nu, const Partition& mu);

}  // namespace schubnef
