#pragma once

#include <cstddef>
#include <utility>

#include "miclab/dist.hpp"
#include "miclab/grids.hpp"

namespace miclab {

// x * log2(x) with the 0*log(0) = 0 convention (nonpositive inputs map to 0).
double xlog2x(double x);

// Mutual information of a grid distribution in bits:
// sum of p_ij * log2(p_ij / (row_i * col_j)). Nonnegative, at most
// log2(min(rows, cols)) up to rounding.
double mutual_information(const GridDistribution& p);

// Total variation distance: half the L1 distance. Shapes must match.
double tv_distance(const GridDistribution& p, const GridDistribution& q);

// Bound shape delta * log2(min(rows, cols) / delta) relating the mutual
// information gap of two distributions to their TV distance delta. Valid for
// 0 < delta <= 1/4 only; the hidden constant is exposed as `multiplier`.
double tv_mi_bound(double delta, std::size_t rows, std::size_t cols, double multiplier = 1.0);

// Terms of the decomposition bounding |I(pop|_g) - I(samp|_g)| through a finer
// grid gamma: straddle terms delta*log2(beta/delta) and d*log2(beta/d) plus
// the MI gap on the snapped subgrid g' (beta = cell count of g).
struct BoundBreakdown {
    double lhs = 0.0;
    double term_delta = 0.0;
    double term_d = 0.0;
    double term_subgrid = 0.0;
    std::size_t beta = 0;
};

BoundBreakdown decomposition_breakdown(const JointModel& model, const Dataset& data,
                                       const GridPartition& g, const GridPartition& gamma);

// TV before and after merging both distributions by the same contiguous
// grouping; the coarse TV never exceeds the fine TV.
std::pair<double, double> tv_coarsen_check(const GridDistribution& p_fine,
                                           const GridDistribution& q_fine,
                                           const std::vector<std::size_t>& row_groups,
                                           const std::vector<std::size_t>& col_groups);

}  // namespace miclab
