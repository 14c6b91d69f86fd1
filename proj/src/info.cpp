#include "miclab/info.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace miclab {

double xlog2x(double x) {
    return x > 0.0 ? x * std::log2(x) : 0.0;
}

double mutual_information(const GridDistribution& p) {
    const std::vector<double> rows = p.row_sums();
    const std::vector<double> cols = p.col_sums();
    double mi = 0.0;
    for (std::size_t i = 0; i < p.rows(); ++i) {
        for (std::size_t j = 0; j < p.cols(); ++j) {
            const double v = p.at(i, j);
            if (v > 0.0) {
                mi += v * std::log2(v / (rows[i] * cols[j]));
            }
        }
    }
    return std::max(0.0, mi);
}

double tv_distance(const GridDistribution& p, const GridDistribution& q) {
    if (p.rows() != q.rows() || p.cols() != q.cols()) {
        throw std::invalid_argument("tv_distance: shape mismatch");
    }
    double l1 = 0.0;
    for (std::size_t i = 0; i < p.rows(); ++i) {
        for (std::size_t j = 0; j < p.cols(); ++j) {
            l1 += std::abs(p.at(i, j) - q.at(i, j));
        }
    }
    return 0.5 * l1;
}

double tv_mi_bound(double delta, std::size_t rows, std::size_t cols, double multiplier) {
    if (!(delta > 0.0 && delta <= 0.25)) {
        throw std::invalid_argument(
            "tv_mi_bound: hypothesis requires 0 < delta <= 1/4");
    }
    if (rows < 2 || cols < 2) {
        throw std::invalid_argument("tv_mi_bound: rows and cols must be >= 2");
    }
    const double k = static_cast<double>(std::min(rows, cols));
    return multiplier * delta * std::log2(k / delta);
}

namespace {

// t * log2(beta / t), zero at t = 0 by the limit convention.
double straddle_term(double t, double beta) {
    return t > 0.0 ? t * std::log2(beta / t) : 0.0;
}

}  // namespace

BoundBreakdown decomposition_breakdown(const JointModel& model, const Dataset& data,
                                       const GridPartition& g, const GridPartition& gamma) {
    BoundBreakdown out;
    out.beta = g.rows() * g.cols();

    const GridDistribution pop_g = induce_population(model, g);
    const GridDistribution samp_g = induce_sample(data, g);
    out.lhs = std::abs(mutual_information(pop_g) - mutual_information(samp_g));

    const StraddleReport rep = straddle_mass(model, data, gamma, g);
    const double beta = static_cast<double>(out.beta);
    out.term_delta = straddle_term(rep.delta, beta);
    out.term_d = straddle_term(rep.d, beta);

    const GridPartition sub = snap_to_subgrid(g, gamma);
    const GridDistribution pop_sub = induce_population(model, sub);
    const GridDistribution samp_sub = induce_sample(data, sub);
    out.term_subgrid = std::abs(mutual_information(pop_sub) - mutual_information(samp_sub));
    return out;
}

std::pair<double, double> tv_coarsen_check(const GridDistribution& p_fine,
                                           const GridDistribution& q_fine,
                                           const std::vector<std::size_t>& row_groups,
                                           const std::vector<std::size_t>& col_groups) {
    const double fine = tv_distance(p_fine, q_fine);
    const GridDistribution p_coarse = coarsen(p_fine, row_groups, col_groups);
    const GridDistribution q_coarse = coarsen(q_fine, row_groups, col_groups);
    return {fine, tv_distance(p_coarse, q_coarse)};
}

}  // namespace miclab
