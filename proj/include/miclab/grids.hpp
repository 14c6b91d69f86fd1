#pragma once

#include <cstddef>
#include <vector>

#include "json.hpp"

#include "miclab/dist.hpp"

namespace miclab {

// Axis-aligned grid over [0,1]^2 given by interior cut coordinates.
// Columns are the x-axis bins (|x_cuts|+1), rows the y-axis bins.
struct GridPartition {
    std::vector<double> x_cuts;
    std::vector<double> y_cuts;

    std::size_t rows() const { return y_cuts.size() + 1; }
    std::size_t cols() const { return x_cuts.size() + 1; }

    // Cuts must be strictly increasing and interior to (0,1).
    void validate() const;

    static GridPartition from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;
};

// Discrete distribution over the cells of a grid: rows x cols nonnegative
// masses summing to 1. Row index runs over y-bins, column index over x-bins.
class GridDistribution {
public:
    GridDistribution(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), m_(rows * cols, 0.0) {}

    static GridDistribution from_masses(const std::vector<std::vector<double>>& masses);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double& at(std::size_t i, std::size_t j) { return m_[i * cols_ + j]; }
    double at(std::size_t i, std::size_t j) const { return m_[i * cols_ + j]; }

    const std::vector<double>& data() const { return m_; }

    std::vector<double> row_sums() const;
    std::vector<double> col_sums() const;
    double total() const;

    // Entry nonnegativity and total mass within 1e-12 of 1.
    void validate() const;

private:
    std::size_t rows_, cols_;
    std::vector<double> m_;
};

// Straddle masses of a finer grid's cells cut by lines of a coarser grid g:
// delta under the population, d under the sample. straddled_rows/cols are the
// finer grid's row/column indices containing a separator of g.
struct StraddleReport {
    double delta = 0.0;
    double d = 0.0;
    std::vector<std::size_t> straddled_rows;
    std::vector<std::size_t> straddled_cols;
};

// Grid whose induced population rows all have mass 1/rows and columns mass
// 1/cols. Rejects models whose flat marginal-CDF regions make a needed
// quantile non-unique.
GridPartition equipartition(const JointModel& model, std::size_t rows, std::size_t cols);

// Entry (i,j) = exact rect_mass of cell (i,j).
GridDistribution induce_population(const JointModel& model, const GridPartition& grid);

// Entry (i,j) = fraction of sample points in cell (i,j). Points exactly on a
// cut line are assigned to the lower-index cell.
GridDistribution induce_sample(const Dataset& data, const GridPartition& grid);

// Cell index convention of induce_sample for a single coordinate.
std::size_t cell_index(const std::vector<double>& cuts, double coord);

// Replace every cut of g by the nearest cut of gamma (ties to the lower
// coordinate; exact matches kept; duplicates collapsed). The result's cuts
// are a subset of gamma's.
GridPartition snap_to_subgrid(const GridPartition& g, const GridPartition& gamma);

StraddleReport straddle_mass(const JointModel& model, const Dataset& data,
                             const GridPartition& gamma, const GridPartition& g);

// Same computation on already-induced distributions over gamma.
StraddleReport straddle_from_induced(const GridDistribution& pop, const GridDistribution& samp,
                                     const GridPartition& gamma, const GridPartition& g);

// Merge rows/cols into contiguous groups given by per-index group ids
// (nondecreasing from 0, steps of at most 1); masses of merged cells are
// summed.
GridDistribution coarsen(const GridDistribution& dist,
                         const std::vector<std::size_t>& row_groups,
                         const std::vector<std::size_t>& col_groups);

// Group ids mapping each interval of the fine cut list onto the intervals of
// the (coarser) sub cut list; identity grouping when sub == fine.
std::vector<std::size_t> subgrid_groups(const std::vector<double>& fine_cuts,
                                        const std::vector<double>& sub_cuts);

}  // namespace miclab
