#include "miclab/grids.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace miclab {

namespace {

std::vector<double> boundaries(const std::vector<double>& cuts) {
    std::vector<double> b;
    b.reserve(cuts.size() + 2);
    b.push_back(0.0);
    b.insert(b.end(), cuts.begin(), cuts.end());
    b.push_back(1.0);
    return b;
}

void check_cut_list(const std::vector<double>& cuts, const char* axis) {
    for (double c : cuts) {
        if (!(c > 0.0 && c < 1.0)) {
            throw std::invalid_argument(std::string("grid: ") + axis +
                                        " cuts must lie strictly inside (0,1)");
        }
    }
    for (std::size_t i = 1; i < cuts.size(); ++i) {
        if (!(cuts[i] > cuts[i - 1])) {
            throw std::invalid_argument(std::string("grid: ") + axis +
                                        " cuts must be strictly increasing");
        }
    }
}

}  // namespace

void GridPartition::validate() const {
    check_cut_list(x_cuts, "x");
    check_cut_list(y_cuts, "y");
}

GridPartition GridPartition::from_json(const nlohmann::json& j) {
    GridPartition g;
    g.x_cuts = j.at("x_cuts").get<std::vector<double>>();
    g.y_cuts = j.at("y_cuts").get<std::vector<double>>();
    g.validate();
    return g;
}

nlohmann::json GridPartition::to_json() const {
    return nlohmann::json{{"x_cuts", x_cuts}, {"y_cuts", y_cuts}};
}

GridDistribution GridDistribution::from_masses(const std::vector<std::vector<double>>& masses) {
    if (masses.empty() || masses.front().empty()) {
        throw std::invalid_argument("grid distribution: empty mass matrix");
    }
    const std::size_t cols = masses.front().size();
    GridDistribution d(masses.size(), cols);
    for (std::size_t i = 0; i < masses.size(); ++i) {
        if (masses[i].size() != cols) {
            throw std::invalid_argument("grid distribution: ragged mass matrix");
        }
        for (std::size_t j = 0; j < cols; ++j) d.at(i, j) = masses[i][j];
    }
    d.validate();
    return d;
}

std::vector<double> GridDistribution::row_sums() const {
    std::vector<double> r(rows_, 0.0);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) r[i] += at(i, j);
    }
    return r;
}

std::vector<double> GridDistribution::col_sums() const {
    std::vector<double> c(cols_, 0.0);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) c[j] += at(i, j);
    }
    return c;
}

double GridDistribution::total() const {
    double t = 0.0;
    for (double v : m_) t += v;
    return t;
}

void GridDistribution::validate() const {
    for (double v : m_) {
        if (!(v >= 0.0)) {
            throw std::invalid_argument("grid distribution: masses must be >= 0");
        }
    }
    if (std::abs(total() - 1.0) > 1e-12) {
        throw std::invalid_argument("grid distribution: total mass must be 1 within 1e-12");
    }
}

GridPartition equipartition(const JointModel& model, std::size_t rows, std::size_t cols) {
    if (rows < 2 || cols < 2) {
        throw std::invalid_argument("equipartition: rows and cols must be >= 2");
    }
    GridPartition g;
    g.x_cuts.reserve(cols - 1);
    for (std::size_t j = 1; j < cols; ++j) {
        g.x_cuts.push_back(model.marginal_quantile_strict(
            Axis::X, static_cast<double>(j) / static_cast<double>(cols)));
    }
    g.y_cuts.reserve(rows - 1);
    for (std::size_t i = 1; i < rows; ++i) {
        g.y_cuts.push_back(model.marginal_quantile_strict(
            Axis::Y, static_cast<double>(i) / static_cast<double>(rows)));
    }
    g.validate();
    return g;
}

GridDistribution induce_population(const JointModel& model, const GridPartition& grid) {
    const auto bx = boundaries(grid.x_cuts);
    const auto by = boundaries(grid.y_cuts);
    GridDistribution d(grid.rows(), grid.cols());
    for (std::size_t i = 0; i < grid.rows(); ++i) {
        for (std::size_t j = 0; j < grid.cols(); ++j) {
            d.at(i, j) = model.rect_mass(bx[j], bx[j + 1], by[i], by[i + 1]);
        }
    }
    return d;
}

std::size_t cell_index(const std::vector<double>& cuts, double coord) {
    // First cut >= coord; a point exactly on a cut goes to the lower cell.
    return static_cast<std::size_t>(
        std::lower_bound(cuts.begin(), cuts.end(), coord) - cuts.begin());
}

GridDistribution induce_sample(const Dataset& data, const GridPartition& grid) {
    if (data.n() == 0) {
        throw std::invalid_argument("induce_sample: empty dataset");
    }
    std::vector<std::size_t> counts(grid.rows() * grid.cols(), 0);
    for (const Point& p : data.points) {
        const std::size_t j = cell_index(grid.x_cuts, p.x);
        const std::size_t i = cell_index(grid.y_cuts, p.y);
        ++counts[i * grid.cols() + j];
    }
    GridDistribution d(grid.rows(), grid.cols());
    const double n = static_cast<double>(data.n());
    for (std::size_t i = 0; i < grid.rows(); ++i) {
        for (std::size_t j = 0; j < grid.cols(); ++j) {
            d.at(i, j) = static_cast<double>(counts[i * grid.cols() + j]) / n;
        }
    }
    return d;
}

namespace {

std::vector<double> snap_axis(const std::vector<double>& cuts, const std::vector<double>& gamma) {
    std::vector<double> out;
    if (gamma.empty()) return out;  // no lines to snap onto
    out.reserve(cuts.size());
    for (double c : cuts) {
        const auto it = std::lower_bound(gamma.begin(), gamma.end(), c);
        double snapped;
        if (it == gamma.end()) {
            snapped = gamma.back();
        } else if (it == gamma.begin()) {
            snapped = gamma.front();
        } else {
            const double hi = *it;
            const double lo = *(it - 1);
            // Equidistant cuts snap to the lower coordinate.
            snapped = (c - lo <= hi - c) ? lo : hi;
        }
        out.push_back(snapped);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Finer-grid column/row indices containing (strictly inside) a cut of g.
std::vector<std::size_t> straddled_indices(const std::vector<double>& gamma_cuts,
                                           const std::vector<double>& g_cuts) {
    std::set<std::size_t> hit;
    for (double c : g_cuts) {
        if (std::binary_search(gamma_cuts.begin(), gamma_cuts.end(), c)) continue;
        hit.insert(cell_index(gamma_cuts, c));
    }
    return {hit.begin(), hit.end()};
}

double straddled_total(const GridDistribution& dist, const std::vector<std::size_t>& rows,
                       const std::vector<std::size_t>& cols) {
    std::vector<bool> row_hit(dist.rows(), false), col_hit(dist.cols(), false);
    for (std::size_t i : rows) row_hit[i] = true;
    for (std::size_t j : cols) col_hit[j] = true;
    double total = 0.0;
    for (std::size_t i = 0; i < dist.rows(); ++i) {
        for (std::size_t j = 0; j < dist.cols(); ++j) {
            if (row_hit[i] || col_hit[j]) total += dist.at(i, j);
        }
    }
    return total;
}

}  // namespace

GridPartition snap_to_subgrid(const GridPartition& g, const GridPartition& gamma) {
    GridPartition out;
    out.x_cuts = snap_axis(g.x_cuts, gamma.x_cuts);
    out.y_cuts = snap_axis(g.y_cuts, gamma.y_cuts);
    return out;
}

StraddleReport straddle_from_induced(const GridDistribution& pop, const GridDistribution& samp,
                                     const GridPartition& gamma, const GridPartition& g) {
    StraddleReport rep;
    rep.straddled_cols = straddled_indices(gamma.x_cuts, g.x_cuts);
    rep.straddled_rows = straddled_indices(gamma.y_cuts, g.y_cuts);
    rep.delta = straddled_total(pop, rep.straddled_rows, rep.straddled_cols);
    rep.d = straddled_total(samp, rep.straddled_rows, rep.straddled_cols);
    return rep;
}

StraddleReport straddle_mass(const JointModel& model, const Dataset& data,
                             const GridPartition& gamma, const GridPartition& g) {
    const GridDistribution pop = induce_population(model, gamma);
    const GridDistribution samp = induce_sample(data, gamma);
    return straddle_from_induced(pop, samp, gamma, g);
}

namespace {

std::size_t check_groups(const std::vector<std::size_t>& groups, std::size_t count,
                         const char* what) {
    if (groups.size() != count) {
        throw std::invalid_argument(std::string("coarsen: ") + what +
                                    " grouping length does not match the distribution");
    }
    if (groups.front() != 0) {
        throw std::invalid_argument(std::string("coarsen: ") + what + " groups must start at 0");
    }
    for (std::size_t i = 1; i < groups.size(); ++i) {
        if (groups[i] != groups[i - 1] && groups[i] != groups[i - 1] + 1) {
            throw std::invalid_argument(std::string("coarsen: ") + what +
                                        " groups must be contiguous and nondecreasing");
        }
    }
    return groups.back() + 1;
}

}  // namespace

GridDistribution coarsen(const GridDistribution& dist,
                         const std::vector<std::size_t>& row_groups,
                         const std::vector<std::size_t>& col_groups) {
    const std::size_t out_rows = check_groups(row_groups, dist.rows(), "row");
    const std::size_t out_cols = check_groups(col_groups, dist.cols(), "column");
    GridDistribution out(out_rows, out_cols);
    for (std::size_t i = 0; i < dist.rows(); ++i) {
        for (std::size_t j = 0; j < dist.cols(); ++j) {
            out.at(row_groups[i], col_groups[j]) += dist.at(i, j);
        }
    }
    return out;
}

std::vector<std::size_t> subgrid_groups(const std::vector<double>& fine_cuts,
                                        const std::vector<double>& sub_cuts) {
    std::vector<std::size_t> groups(fine_cuts.size() + 1, 0);
    const auto fine_b = boundaries(fine_cuts);
    for (std::size_t t = 0; t < groups.size(); ++t) {
        groups[t] = static_cast<std::size_t>(
            std::upper_bound(sub_cuts.begin(), sub_cuts.end(), fine_b[t]) - sub_cuts.begin());
    }
    return groups;
}

}  // namespace miclab
