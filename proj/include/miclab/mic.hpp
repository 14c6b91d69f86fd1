#pragma once

#include <cstddef>
#include <map>
#include <ostream>
#include <utility>
#include <vector>

#include "miclab/dist.hpp"
#include "miclab/grids.hpp"

namespace miclab {

// Search space for characteristic-matrix entries. Both matrices maximize over
// a finite per-axis candidate cut family; the maximization is exhaustive
// within that family, giving a documented lower bound on the unrestricted
// supremum.
struct SearchConfig {
    // Per-axis candidate budget m. Population candidates are the nested
    // equipartition quantile levels {t/j : 2 <= j <= J} with J maximal such
    // that the distinct level count stays <= m (nested in m, so entries never
    // decrease as m grows). Sample candidates are midpoints between
    // consecutive distinct coordinates, thinned to at most m by rank-uniform
    // selection.
    std::size_t candidate_cuts_per_axis = 32;

    // Budget B on k*l. When 0, derived as floor(n^alpha) from the sample size.
    std::size_t max_cells = 0;
    double alpha = 0.4;

    // Entries whose candidate-grid count exceeds this are refused rather than
    // silently approximated.
    std::size_t exhaustive_limit = 1'000'000;
};

using MatrixKey = std::pair<std::size_t, std::size_t>;  // (k rows, l cols)

struct CharEntry {
    double value = 0.0;
    std::vector<double> x_cuts, y_cuts;  // attained maximizer, lexicographically
                                         // smallest (y_cuts, x_cuts) on ties
    std::size_t candidates_x = 0, candidates_y = 0;
    bool exhaustive = true;
};

class CharacteristicMatrix {
public:
    CharacteristicMatrix() = default;
    explicit CharacteristicMatrix(std::size_t budget) : budget_(budget) {}

    void insert(MatrixKey key, CharEntry entry) { entries_[key] = std::move(entry); }
    const std::map<MatrixKey, CharEntry>& entries() const { return entries_; }
    std::size_t budget() const { return budget_; }

    double value(std::size_t k, std::size_t l) const;

    // Max stored entry; an empty matrix is rejected.
    double mic_value() const;

    // Columns: k,l,value,attained_x_cuts,attained_y_cuts,candidate_m,exhaustive
    // (cut lists and the per-axis candidate counts are ';'-joined).
    void write_csv(std::ostream& os) const;

private:
    std::map<MatrixKey, CharEntry> entries_;
    std::size_t budget_ = 0;
};

// Max over shared (k,l) of |a - b|; the key sets must match.
double matrix_deviation(const CharacteristicMatrix& a, const CharacteristicMatrix& b);

// Nested equipartition quantile levels {t/j : 2 <= j <= J}, J maximal with
// distinct-level count <= m. Sorted, strictly inside (0,1).
std::vector<double> equipartition_levels(std::size_t m);

// Marginal quantiles of the model at equipartition_levels(m), deduplicated.
std::vector<double> population_candidate_cuts(const JointModel& model, Axis axis, std::size_t m);

// Midpoints between consecutive distinct sorted values, thinned to at most m
// by rank-uniform selection.
std::vector<double> sample_candidate_cuts(std::vector<double> coords, std::size_t m);

// Entry (k,l) = max over enumerated k x l candidate grids of
// I((X,Y)|_G) / log2(min(k,l)). Requires an explicit max_cells budget.
// Entries the candidate family cannot express (more cuts needed than
// candidates exist) are omitted.
CharacteristicMatrix population_char_matrix(const JointModel& model, const SearchConfig& cfg);

// Sample analogue over rank-midpoint candidates; an entry needing more cuts
// than there are distinct coordinates is an error.
CharacteristicMatrix sample_char_matrix(const Dataset& data, const SearchConfig& cfg);

namespace detail {

// Precomputed p*log2(p) of every axis interval and interval pair over a fixed
// boundary set, so a grid's mutual information is a handful of table lookups.
struct MiTables {
    std::size_t nbx = 0, nby = 0;      // boundary counts (candidates + 2)
    std::size_t n_ix = 0, n_iy = 0;    // interval counts per axis
    std::vector<int> tri_x, tri_y;     // boundary pair (a*nb + b) -> interval id
    std::vector<double> plogp_x, plogp_y;
    std::vector<double> plogp_joint;   // [iy * n_ix + ix]

    static MiTables from_fine_masses(const std::vector<double>& fine,
                                     std::size_t ny_cells, std::size_t nx_cells);
};

// Row-major (ny_cells x nx_cells) cell masses over the boundary grid formed by
// the given cut lists.
std::vector<double> population_fine_masses(const JointModel& model,
                                           const std::vector<double>& x_cuts,
                                           const std::vector<double>& y_cuts);
std::vector<double> sample_fine_masses(const Dataset& data,
                                       const std::vector<double>& x_cuts,
                                       const std::vector<double>& y_cuts);

// Number of candidate k x l grids (as a double; may be huge).
double grid_count(std::size_t ncx, std::size_t ncy, std::size_t k, std::size_t l);

// Keys with k,l >= 2 and k*l <= budget that the candidate family can express;
// the omitted infeasible keys are appended to *skipped when given.
std::vector<MatrixKey> budget_keys(std::size_t budget, std::size_t ncx, std::size_t ncy,
                                   std::vector<MatrixKey>* skipped = nullptr);

struct EntryScan {
    double best_a = 0.0;
    double best_b = 0.0;        // valid when a second table set was given
    double max_absdiff = 0.0;   // max over grids of |value_a - value_b|
    std::vector<int> argmax_x_a, argmax_y_a;  // candidate indices for best_a
    std::vector<int> argmax_x_b, argmax_y_b;
};

// Exhaustive scan of all k x l grids from the candidate family; `b`, when
// non-null, must share the boundary layout of `a`.
EntryScan scan_entry(const MiTables& a, const MiTables* b, std::size_t k, std::size_t l);

}  // namespace detail

}  // namespace miclab
