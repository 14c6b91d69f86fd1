#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

namespace miclab {

enum class Axis { X, Y };

struct Point {
    double x = 0.0;
    double y = 0.0;
};

// An iid sample from a JointModel (seed 0 marks externally supplied data).
struct Dataset {
    std::vector<Point> points;
    std::uint64_t seed = 0;

    std::size_t n() const { return points.size(); }
};

// Synthetic joint distribution over the unit square with exact population
// computations: rectangle masses and marginal quantiles are closed-form, so
// population-side quantities in experiments are exact rather than estimated.
class JointModel {
public:
    struct IndependentUniform {};

    // block_masses[ix][iy] is the mass of the block
    // [ix/mx, (ix+1)/mx] x [iy/my, (iy+1)/my]; density is uniform within a
    // block. Masses must be nonnegative and sum to 1 within 1e-12.
    struct PiecewiseConstant {
        std::vector<std::vector<double>> block_masses;
    };

    // X uniform on [0,1], Y = f(X) with f strictly increasing and piecewise
    // linear through the given breakpoints; requires f(0)=0 and f(1)=1.
    struct DeterministicMonotone {
        std::vector<Point> breakpoints;
    };

    static JointModel independent_uniform();
    static JointModel piecewise_constant(std::vector<std::vector<double>> block_masses);
    static JointModel deterministic_monotone(std::vector<Point> breakpoints);

    // {"variant": "independent_uniform" | "piecewise_constant" |
    //  "deterministic_monotone", ...variant fields}; see README for the schema.
    static JointModel from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;

    // Exact probability mass of [x_lo,x_hi] x [y_lo,y_hi]. Inverted or
    // out-of-range bounds are rejected.
    double rect_mass(double x_lo, double x_hi, double y_lo, double y_hi) const;

    // Smallest coordinate c with marginal CDF(c) >= p, for p in [0,1].
    double marginal_quantile(Axis axis, double p) const;

    // As above but rejects quantiles made non-unique by a flat stretch of the
    // marginal CDF at level p (names the axis in the error message).
    double marginal_quantile_strict(Axis axis, double p) const;

    double marginal_cdf(Axis axis, double c) const;

    // n iid draws; bit-identical for equal (model, n, seed). n = 0 rejected.
    Dataset sample(std::size_t n, std::uint64_t seed) const;

    bool is_independent_uniform() const {
        return std::holds_alternative<IndependentUniform>(v_);
    }

private:
    JointModel() = default;

    const PiecewiseConstant& pc() const { return std::get<PiecewiseConstant>(v_); }
    const DeterministicMonotone& dm() const { return std::get<DeterministicMonotone>(v_); }

    double pc_marginal_quantile(Axis axis, double p, bool strict) const;
    double monotone_eval(double x) const;      // f(x)
    double monotone_inverse(double y) const;   // f^{-1}(y)

    std::variant<IndependentUniform, PiecewiseConstant, DeterministicMonotone> v_;

    // Piecewise-constant marginals: cumulative masses at block boundaries
    // (x_cum_[i] = mass of X <= i/mx), plus flattened block CDF for sampling.
    std::vector<double> x_cum_, y_cum_;
    std::vector<double> block_cum_;
    std::size_t mx_ = 0, my_ = 0;
};

}  // namespace miclab
