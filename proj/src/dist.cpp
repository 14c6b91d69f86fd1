#include "miclab/dist.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "miclab/rng.hpp"

namespace miclab {

namespace {

void check_probability(double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("quantile level must lie in [0, 1]");
    }
}

const char* axis_name(Axis a) { return a == Axis::X ? "x" : "y"; }

}  // namespace

JointModel JointModel::independent_uniform() {
    JointModel m;
    m.v_ = IndependentUniform{};
    return m;
}

JointModel JointModel::piecewise_constant(std::vector<std::vector<double>> block_masses) {
    if (block_masses.empty() || block_masses.front().empty()) {
        throw std::invalid_argument("piecewise_constant: block_masses must be non-empty");
    }
    const std::size_t mx = block_masses.size();
    const std::size_t my = block_masses.front().size();
    double total = 0.0;
    for (const auto& col : block_masses) {
        if (col.size() != my) {
            throw std::invalid_argument("piecewise_constant: ragged block_masses");
        }
        for (double v : col) {
            if (!(v >= 0.0)) {
                throw std::invalid_argument("piecewise_constant: block masses must be >= 0");
            }
            total += v;
        }
    }
    if (std::abs(total - 1.0) > 1e-12) {
        throw std::invalid_argument("piecewise_constant: block masses must sum to 1 within 1e-12");
    }
    if (total != 1.0) {
        for (auto& col : block_masses) {
            for (double& v : col) v /= total;
        }
    }

    JointModel m;
    m.mx_ = mx;
    m.my_ = my;
    m.x_cum_.assign(mx + 1, 0.0);
    m.y_cum_.assign(my + 1, 0.0);
    m.block_cum_.assign(mx * my + 1, 0.0);
    for (std::size_t i = 0; i < mx; ++i) {
        double colsum = 0.0;
        for (std::size_t j = 0; j < my; ++j) colsum += block_masses[i][j];
        m.x_cum_[i + 1] = m.x_cum_[i] + colsum;
    }
    for (std::size_t j = 0; j < my; ++j) {
        double rowsum = 0.0;
        for (std::size_t i = 0; i < mx; ++i) rowsum += block_masses[i][j];
        m.y_cum_[j + 1] = m.y_cum_[j] + rowsum;
    }
    for (std::size_t i = 0; i < mx; ++i) {
        for (std::size_t j = 0; j < my; ++j) {
            const std::size_t b = i * my + j;
            m.block_cum_[b + 1] = m.block_cum_[b] + block_masses[i][j];
        }
    }
    m.v_ = PiecewiseConstant{std::move(block_masses)};
    return m;
}

JointModel JointModel::deterministic_monotone(std::vector<Point> breakpoints) {
    if (breakpoints.size() < 2) {
        throw std::invalid_argument("deterministic_monotone: need at least 2 breakpoints");
    }
    if (breakpoints.front().x != 0.0 || breakpoints.front().y != 0.0 ||
        breakpoints.back().x != 1.0 || breakpoints.back().y != 1.0) {
        throw std::invalid_argument("deterministic_monotone: requires f(0)=0 and f(1)=1");
    }
    for (std::size_t i = 1; i < breakpoints.size(); ++i) {
        if (!(breakpoints[i].x > breakpoints[i - 1].x) ||
            !(breakpoints[i].y > breakpoints[i - 1].y)) {
            throw std::invalid_argument(
                "deterministic_monotone: breakpoints must be strictly increasing in both coordinates");
        }
    }
    JointModel m;
    m.v_ = DeterministicMonotone{std::move(breakpoints)};
    return m;
}

JointModel JointModel::from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("variant")) {
        throw std::invalid_argument("model: expected an object with a \"variant\" field");
    }
    const std::string variant = j.at("variant").get<std::string>();
    if (variant == "independent_uniform") {
        return independent_uniform();
    }
    if (variant == "piecewise_constant") {
        return piecewise_constant(
            j.at("block_masses").get<std::vector<std::vector<double>>>());
    }
    if (variant == "deterministic_monotone") {
        std::vector<Point> bps;
        for (const auto& p : j.at("breakpoints")) {
            if (!p.is_array() || p.size() != 2) {
                throw std::invalid_argument("model: breakpoints must be [x, y] pairs");
            }
            bps.push_back(Point{p[0].get<double>(), p[1].get<double>()});
        }
        return deterministic_monotone(std::move(bps));
    }
    throw std::invalid_argument("model: unknown variant \"" + variant + "\"");
}

nlohmann::json JointModel::to_json() const {
    nlohmann::json j;
    if (std::holds_alternative<IndependentUniform>(v_)) {
        j["variant"] = "independent_uniform";
    } else if (std::holds_alternative<PiecewiseConstant>(v_)) {
        j["variant"] = "piecewise_constant";
        j["block_masses"] = pc().block_masses;
    } else {
        j["variant"] = "deterministic_monotone";
        auto arr = nlohmann::json::array();
        for (const Point& p : dm().breakpoints) arr.push_back({p.x, p.y});
        j["breakpoints"] = std::move(arr);
    }
    return j;
}

double JointModel::monotone_eval(double x) const {
    const auto& bps = dm().breakpoints;
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    std::size_t hi = 1;
    while (bps[hi].x < x) ++hi;
    const Point& a = bps[hi - 1];
    const Point& b = bps[hi];
    return a.y + (x - a.x) * (b.y - a.y) / (b.x - a.x);
}

double JointModel::monotone_inverse(double y) const {
    const auto& bps = dm().breakpoints;
    if (y <= 0.0) return 0.0;
    if (y >= 1.0) return 1.0;
    std::size_t hi = 1;
    while (bps[hi].y < y) ++hi;
    const Point& a = bps[hi - 1];
    const Point& b = bps[hi];
    return a.x + (y - a.y) * (b.x - a.x) / (b.y - a.y);
}

double JointModel::rect_mass(double x_lo, double x_hi, double y_lo, double y_hi) const {
    if (!(0.0 <= x_lo && x_lo <= x_hi && x_hi <= 1.0 &&
          0.0 <= y_lo && y_lo <= y_hi && y_hi <= 1.0)) {
        throw std::invalid_argument("rect_mass: bounds must satisfy 0 <= lo <= hi <= 1");
    }
    if (std::holds_alternative<IndependentUniform>(v_)) {
        return (x_hi - x_lo) * (y_hi - y_lo);
    }
    if (std::holds_alternative<DeterministicMonotone>(v_)) {
        // Mass lives on the curve y = f(x): the rectangle captures the x-run
        // where x is in range and f(x) lands in [y_lo, y_hi].
        const double a = std::max(x_lo, monotone_inverse(y_lo));
        const double b = std::min(x_hi, monotone_inverse(y_hi));
        return b > a ? b - a : 0.0;
    }
    const auto& masses = pc().block_masses;
    double total = 0.0;
    for (std::size_t i = 0; i < mx_; ++i) {
        const double bx_lo = static_cast<double>(i) / static_cast<double>(mx_);
        const double bx_hi = static_cast<double>(i + 1) / static_cast<double>(mx_);
        const double ox = std::min(x_hi, bx_hi) - std::max(x_lo, bx_lo);
        if (ox <= 0.0) continue;
        const double fx = ox / (bx_hi - bx_lo);
        for (std::size_t j = 0; j < my_; ++j) {
            const double by_lo = static_cast<double>(j) / static_cast<double>(my_);
            const double by_hi = static_cast<double>(j + 1) / static_cast<double>(my_);
            const double oy = std::min(y_hi, by_hi) - std::max(y_lo, by_lo);
            if (oy <= 0.0) continue;
            total += masses[i][j] * fx * (oy / (by_hi - by_lo));
        }
    }
    return total;
}

double JointModel::pc_marginal_quantile(Axis axis, double p, bool strict) const {
    const std::vector<double>& cum = (axis == Axis::X) ? x_cum_ : y_cum_;
    const std::size_t nblocks = cum.size() - 1;
    if (p <= 0.0) return 0.0;
    // First block with cum[i+1] >= p; it has positive mass since cum[i] < p.
    std::size_t i = 0;
    while (i + 1 < nblocks && cum[i + 1] < p) ++i;
    const double mass = cum[i + 1] - cum[i];
    const double b_lo = static_cast<double>(i) / static_cast<double>(nblocks);
    const double b_hi = static_cast<double>(i + 1) / static_cast<double>(nblocks);
    double q;
    if (p >= cum[i + 1]) {
        q = b_hi;
    } else {
        q = b_lo + (p - cum[i]) / mass * (b_hi - b_lo);
    }
    if (strict && p == cum[i + 1] && i + 1 < nblocks && cum[i + 2] == cum[i + 1]) {
        // CDF is flat at exactly level p: any coordinate across the zero-mass
        // stretch satisfies CDF >= p, so the quantile is not unique.
        throw std::runtime_error(std::string("marginal_quantile: non-unique quantile on axis ") +
                                 axis_name(axis) + " (flat CDF at the requested level)");
    }
    return q;
}

double JointModel::marginal_quantile(Axis axis, double p) const {
    check_probability(p);
    if (std::holds_alternative<IndependentUniform>(v_)) return p;
    if (std::holds_alternative<DeterministicMonotone>(v_)) {
        return axis == Axis::X ? p : monotone_eval(p);
    }
    return pc_marginal_quantile(axis, p, false);
}

double JointModel::marginal_quantile_strict(Axis axis, double p) const {
    check_probability(p);
    if (std::holds_alternative<IndependentUniform>(v_)) return p;
    if (std::holds_alternative<DeterministicMonotone>(v_)) {
        return axis == Axis::X ? p : monotone_eval(p);
    }
    return pc_marginal_quantile(axis, p, true);
}

double JointModel::marginal_cdf(Axis axis, double c) const {
    if (c <= 0.0) return 0.0;
    if (c >= 1.0) return 1.0;
    if (std::holds_alternative<IndependentUniform>(v_)) return c;
    if (std::holds_alternative<DeterministicMonotone>(v_)) {
        return axis == Axis::X ? c : monotone_inverse(c);
    }
    const std::vector<double>& cum = (axis == Axis::X) ? x_cum_ : y_cum_;
    const std::size_t nblocks = cum.size() - 1;
    const double scaled = c * static_cast<double>(nblocks);
    std::size_t i = static_cast<std::size_t>(scaled);
    if (i >= nblocks) i = nblocks - 1;
    const double b_lo = static_cast<double>(i) / static_cast<double>(nblocks);
    const double b_hi = static_cast<double>(i + 1) / static_cast<double>(nblocks);
    return cum[i] + (cum[i + 1] - cum[i]) * (c - b_lo) / (b_hi - b_lo);
}

Dataset JointModel::sample(std::size_t n, std::uint64_t seed) const {
    if (n == 0) {
        throw std::invalid_argument("sample: n must be >= 1");
    }
    Dataset d;
    d.seed = seed;
    d.points.reserve(n);
    SplitMix64 rng(seed);
    if (std::holds_alternative<IndependentUniform>(v_)) {
        for (std::size_t i = 0; i < n; ++i) {
            const double x = rng.next_double();
            const double y = rng.next_double();
            d.points.push_back(Point{x, y});
        }
        return d;
    }
    if (std::holds_alternative<DeterministicMonotone>(v_)) {
        for (std::size_t i = 0; i < n; ++i) {
            const double x = rng.next_double();
            d.points.push_back(Point{x, monotone_eval(x)});
        }
        return d;
    }
    const std::size_t nblocks = mx_ * my_;
    for (std::size_t i = 0; i < n; ++i) {
        const double u = rng.next_double();
        const double ux = rng.next_double();
        const double uy = rng.next_double();
        // First block with block_cum_[b+1] > u (skips zero-mass blocks).
        std::size_t b = 0;
        while (b + 1 < nblocks && block_cum_[b + 1] <= u) ++b;
        const std::size_t ix = b / my_;
        const std::size_t iy = b % my_;
        const double bx_lo = static_cast<double>(ix) / static_cast<double>(mx_);
        const double bx_hi = static_cast<double>(ix + 1) / static_cast<double>(mx_);
        const double by_lo = static_cast<double>(iy) / static_cast<double>(my_);
        const double by_hi = static_cast<double>(iy + 1) / static_cast<double>(my_);
        d.points.push_back(Point{bx_lo + ux * (bx_hi - bx_lo), by_lo + uy * (by_hi - by_lo)});
    }
    return d;
}

}  // namespace miclab
