#ifndef DAGCENT_POWER_MEAN_HPP_
#define DAGCENT_POWER_MEAN_HPP_

#include <cmath>
#include <limits>
#include <span>

#include "dagcent/distances.hpp"
#include "dagcent/errors.hpp"

namespace dagcent {

/// Neumaier-compensated running sum.
class CompensatedSum {
public:
    void add(double x) noexcept {
        double t = sum_ + x;
        if (std::fabs(sum_) >= std::fabs(x))
            carry_ += (sum_ - t) + x;
        else
            carry_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const noexcept { return sum_ + carry_; }

private:
    double sum_ = 0.0;
    double carry_ = 0.0;
};

/// Power mean ((1/k) sum v^h)^(1/h) of nonnegative extended reals, h != 0.
///
/// Limits are taken where a term degenerates:
///   h > 0: any +inf term makes the mean +inf.
///   h < 0: +inf terms add 0 to the sum; any 0 term makes the mean 0;
///          all terms +inf gives +inf.
/// Terms are summed in the order given.
inline double power_mean(std::span<const double> values, double h) {
    if (h == 0.0) throw ZeroExponentError();
    if (values.empty()) throw EmptyInputError();
    constexpr double inf = std::numeric_limits<double>::infinity();
    CompensatedSum sum;
    if (h > 0) {
        for (double v : values) {
            if (std::isinf(v)) return inf;
            sum.add(std::pow(v, h));
        }
    } else {
        for (double v : values) {
            if (v == 0.0) return 0.0;
            if (!std::isinf(v)) sum.add(std::pow(v, h));
        }
        if (sum.value() == 0.0) return inf;
    }
    if (h == 1.0) return sum.value() / static_cast<double>(values.size());
    if (h == -1.0) return static_cast<double>(values.size()) / sum.value();
    return std::pow(sum.value() / static_cast<double>(values.size()), 1.0 / h);
}

/// Hölder mean of a distance multiset (self-distances excluded by the caller).
inline double holder_mean(std::span<const ExtendedDistance> values, double h) {
    if (h == 0.0) throw ZeroExponentError();
    if (values.empty()) throw EmptyInputError();
    std::vector<double> reals;
    reals.reserve(values.size());
    for (ExtendedDistance d : values) reals.push_back(d.as_double());
    return power_mean(reals, h);
}

}  // namespace dagcent

#endif  // DAGCENT_POWER_MEAN_HPP_
