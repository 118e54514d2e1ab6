#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace gsync {

// The two-hop product distribution: a pair of uniform-kernel observations
// composed along a path of length two lands on the correct difference with
// probability f(p) and on each particular wrong element with probability
// h(p). f + (|G|-1) h = 1 identically.
struct TwoHopDistribution {
    double p_correct = 0.0;    // f(p)
    double p_each_wrong = 0.0; // h(p)
    std::uint32_t group_order = 0;
    double flip_prob = 0.0;
};

namespace detail {
inline void require_prob(double p, const char* where) {
    if (!(p >= 0.0 && p <= 1.0))
        throw std::domain_error(std::string(where) + ": flip probability must be in [0,1]");
}
inline void require_order(std::uint32_t order, const char* where) {
    if (order < 2)
        throw std::domain_error(std::string(where) + ": group order must be >= 2");
}
} // namespace detail

// f(p) = 1 - 2p + p^2 |G| / (|G|-1)
inline double two_hop_correct_prob(double p, std::uint32_t order) {
    detail::require_prob(p, "two_hop_correct_prob");
    detail::require_order(order, "two_hop_correct_prob");
    return 1.0 - 2.0 * p + p * p * static_cast<double>(order) / (order - 1);
}

// h(p) = 2(p - p^2)/(|G|-1) + p^2 (|G|-2)/(|G|-1)^2
inline double two_hop_wrong_prob(double p, std::uint32_t order) {
    detail::require_prob(p, "two_hop_wrong_prob");
    detail::require_order(order, "two_hop_wrong_prob");
    const double om1 = static_cast<double>(order) - 1.0;
    return 2.0 * (p - p * p) / om1 + p * p * (order - 2.0) / (om1 * om1);
}

inline TwoHopDistribution two_hop_distribution(double p, std::uint32_t order) {
    return {two_hop_correct_prob(p, order), two_hop_wrong_prob(p, order), order, p};
}

// p_c = 1 - 1/|G|, where f and h both equal 1/|G|.
inline double critical_flip_prob(std::uint32_t order) {
    detail::require_order(order, "critical_flip_prob");
    return 1.0 - 1.0 / static_cast<double>(order);
}

// Union-bound + Hoeffding bound on the probability that the triangle
// estimator errs on any edge of the complete digraph on n vertices:
//   2 n (n-1) |G| exp(-2 lambda (n-2)),  lambda = min(eps^2, eps_hat^2)
// with eps = f(p) - 1/|G| and eps_hat = 1/|G| - h(p). Degenerate at p = p_c,
// where both margins vanish. Evaluated in log space; underflow returns 0.
inline double recovery_failure_bound(std::uint32_t n, double p, std::uint32_t order) {
    if (n < 3)
        throw std::domain_error("recovery_failure_bound: need n >= 3");
    detail::require_prob(p, "recovery_failure_bound");
    detail::require_order(order, "recovery_failure_bound");
    const double inv_order = 1.0 / static_cast<double>(order);
    const double eps = two_hop_correct_prob(p, order) - inv_order;
    const double eps_hat = inv_order - two_hop_wrong_prob(p, order);
    if (!(eps > 0.0) || !(eps_hat > 0.0))
        throw std::domain_error("recovery_failure_bound: degenerate at p = p_c (zero margin)");
    const double lambda = std::min(eps * eps, eps_hat * eps_hat);
    const double log_bound = std::log(2.0 * n * (n - 1.0) * order) - 2.0 * lambda * (n - 2.0);
    return std::exp(log_bound);
}

// (1 - (p/K)^d)^a, the quantity driven to zero when p shrinks more slowly
// than a^(-1/d). Requires p in (0, 1/2) and K > 1/2 so the base lies in (0,1).
inline double decay_quantity(double p, double a, double d, double K) {
    if (!(p > 0.0 && p < 0.5))
        throw std::domain_error("decay_quantity: p must be in (0, 1/2)");
    if (!(K > 0.5))
        throw std::domain_error("decay_quantity: K must exceed 1/2");
    if (!(a > 0.0) || !(d > 0.0))
        throw std::domain_error("decay_quantity: a and d must be positive");
    return std::exp(a * std::log1p(-std::pow(p / K, d)));
}

// Lower bound on the probability that some vertex of an independent set of
// the given size has every incident observation offset by a fixed g != e:
//   1 - (1 - (p/(|G|-1))^d)^|D|
// valid when all degrees are at most d.
inline double offset_exists_lower_bound(double p, std::uint32_t d, std::uint32_t order,
                                        std::uint64_t set_size) {
    if (!(p > 0.0 && p < 0.5))
        throw std::domain_error("offset_exists_lower_bound: p must be in (0, 1/2)");
    detail::require_order(order, "offset_exists_lower_bound");
    if (d < 1)
        throw std::domain_error("offset_exists_lower_bound: degree bound must be >= 1");
    if (set_size < 1)
        throw std::domain_error("offset_exists_lower_bound: set size must be >= 1");
    const double per_vertex = std::pow(p / (static_cast<double>(order) - 1.0),
                                       static_cast<double>(d));
    return -std::expm1(static_cast<double>(set_size) * std::log1p(-per_vertex));
}

} // namespace gsync
