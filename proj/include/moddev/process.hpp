#pragma once

#include <cstddef>
#include <vector>

#include "moddev/hypergraph.hpp"
#include "moddev/random.hpp"
#include "moddev/rational.hpp"

namespace moddev {

/// The martingale decomposition of D^H(B_m) along one ordered prefix.
///
/// Per-level arrays are indexed [l - 1][i - 1] for l in 1..k and step i in 1..m:
///   a         A_l(B_i), the l-sets through b_i that became covered at step i
///   cond_mean E[A_l(B_i) | B_{i-1}]
///   x         X_l(B_i) = a - cond_mean
///   y         Y_l(B_i) = X_l - C(k-1, l-1) (i-1)_{l-1} / (N-1)_{l-1} X_1
/// kappa / kappa_prime are filled when m <= N - k, lambda_partial and
/// qvar_partial when m < N.
template <class Scalar>
struct Decomposition {
  std::size_t n = 0;
  std::size_t m = 0;
  int k = 0;
  std::vector<Vertex> order;
  std::vector<std::vector<Scalar>> a, cond_mean, x, y;
  std::vector<Scalar> kappa, kappa_prime;
  std::vector<Scalar> lambda_partial, qvar_partial;
};

enum class CondMeanMode {
  kIncremental,  // per-vertex tallies updated as vertices join B
  kNaive,        // rescan every vertex outside B at every step
};

void validate_prefix(const WeightedHypergraph& h, const OrderedPrefix& prefix);

template <class Scalar>
Decomposition<Scalar> decompose(const WeightedHypergraph& h, const OrderedPrefix& prefix,
                                CondMeanMode mode = CondMeanMode::kIncremental);

/// A_l(B_i) for all l, i (the `a` block of decompose).
std::vector<std::vector<double>> increments(const WeightedHypergraph& h, const OrderedPrefix& prefix);

std::vector<std::vector<double>> conditional_means(const WeightedHypergraph& h,
                                                   const OrderedPrefix& prefix,
                                                   CondMeanMode mode = CondMeanMode::kIncremental);

/// (N-m)_l (m-i)_{k-l} / (N-i)_k, the weight of X_l(B_i) in D^H(B_m).
template <class Scalar>
Scalar martingale_coefficient(std::size_t n, int k, std::size_t m, std::size_t i, int l);

/// Sum over i <= m and l <= k of the coefficient times X_l(B_i). Equals
/// deviation_m(H, B_m) identically; requires 1 <= m <= N - k.
template <class Scalar>
Scalar martingale_reconstruction(const WeightedHypergraph& h, const OrderedPrefix& prefix);

template <class Scalar>
Scalar martingale_reconstruction(const Decomposition<Scalar>& d);

/// kappa(i, m): the total weight X_1(B_i) receives once every X_l is replaced
/// by its degree-predicted multiple.
template <class Scalar>
Scalar kappa(std::size_t i, std::size_t m, std::size_t n, int k);

/// kappa'(i, m) = t^{k-1} (1 - t) / (1 - s), t = m/N, s = i/N.
template <class Scalar>
Scalar kappa_prime(std::size_t i, std::size_t m, std::size_t n, int k);

/// kappa' written as sum_l (1-t)^l (t-s)^{k-l} (1-s)^{-k} C(k-1, l-1) s^{l-1}.
template <class Scalar>
Scalar kappa_prime_expansion(std::size_t i, std::size_t m, std::size_t n, int k);

/// Partial sums Lambda_1..Lambda_m of the degree process; m < N.
template <class Scalar>
std::vector<Scalar> lambda_process(const WeightedHypergraph& h, const OrderedPrefix& prefix);

/// V(1..m): running sums of coefficient^2 times the variance of the degrees
/// of the vertices not yet chosen; m < N.
template <class Scalar>
std::vector<Scalar> quadratic_variation(const WeightedHypergraph& h, const OrderedPrefix& prefix);

/// V(j) recomputed from scratch by rescanning all outside vertices per step.
double quadratic_variation_direct(const WeightedHypergraph& h, const OrderedPrefix& prefix,
                                  std::size_t j);

struct YResidualReport {
  std::vector<std::vector<double>> y;  // [l - 1][i - 1]
  std::vector<double> max_realized;    // max_i |Y_l(B_i)|
  std::vector<double> max_sup_norm;    // max_i of max over x outside B_{i-1} of |Y_l(B_{i-1} + x)|
};

YResidualReport y_residuals(const WeightedHypergraph& h, const OrderedPrefix& prefix,
                            bool with_sup_norm = true);

}  // namespace moddev
