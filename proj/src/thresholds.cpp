// SPDX-License-Identifier: Apache-2.0
//
// osdma-tf: Monte Carlo simulator and analysis toolkit for an SDMA broadcast
// downlink with quantized, threshold-gated CSI feedback
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "osdma/thresholds.hpp"

#include <cmath>
#include <stdexcept>

namespace osdma {

double chi2_tail(double gamma, unsigned l) {
    if (l == 0) {
        throw std::invalid_argument("chi2_tail: l must be a positive integer");
    }
    if (!(gamma >= 0.0)) {
        throw std::domain_error("chi2_tail: gamma must be >= 0");
    }
    double sum = 1.0;
    double term = 1.0;
    for (unsigned i = 1; i < l; ++i) {
        term *= gamma / static_cast<double>(i);
        sum += term;
    }
    return std::exp(-gamma) * sum;
}

Thresholds design_thresholds(unsigned u, arma::uword n_t, double lambda) {
    if (u < 3) {
        throw std::invalid_argument("design_thresholds: population too small (u >= 3 required)");
    }
    if (n_t < 2) {
        throw std::invalid_argument(
            "design_thresholds: epsilon exponent undefined for n_t < 2");
    }
    if (!(lambda > 0.0)) {
        throw std::invalid_argument("design_thresholds: lambda > 0 required");
    }

    Thresholds th;
    th.u = u;
    th.n_t = n_t;
    th.lambda = lambda;

    const double log_u = std::log(static_cast<double>(u));
    const double log_log_u = std::log(log_u);

    const double gamma_raw = log_u - lambda * log_log_u;
    if (gamma_raw <= 0.0) {
        th.gamma = 0.0;
        th.gamma_clamped = true;
        th.phi = 0.0; // limit convention; no power filtering in effect
    } else {
        th.gamma = gamma_raw;
        const double p_gamma = chi2_tail(th.gamma, static_cast<unsigned>(n_t));
        th.phi = -std::log(p_gamma / static_cast<double>(n_t)) / th.gamma;
    }

    const double exponent =
        (1.0 - th.phi) * log_u + th.phi * lambda * log_log_u;
    const double eps_raw = std::exp(-exponent / static_cast<double>(n_t - 1));
    if (eps_raw >= 1.0) {
        th.epsilon = 1.0;
        th.epsilon_clamped = true;
    } else {
        th.epsilon = eps_raw;
    }
    return th;
}

FeedbackLoad feedback_load(const Thresholds &th, arma::uword m, double b_bits) {
    if (m == 0) {
        throw std::invalid_argument("feedback_load: m must be >= 1");
    }
    const double n_total = static_cast<double>(m * th.n_t);
    FeedbackLoad load;
    load.p_gamma = chi2_tail(th.gamma, static_cast<unsigned>(th.n_t));
    load.p_epsilon_bound =
        n_total * std::pow(th.epsilon, static_cast<double>(th.n_t - 1));
    load.p_v_bound = load.p_gamma * load.p_epsilon_bound;
    load.expected_k_bound = static_cast<double>(th.u) * load.p_v_bound;
    load.rate_bound_bits = b_bits * n_total * static_cast<double>(th.n_t);
    load.degenerate = th.gamma_clamped || th.epsilon_clamped;
    return load;
}

AlzerBounds alzer_bounds(double gamma, arma::uword n_t) {
    if (!(gamma >= 0.0)) {
        throw std::domain_error("alzer_bounds: gamma must be >= 0");
    }
    if (n_t == 0) {
        throw std::invalid_argument("alzer_bounds: n_t must be >= 1");
    }
    double fact = 1.0;
    for (arma::uword i = 2; i <= n_t; ++i) {
        fact *= static_cast<double>(i);
    }
    const double beta = std::pow(fact, -1.0 / static_cast<double>(n_t));
    const double nt = static_cast<double>(n_t);
    AlzerBounds b;
    b.lower = std::pow(1.0 - std::exp(-beta * gamma), nt);
    b.upper = std::pow(1.0 - std::exp(-gamma), nt);
    return b;
}

} // namespace osdma
