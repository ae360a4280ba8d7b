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

#ifndef OSDMA_THRESHOLDS_HPP
#define OSDMA_THRESHOLDS_HPP

#include <armadillo>

namespace osdma {

// Feedback eligibility thresholds. A user reports its quantized channel
// shape iff power >= gamma AND quantization error <= epsilon. The design
// ties the tail exponent phi to the channel-power tail through
//     P_gamma = n_t * exp(-phi * gamma),
// which is exactly what caps the expected feedback-user count at
// n_total * n_t independently of the population size u.
//
// Out-of-range designs are clamped into the meaningful range (gamma to 0
// when the formula goes negative, epsilon to 1 when it exceeds 1); the
// corresponding flag marks the design as degenerate on that side. A clamped
// gamma leaves phi undefined, so the limit convention phi = 0 is used.
struct Thresholds {
    double gamma = 0.0;   // channel power floor, >= 0
    double epsilon = 1.0; // quantization error ceiling, in (0,1]
    double lambda = 0.0;  // power-threshold design parameter, > 0
    double phi = 0.0;     // tail exponent
    unsigned u = 0;       // population size the design targets
    arma::uword n_t = 0;
    bool gamma_clamped = false;
    bool epsilon_clamped = false;

    // gamma = 0, epsilon = 1: every user feeds back (all-user baseline).
    static Thresholds trivial(unsigned u, arma::uword n_t) {
        Thresholds th;
        th.u = u;
        th.n_t = n_t;
        th.gamma_clamped = true;
        th.epsilon_clamped = true;
        return th;
    }
};

// Upper tail of the normalized chi-squared density x^{l-1} e^{-x} / (l-1)!,
// i.e. e^{-gamma} * sum_{i=0}^{l-1} gamma^i / i!.
double chi2_tail(double gamma, unsigned l);

// Closed-form threshold design:
//   gamma   = max(0, ln u - lambda * ln ln u)
//   phi     = -ln(P_gamma / n_t) / gamma           (0 when gamma clamped)
//   epsilon = min(1, [u^{1-phi} (ln u)^{phi*lambda}]^{-1/(n_t-1)})
// All logarithms are natural. Requires u >= 3 (so ln ln u > 0) and n_t >= 2
// (the epsilon exponent is undefined for n_t = 1).
Thresholds design_thresholds(unsigned u, arma::uword n_t, double lambda);

// Per-user feedback probability pieces and the resulting load bounds for a
// codebook of m sub-codebooks (n_total = m * n_t codewords):
//   p_epsilon_bound  = n_total * epsilon^{n_t-1}    (union bound)
//   p_v_bound        = p_gamma * p_epsilon_bound
//   expected_k_bound = u * p_v_bound                (<= n_total * n_t by design)
//   rate_bound_bits  = b_bits * n_total * n_t
// `degenerate` is set when a clamped design made the bound vacuous.
struct FeedbackLoad {
    double p_gamma = 1.0;
    double p_epsilon_bound = 0.0;
    double p_v_bound = 0.0;
    double expected_k_bound = 0.0;
    double rate_bound_bits = 0.0;
    bool degenerate = false;
};

FeedbackLoad feedback_load(const Thresholds &th, arma::uword m, double b_bits);

// Two-sided pinch on the chi-squared CDF at gamma:
//   (1 - e^{-beta*gamma})^{n_t} < CDF < (1 - e^{-gamma})^{n_t},
// with beta = (n_t!)^{-1/n_t}. Strict for n_t >= 2 and gamma > 0.
struct AlzerBounds {
    double lower = 0.0;
    double upper = 0.0;
};

AlzerBounds alzer_bounds(double gamma, arma::uword n_t);

} // namespace osdma

#endif
