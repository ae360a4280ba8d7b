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

#ifndef OSDMA_CHANNEL_HPP
#define OSDMA_CHANNEL_HPP

#include <armadillo>

#include "osdma/rng.hpp"

namespace osdma {

// One user's downlink channel: n_t i.i.d. circularly-symmetric complex
// Gaussian coefficients of unit variance (real/imag each variance 1/2).
struct ChannelVector {
    arma::cx_vec entries;
    int user_id = 0;
};

// Gain/shape split h = g*s with g = ||h|| and ||s|| = 1. power = g^2 follows
// a chi-squared law with n_t complex degrees of freedom.
struct ChannelDecomposition {
    double gain = 0.0;
    arma::cx_vec shape;
    double power = 0.0;
};

// Fills a preallocated vector; the no-copy path for hot simulation loops.
void sample_channel_into(Substream &stream, arma::cx_vec &out);

ChannelVector sample_channel(Substream &stream, arma::uword n_t, int user_id = 0);

ChannelDecomposition decompose(const ChannelVector &h);

} // namespace osdma

#endif
