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

#include "osdma/channel.hpp"

#include <stdexcept>

namespace osdma {

namespace {

void fill_gaussian_vector(Substream &stream, arma::cx_vec &out) {
    std::complex<double> *p = out.memptr();
    const arma::uword n = out.n_elem;
    for (arma::uword i = 0; i < n; ++i) {
        const auto [re, im] = stream.next_gaussian_pair();
        // 1/sqrt(2) on each part gives unit-variance complex coefficients
        p[i] = std::complex<double>(re * 0.70710678118654752440,
                                    im * 0.70710678118654752440);
    }
}

bool is_zero_vector(const arma::cx_vec &v) {
    for (arma::uword i = 0; i < v.n_elem; ++i) {
        if (v[i] != std::complex<double>(0.0, 0.0)) {
            return false;
        }
    }
    return true;
}

} // namespace

void sample_channel_into(Substream &stream, arma::cx_vec &out) {
    if (out.n_elem == 0) {
        throw std::invalid_argument("sample_channel: channel dimension must be >= 1");
    }
    fill_gaussian_vector(stream, out);
    if (is_zero_vector(out)) {
        // Measure-zero event; resample once instead of silently biasing.
        fill_gaussian_vector(stream, out);
        if (is_zero_vector(out)) {
            throw std::runtime_error("sample_channel: degenerate all-zero channel twice in a row");
        }
    }
}

ChannelVector sample_channel(Substream &stream, arma::uword n_t, int user_id) {
    if (n_t == 0) {
        throw std::invalid_argument("sample_channel: channel dimension must be >= 1");
    }
    ChannelVector h;
    h.entries.set_size(n_t);
    h.user_id = user_id;
    sample_channel_into(stream, h.entries);
    return h;
}

ChannelDecomposition decompose(const ChannelVector &h) {
    const double g = arma::norm(h.entries, 2);
    if (g == 0.0 || !std::isfinite(g)) {
        throw std::domain_error("decompose: zero-norm (degenerate) channel");
    }
    ChannelDecomposition d;
    d.gain = g;
    d.shape = h.entries / g;
    d.power = g * g;
    return d;
}

} // namespace osdma
