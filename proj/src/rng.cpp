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

#include "osdma/rng.hpp"

namespace osdma {

namespace {

constexpr std::uint64_t kPhiloxMul = 0xD2B74407B1CE6E93ull;
constexpr std::uint64_t kPhiloxWeyl = 0x9E3779B97F4A7C15ull;

} // namespace

void Substream::next_block() {
    std::uint64_t x0 = ctr_lo_;
    std::uint64_t x1 = ctr_hi_;
    std::uint64_t k = key_;
    for (int round = 0; round < 10; ++round) {
        const unsigned __int128 prod =
            static_cast<unsigned __int128>(kPhiloxMul) * x0;
        const std::uint64_t hi = static_cast<std::uint64_t>(prod >> 64);
        const std::uint64_t lo = static_cast<std::uint64_t>(prod);
        x0 = hi ^ k ^ x1;
        x1 = lo;
        k += kPhiloxWeyl;
    }
    words_[0] = x0;
    words_[1] = x1;
    ++ctr_lo_; // 2^64 blocks per stream; the hi word stays the stream id
}

} // namespace osdma
