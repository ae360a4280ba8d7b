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

#ifndef OSDMA_RNG_HPP
#define OSDMA_RNG_HPP

#include <cmath>
#include <cstdint>
#include <utility>

namespace osdma {

// Identifies one reproducible substream. The (master_seed, stream_id) pair
// maps injectively onto disjoint counter ranges of a counter-based
// generator, so trial t always sees the same sequence no matter how many
// workers the experiment runs on.
struct SeedSpec {
    std::uint64_t master_seed = 0;
    std::uint64_t stream_id = 0;
};

// Counter-based pseudo-random substream (Philox2x64-10, Salmon et al.).
// Each 128-bit counter block expands to two 64-bit words under a keyed
// bijection; distinct stream_ids select disjoint counter planes. Cheap to
// construct, copyable, and bit-stable across platforms.
class Substream {
  public:
    explicit Substream(const SeedSpec &seed) noexcept
        : key_(seed.master_seed), ctr_hi_(seed.stream_id) {}

    std::uint64_t next_u64() {
        if (word_pos_ == 2) {
            next_block();
            word_pos_ = 0;
        }
        return words_[word_pos_++];
    }

    // Uniform on (0,1]; never returns 0 so log() is safe downstream.
    double next_uniform() {
        return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
    }

    // Two independent standard normals via Box-Muller.
    std::pair<double, double> next_gaussian_pair() {
        const double u1 = next_uniform();
        const double u2 = next_uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 6.283185307179586476925286766559 * u2;
        return {r * std::cos(a), r * std::sin(a)};
    }

    double next_gaussian() { return next_gaussian_pair().first; }

  private:
    void next_block();

    std::uint64_t key_;
    std::uint64_t ctr_hi_;
    std::uint64_t ctr_lo_ = 0;
    std::uint64_t words_[2] = {0, 0};
    int word_pos_ = 2;
};

inline Substream make_substream(const SeedSpec &seed) { return Substream(seed); }

} // namespace osdma

#endif
