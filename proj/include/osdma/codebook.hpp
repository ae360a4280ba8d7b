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

#ifndef OSDMA_CODEBOOK_HPP
#define OSDMA_CODEBOOK_HPP

#include <string>
#include <utility>

#include <armadillo>

#include "osdma/rng.hpp"

namespace osdma {

// Structured quantization codebook: m_subcodebooks independent Haar-random
// orthonormal bases of C^{n_t}, flattened column-wise. Column layout is
// flat_index = (sub - 1) * n_t + (beam - 1) with sub and beam 1-based, so a
// feedback payload of log2(n_total) bits addresses a codeword unambiguously.
// Immutable after construction; safe for concurrent reads.
struct Codebook {
    arma::uword n_t = 0;
    arma::uword m_subcodebooks = 0;
    arma::cx_mat vectors; // n_t rows, n_total() columns

    arma::uword n_total() const { return m_subcodebooks * n_t; }
};

// Minimum chordal distance 1 - |f_a^H f_b|^2 over all distinct codeword
// pairs, with the achieving pair of flat indices.
struct CodebookStats {
    double min_distance = 0.0;
    std::pair<arma::uword, arma::uword> argmin_pair{0, 0};
};

// Each sub-codebook is the column set of a Haar-distributed unitary, drawn
// by QR of an i.i.d. complex Gaussian matrix with the R-diagonal phase fix
// (plain QR alone is not Haar). Regenerates once, then errors, if the draw
// is degenerate (min distance below 1e-12).
Codebook generate_codebook(arma::uword n_t, arma::uword m, Substream &stream);

CodebookStats min_distance(const Codebook &cb);

// Throws std::runtime_error naming the offending codeword or pair when the
// unit-norm or intra-sub-codebook orthogonality invariants are violated.
void validate_codebook(const Codebook &cb);

// Text format, bit-faithful for 64-bit floats:
//   line 1:  "n_t m"
//   then one codeword per line, flat-index order, "re im re im ..." at 17
//   significant digits.
void save_codebook(const Codebook &cb, const std::string &path);

// Parse errors name the offending line; the loaded codebook is re-validated.
Codebook load_codebook(const std::string &path);

} // namespace osdma

#endif
