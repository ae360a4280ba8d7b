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

#include "osdma/codebook.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace osdma {

namespace {

// One Haar-distributed orthonormal basis of C^{n_t}.
arma::cx_mat haar_basis(arma::uword n_t, Substream &stream) {
    arma::cx_mat a(n_t, n_t);
    std::complex<double> *p = a.memptr();
    for (arma::uword i = 0; i < n_t * n_t; ++i) {
        const auto [re, im] = stream.next_gaussian_pair();
        p[i] = std::complex<double>(re * 0.70710678118654752440,
                                    im * 0.70710678118654752440);
    }
    arma::cx_mat q, r;
    if (!arma::qr(q, r, a)) {
        throw std::runtime_error("generate_codebook: QR factorization failed");
    }
    // Divide column j by the phase of R_jj; this makes the distribution Haar.
    for (arma::uword j = 0; j < n_t; ++j) {
        const std::complex<double> rjj = r(j, j);
        const double mag = std::abs(rjj);
        if (mag == 0.0) {
            throw std::runtime_error("generate_codebook: rank-deficient Gaussian draw");
        }
        q.col(j) *= std::conj(rjj / mag);
    }
    return q;
}

Codebook draw_codebook(arma::uword n_t, arma::uword m, Substream &stream) {
    Codebook cb;
    cb.n_t = n_t;
    cb.m_subcodebooks = m;
    cb.vectors.set_size(n_t, m * n_t);
    for (arma::uword sub = 0; sub < m; ++sub) {
        cb.vectors.cols(sub * n_t, sub * n_t + n_t - 1) = haar_basis(n_t, stream);
    }
    return cb;
}

} // namespace

Codebook generate_codebook(arma::uword n_t, arma::uword m, Substream &stream) {
    if (n_t == 0) {
        throw std::invalid_argument("generate_codebook: n_t must be >= 1");
    }
    if (m == 0) {
        throw std::invalid_argument("generate_codebook: m must be >= 1");
    }
    Codebook cb = draw_codebook(n_t, m, stream);
    if (cb.n_total() > 1 && min_distance(cb).min_distance < 1e-12) {
        // Duplicate codewords would break the disjoint-cone argument behind
        // the feedback-count saturation; redraw once, then give up.
        cb = draw_codebook(n_t, m, stream);
        if (min_distance(cb).min_distance < 1e-12) {
            throw std::runtime_error("generate_codebook: degenerate codebook twice in a row");
        }
    }
    return cb;
}

CodebookStats min_distance(const Codebook &cb) {
    const arma::uword n = cb.n_total();
    if (n < 2) {
        return {1.0, {0, 0}};
    }
    CodebookStats stats;
    stats.min_distance = 2.0; // above any attainable value
    for (arma::uword a = 0; a + 1 < n; ++a) {
        for (arma::uword b = a + 1; b < n; ++b) {
            const std::complex<double> ip =
                arma::cdot(cb.vectors.col(a), cb.vectors.col(b));
            const double d = 1.0 - std::norm(ip);
            if (d < stats.min_distance) {
                stats.min_distance = d;
                stats.argmin_pair = {a, b};
            }
        }
    }
    return stats;
}

void validate_codebook(const Codebook &cb) {
    if (cb.n_t == 0 || cb.m_subcodebooks == 0) {
        throw std::runtime_error("codebook validation failed: empty dimensions");
    }
    if (cb.vectors.n_rows != cb.n_t || cb.vectors.n_cols != cb.n_total()) {
        throw std::runtime_error("codebook validation failed: vector array shape mismatch");
    }
    for (arma::uword j = 0; j < cb.n_total(); ++j) {
        const double nrm = arma::norm(cb.vectors.col(j), 2);
        if (std::abs(nrm - 1.0) > 1e-12) {
            std::ostringstream msg;
            msg << "codebook validation failed: codeword " << j
                << " has norm " << nrm << " (must be 1 within 1e-12)";
            throw std::runtime_error(msg.str());
        }
    }
    for (arma::uword sub = 0; sub < cb.m_subcodebooks; ++sub) {
        for (arma::uword a = 0; a < cb.n_t; ++a) {
            for (arma::uword b = a + 1; b < cb.n_t; ++b) {
                const arma::uword fa = sub * cb.n_t + a;
                const arma::uword fb = sub * cb.n_t + b;
                const double ip =
                    std::abs(arma::cdot(cb.vectors.col(fa), cb.vectors.col(fb)));
                if (ip >= 1e-10) {
                    std::ostringstream msg;
                    msg << "codebook validation failed: codewords " << fa << " and "
                        << fb << " in sub-codebook " << (sub + 1)
                        << " are not orthogonal (|f_a^H f_b| = " << ip << ")";
                    throw std::runtime_error(msg.str());
                }
            }
        }
    }
}

void save_codebook(const Codebook &cb, const std::string &path) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("save_codebook: cannot open '" + path + "' for writing");
    }
    out << cb.n_t << ' ' << cb.m_subcodebooks << '\n';
    char buf[32];
    for (arma::uword j = 0; j < cb.n_total(); ++j) {
        for (arma::uword i = 0; i < cb.n_t; ++i) {
            const std::complex<double> v = cb.vectors(i, j);
            std::snprintf(buf, sizeof(buf), "%.17g", v.real());
            out << (i == 0 ? "" : " ") << buf;
            std::snprintf(buf, sizeof(buf), "%.17g", v.imag());
            out << ' ' << buf;
        }
        out << '\n';
    }
    if (!out) {
        throw std::runtime_error("save_codebook: write to '" + path + "' failed");
    }
}

Codebook load_codebook(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("load_codebook: cannot open '" + path + "'");
    }
    std::string line;
    if (!std::getline(in, line)) {
        throw std::runtime_error("load_codebook: parse error at line 1: empty file");
    }
    arma::uword n_t = 0, m = 0;
    {
        std::istringstream hdr(line);
        std::string extra;
        if (!(hdr >> n_t >> m) || (hdr >> extra) || n_t == 0 || m == 0) {
            throw std::runtime_error(
                "load_codebook: parse error at line 1: expected header 'n_t m'");
        }
    }
    Codebook cb;
    cb.n_t = n_t;
    cb.m_subcodebooks = m;
    cb.vectors.set_size(n_t, m * n_t);
    for (arma::uword j = 0; j < cb.n_total(); ++j) {
        const arma::uword lineno = j + 2;
        if (!std::getline(in, line)) {
            std::ostringstream msg;
            msg << "load_codebook: parse error at line " << lineno
                << ": expected " << cb.n_total() << " codeword lines, file ended early";
            throw std::runtime_error(msg.str());
        }
        std::istringstream row(line);
        for (arma::uword i = 0; i < n_t; ++i) {
            double re = 0.0, im = 0.0;
            if (!(row >> re >> im)) {
                std::ostringstream msg;
                msg << "load_codebook: parse error at line " << lineno << ": expected "
                    << 2 * n_t << " numeric columns";
                throw std::runtime_error(msg.str());
            }
            cb.vectors(i, j) = std::complex<double>(re, im);
        }
        std::string extra;
        if (row >> extra) {
            std::ostringstream msg;
            msg << "load_codebook: parse error at line " << lineno << ": expected "
                << 2 * n_t << " numeric columns, found extra data";
            throw std::runtime_error(msg.str());
        }
    }
    validate_codebook(cb);
    return cb;
}

} // namespace osdma
