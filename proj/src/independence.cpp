/*
   Copyright 2026 the linfield authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "linfield/independence.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "linfield/errors.hpp"

namespace linfield {

JacobianMatrix::JacobianMatrix(int rows, int cols, std::vector<RatFunc> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows < 1 || cols < 1 ||
        entries_.size() != static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {
        throw std::invalid_argument("JacobianMatrix: shape does not match entry count");
    }
    const int n = entries_.front().nvars();
    for (const RatFunc& e : entries_) {
        if (e.nvars() != n) {
            throw std::invalid_argument("JacobianMatrix: mixed variable counts");
        }
    }
}

VectorA JacobianMatrix::row(int r) const {
    std::vector<RatFunc> coords;
    coords.reserve(static_cast<std::size_t>(cols_));
    for (int c = 0; c < cols_; ++c) {
        coords.push_back(at(r, c));
    }
    return VectorA(std::move(coords));
}

JacobianMatrix jacobian(const std::vector<RatFunc>& phi) {
    if (phi.empty()) {
        throw std::invalid_argument("jacobian: empty set");
    }
    const int n = phi.front().nvars();
    std::vector<RatFunc> entries;
    entries.reserve(phi.size() * static_cast<std::size_t>(n));
    for (const RatFunc& f : phi) {
        if (f.nvars() != n) {
            throw std::invalid_argument("jacobian: mixed variable counts");
        }
        for (int v = 0; v < n; ++v) {
            entries.push_back(partial(v, f));
        }
    }
    return JacobianMatrix(static_cast<int>(phi.size()), n, std::move(entries));
}

namespace detail {

std::vector<Polynomial> clear_denominators(const std::vector<RatFunc>& row) {
    if (row.empty()) {
        throw std::invalid_argument("clear_denominators: empty row");
    }
    const int n = row.front().nvars();
    Polynomial common = Polynomial::one(n);
    for (const RatFunc& e : row) {
        if (!e.is_zero()) {
            common = lcm(common, e.den());
        }
    }
    std::vector<Polynomial> out;
    out.reserve(row.size());
    for (const RatFunc& e : row) {
        if (e.is_zero()) {
            out.emplace_back(n);
        } else {
            out.push_back(e.num() * divide_exact(common, e.den()));
        }
    }
    return out;
}

PolyEchelon bareiss_echelon(std::vector<std::vector<Polynomial>> m) {
    PolyEchelon result;
    if (m.empty()) {
        return result;
    }
    const int rows = static_cast<int>(m.size());
    const int cols = static_cast<int>(m.front().size());
    const int n = m.front().front().nvars();
    std::vector<char> used_col(static_cast<std::size_t>(cols), 0);
    Polynomial prev_pivot = Polynomial::one(n);

    for (int step = 0; step < rows; ++step) {
        // Lowest-degree nonzero pivot among the remaining rows, ties broken
        // by column then row index; keeps intermediate expression swell down.
        int prow = -1;
        int pcol = -1;
        int pdeg = 0;
        for (int c = 0; c < cols; ++c) {
            if (used_col[static_cast<std::size_t>(c)]) {
                continue;
            }
            for (int r = step; r < rows; ++r) {
                const Polynomial& cand = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
                if (cand.is_zero()) {
                    continue;
                }
                if (prow < 0 || cand.degree() < pdeg) {
                    prow = r;
                    pcol = c;
                    pdeg = cand.degree();
                }
            }
        }
        if (prow < 0) {
            break;  // remaining submatrix is zero
        }
        std::swap(m[static_cast<std::size_t>(step)], m[static_cast<std::size_t>(prow)]);
        used_col[static_cast<std::size_t>(pcol)] = 1;
        result.pivot_cols.push_back(pcol);

        const Polynomial pivot = m[static_cast<std::size_t>(step)][static_cast<std::size_t>(pcol)];
        for (int r = step + 1; r < rows; ++r) {
            auto& row_r = m[static_cast<std::size_t>(r)];
            const Polynomial factor = row_r[static_cast<std::size_t>(pcol)];
            for (int c = 0; c < cols; ++c) {
                if (c == pcol) {
                    continue;
                }
                Polynomial next =
                    row_r[static_cast<std::size_t>(c)] * pivot -
                    factor * m[static_cast<std::size_t>(step)][static_cast<std::size_t>(c)];
                if (!prev_pivot.is_one()) {
                    next = divide_exact(next, prev_pivot);
                }
                row_r[static_cast<std::size_t>(c)] = std::move(next);
            }
            row_r[static_cast<std::size_t>(pcol)] = Polynomial(n);
        }
        prev_pivot = pivot;
    }
    result.rows = std::move(m);
    return result;
}

namespace {

int scalar_rank(std::vector<std::vector<Scalar>> m) {
    if (m.empty()) {
        return 0;
    }
    const int rows = static_cast<int>(m.size());
    const int cols = static_cast<int>(m.front().size());
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r) {
            if (!m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)].is_zero()) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) {
            continue;
        }
        std::swap(m[static_cast<std::size_t>(rank)], m[static_cast<std::size_t>(pivot)]);
        const Scalar inv = m[static_cast<std::size_t>(rank)][static_cast<std::size_t>(c)].inverse();
        for (int r = rank + 1; r < rows; ++r) {
            const Scalar f = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] * inv;
            if (f.is_zero()) {
                continue;
            }
            for (int cc = c; cc < cols; ++cc) {
                m[static_cast<std::size_t>(r)][static_cast<std::size_t>(cc)] -=
                    f * m[static_cast<std::size_t>(rank)][static_cast<std::size_t>(cc)];
            }
        }
        ++rank;
    }
    return rank;
}

}  // namespace

}  // namespace detail

int rank_at_point(const JacobianMatrix& m, const std::vector<Scalar>& point) {
    std::vector<std::vector<Scalar>> numeric(static_cast<std::size_t>(m.rows()));
    for (int r = 0; r < m.rows(); ++r) {
        auto& row = numeric[static_cast<std::size_t>(r)];
        row.reserve(static_cast<std::size_t>(m.cols()));
        for (int c = 0; c < m.cols(); ++c) {
            row.push_back(m.at(r, c).eval(point));
        }
    }
    return detail::scalar_rank(std::move(numeric));
}

int rank(const JacobianMatrix& m) {
    const int full = std::min(m.rows(), m.cols());

    // Pre-filter: evaluation can only lose rank, so a full-rank
    // specialization certifies full symbolic rank.
    std::mt19937_64 eng(0x72616e6bULL);
    for (int attempt = 0; attempt < 3; ++attempt) {
        std::vector<Scalar> point;
        point.reserve(static_cast<std::size_t>(m.nvars()));
        for (int v = 0; v < m.nvars(); ++v) {
            point.push_back(Scalar(static_cast<long>(eng() % 2000001) - 1000000));
        }
        try {
            if (rank_at_point(m, point) == full) {
                return full;
            }
            break;
        } catch (const PoleError&) {
            continue;
        }
    }

    std::vector<std::vector<Polynomial>> cleared;
    cleared.reserve(static_cast<std::size_t>(m.rows()));
    for (int r = 0; r < m.rows(); ++r) {
        cleared.push_back(detail::clear_denominators(m.row(r).coords()));
    }
    return detail::bareiss_echelon(std::move(cleared)).rank();
}

bool is_functionally_independent(const std::vector<RatFunc>& phi) {
    if (phi.empty()) {
        return true;
    }
    const int n = phi.front().nvars();
    if (static_cast<int>(phi.size()) > n) {
        return false;  // more elements than variables: always dependent
    }
    return rank(jacobian(phi)) == static_cast<int>(phi.size());
}

}  // namespace linfield
