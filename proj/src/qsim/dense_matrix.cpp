// Copyright 2026 The encclone Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "encclone/dense_matrix.h"

#include <algorithm>
#include <cmath>

#include "encclone/error.h"

namespace encclone {

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {
}

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows * cols) {
        throw InvalidArgument("DenseMatrix: entry count does not match shape");
    }
}

DenseMatrix DenseMatrix::identity(std::size_t dim) {
    DenseMatrix m(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

DenseMatrix DenseMatrix::operator*(const DenseMatrix &rhs) const {
    if (cols_ != rhs.rows_) {
        throw InvalidArgument("DenseMatrix: shape mismatch in product");
    }
    DenseMatrix out(rows_, rhs.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t k = 0; k < cols_; ++k) {
            cplx a = (*this)(r, k);
            if (a == cplx{}) {
                continue;
            }
            for (std::size_t c = 0; c < rhs.cols_; ++c) {
                out(r, c) += a * rhs(k, c);
            }
        }
    }
    return out;
}

DenseMatrix DenseMatrix::operator+(const DenseMatrix &rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
        throw InvalidArgument("DenseMatrix: shape mismatch in sum");
    }
    DenseMatrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) {
        out.data_[i] += rhs.data_[i];
    }
    return out;
}

DenseMatrix DenseMatrix::operator-(const DenseMatrix &rhs) const {
    return *this + rhs * cplx{-1.0, 0.0};
}

DenseMatrix DenseMatrix::operator*(cplx scale) const {
    DenseMatrix out = *this;
    for (auto &v : out.data_) {
        v *= scale;
    }
    return out;
}

DenseMatrix DenseMatrix::adjoint() const {
    DenseMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            out(c, r) = std::conj((*this)(r, c));
        }
    }
    return out;
}

DenseMatrix DenseMatrix::transpose() const {
    DenseMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            out(c, r) = (*this)(r, c);
        }
    }
    return out;
}

cplx DenseMatrix::trace() const {
    cplx t = 0;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) {
        t += (*this)(i, i);
    }
    return t;
}

DenseMatrix DenseMatrix::kron(const DenseMatrix &low) const {
    DenseMatrix out(rows_ * low.rows_, cols_ * low.cols_);
    for (std::size_t r1 = 0; r1 < rows_; ++r1) {
        for (std::size_t c1 = 0; c1 < cols_; ++c1) {
            cplx a = (*this)(r1, c1);
            if (a == cplx{}) {
                continue;
            }
            for (std::size_t r2 = 0; r2 < low.rows_; ++r2) {
                for (std::size_t c2 = 0; c2 < low.cols_; ++c2) {
                    out(r1 * low.rows_ + r2, c1 * low.cols_ + c2) = a * low(r2, c2);
                }
            }
        }
    }
    return out;
}

double DenseMatrix::max_abs_diff(const DenseMatrix &other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        throw InvalidArgument("DenseMatrix: shape mismatch in comparison");
    }
    double m = 0;
    for (std::size_t i = 0; i < data_.size(); ++i) {
        m = std::max(m, std::abs(data_[i] - other.data_[i]));
    }
    return m;
}

bool DenseMatrix::is_unitary(double tol) const {
    if (rows_ != cols_) {
        return false;
    }
    return (adjoint() * *this).max_abs_diff(identity(rows_)) <= tol;
}

double phase_insensitive_distance(const DenseMatrix &a, const DenseMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw InvalidArgument("phase_insensitive_distance: shape mismatch");
    }
    cplx overlap = 0;
    for (std::size_t i = 0; i < a.data().size(); ++i) {
        overlap += std::conj(a.data()[i]) * b.data()[i];
    }
    return std::abs(1.0 - std::abs(overlap) / static_cast<double>(a.rows()));
}

double max_deviation_up_to_phase(const DenseMatrix &a, const DenseMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw InvalidArgument("max_deviation_up_to_phase: shape mismatch");
    }
    std::size_t best = 0;
    for (std::size_t i = 0; i < a.data().size(); ++i) {
        if (std::abs(a.data()[i]) > std::abs(a.data()[best])) {
            best = i;
        }
    }
    if (std::abs(b.data()[best]) == 0.0) {
        return a.max_abs_diff(b);
    }
    cplx phase = b.data()[best] / a.data()[best];
    phase /= std::abs(phase);
    return (a * phase).max_abs_diff(b);
}

}  // namespace encclone
