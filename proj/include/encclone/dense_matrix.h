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

#ifndef ENCCLONE_DENSE_MATRIX_H
#define ENCCLONE_DENSE_MATRIX_H

#include <cstddef>
#include <vector>

#include "encclone/types.h"

namespace encclone {

/// Small dense complex matrix, row-major. Used for gate matrices, Kraus
/// operators, and the reference operator constructions.
class DenseMatrix {
   public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols);
    DenseMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries);

    static DenseMatrix identity(std::size_t dim);

    std::size_t rows() const {
        return rows_;
    }
    std::size_t cols() const {
        return cols_;
    }
    cplx &operator()(std::size_t r, std::size_t c) {
        return data_[r * cols_ + c];
    }
    cplx operator()(std::size_t r, std::size_t c) const {
        return data_[r * cols_ + c];
    }
    const std::vector<cplx> &data() const {
        return data_;
    }

    DenseMatrix operator*(const DenseMatrix &rhs) const;
    DenseMatrix operator+(const DenseMatrix &rhs) const;
    DenseMatrix operator-(const DenseMatrix &rhs) const;
    DenseMatrix operator*(cplx scale) const;
    DenseMatrix adjoint() const;
    DenseMatrix transpose() const;
    cplx trace() const;

    /// Kronecker product with `this` as the high-order factor.
    DenseMatrix kron(const DenseMatrix &low) const;

    double max_abs_diff(const DenseMatrix &other) const;
    bool is_unitary(double tol) const;

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cplx> data_;
};

/// 1 - |tr(A^dagger B)| / dim. Zero exactly when A and B agree up to a global
/// phase (for unitaries).
double phase_insensitive_distance(const DenseMatrix &a, const DenseMatrix &b);

/// Largest entrywise deviation of B from e^{i phi} A after aligning phi on the
/// largest-magnitude entry of A.
double max_deviation_up_to_phase(const DenseMatrix &a, const DenseMatrix &b);

}  // namespace encclone

#endif
