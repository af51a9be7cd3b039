#pragma once

#include <cstdint>

namespace nilm {

// C[M,N] = alpha * op(A) * op(B) + beta * C, row-major with explicit leading
// dimensions. op is transpose when the corresponding flag is set; lda/ldb
// refer to the *stored* matrix (before transposition).
void gemm(bool trans_a, bool trans_b, std::int64_t m, std::int64_t n, std::int64_t k,
          double alpha, const double* a, std::int64_t lda, const double* b, std::int64_t ldb,
          double beta, double* c, std::int64_t ldc);

// y[N] += colsum(X[M,N]) — the bias-gradient reduction.
void add_column_sums(const double* x, std::int64_t m, std::int64_t n, std::int64_t ldx, double* y);

} // namespace nilm
