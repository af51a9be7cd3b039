#include "nilm/gemm.hpp"

#include <Eigen/Core>

namespace nilm {

namespace {

using RowMat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Stride = Eigen::OuterStride<Eigen::Dynamic>;
using ConstMap = Eigen::Map<const RowMat, Eigen::Unaligned, Stride>;
using Map = Eigen::Map<RowMat, Eigen::Unaligned, Stride>;

} // namespace

void gemm(bool trans_a, bool trans_b, std::int64_t m, std::int64_t n, std::int64_t k,
          double alpha, const double* a, std::int64_t lda, const double* b, std::int64_t ldb,
          double beta, double* c, std::int64_t ldc) {
    ConstMap ma(a, trans_a ? k : m, trans_a ? m : k, Stride(lda));
    ConstMap mb(b, trans_b ? n : k, trans_b ? k : n, Stride(ldb));
    Map mc(c, m, n, Stride(ldc));

    if (beta == 0.0)
        mc.setZero();
    else if (beta != 1.0)
        mc *= beta;

    if (trans_a) {
        if (trans_b)
            mc.noalias() += alpha * (ma.transpose() * mb.transpose());
        else
            mc.noalias() += alpha * (ma.transpose() * mb);
    } else {
        if (trans_b)
            mc.noalias() += alpha * (ma * mb.transpose());
        else
            mc.noalias() += alpha * (ma * mb);
    }
}

void add_column_sums(const double* x, std::int64_t m, std::int64_t n, std::int64_t ldx, double* y) {
    for (std::int64_t i = 0; i < m; ++i) {
        const double* row = x + i * ldx;
        for (std::int64_t j = 0; j < n; ++j) y[j] += row[j];
    }
}

} // namespace nilm
