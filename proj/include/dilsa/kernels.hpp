#pragma once

#include <cstddef>
#include <string>

namespace dilsa::kernels {

// Double-precision kernels used by the estimator training/inference inner
// loops. Every entry has a scalar reference implementation; on x86-64 an
// AVX2+FMA variant is selected at runtime when the CPU supports it. The
// variants are equivalence-tested against the scalar reference.
struct Ops {
    const char* name;

    // sum_i a[i]*b[i]
    double (*dot)(const double* a, const double* b, std::size_t n);

    // y[i] += alpha * x[i]
    void (*axpy)(double alpha, const double* x, double* y, std::size_t n);

    // y = A*x (+ bias); A is row-major m x n, bias may be null
    void (*gemv)(std::size_t m, std::size_t n, const double* a,
                 const double* x, const double* bias, double* y);

    // dx[j] += sum_i A[i][j] * dy[i]
    void (*gemv_t_acc)(std::size_t m, std::size_t n, const double* a,
                       const double* dy, double* dx);

    // dA[i][j] += dy[i] * x[j]
    void (*outer_acc)(std::size_t m, std::size_t n, double* da,
                      const double* dy, const double* x);

    // Adam update with precomputed bias corrections c1 = 1/(1-beta1^t),
    // c2 = 1/(1-beta2^t):
    //   m = beta1*m + (1-beta1)*g
    //   v = beta2*v + (1-beta2)*g^2
    //   w -= lr * (m*c1) / (sqrt(v*c2) + eps)
    void (*adam_step)(std::size_t n, double* w, const double* g, double* m,
                      double* v, double lr, double beta1, double beta2,
                      double c1, double c2, double eps);
};

const Ops& scalar();

#if defined(__x86_64__) || defined(_M_X64)
const Ops& avx2();
bool avx2_supported();
#endif

// Runtime-selected implementation. Honors the DILSA_KERNELS environment
// variable ("scalar", "avx2", "auto") on first use; force() overrides.
const Ops& active();
void force(const std::string& name);

} // namespace dilsa::kernels
