#pragma once

// Data-parallel inner loops shared by the bioheat solver and the encoder.
//
// Every kernel exists as a portable scalar reference and, on x86-64, as an
// AVX2/FMA variant. The variant is picked once at startup from CPUID and
// can be pinned with THERMDENS_SIMD=scalar|avx2. Element-wise kernels are
// bit-identical across variants; reductions (dot, gemm) differ only in
// rounding, see tests/unit/test_simd.cpp.

#include <cstddef>
#include <string_view>

namespace thermdens::simd {

enum class Isa { scalar, avx2 };

std::string_view isa_name(Isa isa) noexcept;

// Symmetric 7-point operator on an x-fastest grid:
//   y[i] = diag[i]*x[i] - cx[i]*x[i+1] - cx[i-1]*x[i-1]
//                       - cy[i]*x[i+sy] - cy[i-sy]*x[i-sy]
//                       - cz[i]*x[i+sz] - cz[i-sz]*x[i-sz]
// cx/cy/cz/x must be readable on [-sz, n + sz); the padding holds zeros.
struct Stencil7 {
    const double* diag;
    const double* cx;
    const double* cy;
    const double* cz;
    std::size_t n;
    std::size_t sy;
    std::size_t sz;
};

struct KernelTable {
    Isa isa;
    double (*dot)(const double* a, const double* b, std::size_t n);
    // y += alpha * x
    void (*axpy)(double alpha, const double* x, double* y, std::size_t n);
    // y = x + beta * y
    void (*xpby)(const double* x, double beta, double* y, std::size_t n);
    void (*stencil7)(const Stencil7& op, const double* x, double* y);
    // C[m x n] += A[m x k] * B[k x n], row-major with leading dimensions.
    void (*gemm_acc)(std::size_t m, std::size_t n, std::size_t k,
                     const double* a, std::size_t lda,
                     const double* b, std::size_t ldb,
                     double* c, std::size_t ldc);
};

bool isa_supported(Isa isa) noexcept;

// Table for a specific ISA; throws thermdens::ConfigError if unsupported.
const KernelTable& kernels_for(Isa isa);

// Runtime-selected table.
const KernelTable& kernels();

namespace detail {
const KernelTable& scalar_table() noexcept;
const KernelTable* avx2_table() noexcept;  // nullptr when not compiled in
}  // namespace detail

}  // namespace thermdens::simd
