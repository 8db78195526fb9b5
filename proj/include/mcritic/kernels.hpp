#pragma once

#include <cstddef>
#include <string>

// Dense double-precision inner loops behind the tensor engine. Two backends:
// a scalar reference and an AVX2/FMA variant, selected once at startup
// (override with MC_KERNELS=scalar|avx2). Both backends implement the same
// operation contracts, including the exact association order of reductions
// (4 stride lanes combined as (l0+l2)+(l1+l3), sequential tail), so their
// outputs are bitwise identical and equivalence-tested as such.
//
// All matrices are row-major. GEMM variants overwrite C unless named _acc,
// which accumulate into C. Transcendentals saturate outside |x| <= 708 and
// assume finite inputs.

namespace mcritic::kernels {

inline constexpr std::size_t npos = static_cast<std::size_t>(-1);

struct Kernels {
  // c[m x n] = a[m x k] * b[k x n]
  void (*gemm_nn)(std::size_t m, std::size_t k, std::size_t n,
                  const double* a, const double* b, double* c);
  void (*gemm_nn_acc)(std::size_t m, std::size_t k, std::size_t n,
                      const double* a, const double* b, double* c);
  // c[m x n] += a^T * b with a[r x m], b[r x n]
  void (*gemm_tn_acc)(std::size_t r, std::size_t m, std::size_t n,
                      const double* a, const double* b, double* c);

  void (*add)(std::size_t n, const double* a, const double* b, double* o);
  void (*sub)(std::size_t n, const double* a, const double* b, double* o);
  void (*mul)(std::size_t n, const double* a, const double* b, double* o);
  void (*div)(std::size_t n, const double* a, const double* b, double* o);
  void (*scale)(std::size_t n, const double* a, double s, double* o);
  void (*add_scalar)(std::size_t n, const double* a, double s, double* o);
  // y += alpha * x
  void (*axpy)(std::size_t n, double alpha, const double* x, double* y);
  // o += a .* b ; o -= a .* b
  void (*mul_acc)(std::size_t n, const double* a, const double* b, double* o);
  void (*mul_acc_neg)(std::size_t n, const double* a, const double* b, double* o);

  void (*exp)(std::size_t n, const double* a, double* o);
  void (*log)(std::size_t n, const double* a, double* o);
  void (*tanh)(std::size_t n, const double* a, double* o);
  void (*sigmoid)(std::size_t n, const double* a, double* o);
  void (*softplus)(std::size_t n, const double* a, double* o);

  // da += dy .* f'(.) given the forward output y (or input x for softplus)
  void (*tanh_bwd_acc)(std::size_t n, const double* dy, const double* y, double* da);
  void (*sigmoid_bwd_acc)(std::size_t n, const double* dy, const double* y, double* da);
  void (*softplus_bwd_acc)(std::size_t n, const double* dy, const double* x, double* da);

  double (*sum)(std::size_t n, const double* a);
  double (*dot)(std::size_t n, const double* a, const double* b);

  void (*softmax_rows)(std::size_t rows, std::size_t cols, const double* x, double* y);
  void (*softmax_rows_bwd_acc)(std::size_t rows, std::size_t cols,
                               const double* dy, const double* y, double* dx);

  void (*layernorm_rows)(std::size_t rows, std::size_t cols, const double* x,
                         const double* gamma, const double* beta, double eps,
                         double* y, double* mean, double* rstd);
  void (*layernorm_rows_bwd_acc)(std::size_t rows, std::size_t cols,
                                 const double* dy, const double* x,
                                 const double* gamma, const double* mean,
                                 const double* rstd, double* dx, double* dgamma,
                                 double* dbeta);

  // Bias-corrected adaptive-moment update, in place.
  void (*adam_update)(std::size_t n, double* p, const double* g, double* m,
                      double* v, double lr, double beta1, double beta2,
                      double eps, long step);

  // Index of the first NaN/Inf, or npos.
  std::size_t (*first_nonfinite)(std::size_t n, const double* a);
};

enum class Backend { scalar, avx2 };

bool avx2_available();
const Kernels& get(Backend b);       // throws contract_error if unavailable
const Kernels& active();             // resolved once per process
Backend active_backend();
const char* backend_name();

// Plain data movement, backend-independent. o[c x r] = a[r x c]^T.
void transpose(std::size_t r, std::size_t c, const double* a, double* o);

}  // namespace mcritic::kernels
