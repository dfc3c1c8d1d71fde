// Compiled with -mavx2 only (no -mfma): products and sums stay separate so the
// results match the scalar reference bit for bit.
#include <immintrin.h>

#include "simd/kernels_internal.hpp"

namespace budgeted::simd::detail {
namespace {

void expectation_matrix_avx2(const double* vertices, std::size_t n_vertices,
                             std::size_t n_states, const double* payoffs_t,
                             std::size_t n_acts, double* out) {
  for (std::size_t v = 0; v < n_vertices; ++v) {
    const double* p = vertices + v * n_states;
    double* row = out + v * n_acts;
    std::size_t a = 0;
    for (; a + 4 <= n_acts; a += 4) {
      __m256d acc = _mm256_setzero_pd();
      for (std::size_t s = 0; s < n_states; ++s) {
        const __m256d w = _mm256_set1_pd(p[s]);
        const __m256d x = _mm256_loadu_pd(payoffs_t + s * n_acts + a);
        acc = _mm256_add_pd(acc, _mm256_mul_pd(w, x));
      }
      _mm256_storeu_pd(row + a, acc);
    }
    for (; a < n_acts; ++a) {
      double acc = 0.0;
      for (std::size_t s = 0; s < n_states; ++s) {
        acc = acc + p[s] * payoffs_t[s * n_acts + a];
      }
      row[a] = acc;
    }
  }
}

void max_difference_row_avx2(const double* x, std::size_t n_vertices,
                             std::size_t n, std::size_t i, double* out) {
  const __m256d zero = _mm256_setzero_pd();
  std::size_t j = 0;
  for (; j + 4 <= n; j += 4) {
    __m256d m = _mm256_sub_pd(_mm256_loadu_pd(x + j), _mm256_set1_pd(x[i]));
    for (std::size_t v = 1; v < n_vertices; ++v) {
      const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(x + v * n + j),
                                      _mm256_set1_pd(x[v * n + i]));
      // Second operand wins on equality, same as `d > m ? d : m`.
      m = _mm256_max_pd(d, m);
    }
    _mm256_storeu_pd(out + j, _mm256_add_pd(m, zero));
  }
  for (; j < n; ++j) {
    double m = x[j] - x[i];
    for (std::size_t v = 1; v < n_vertices; ++v) {
      const double d = x[v * n + j] - x[v * n + i];
      m = d > m ? d : m;
    }
    out[j] = m + 0.0;
  }
}

double max_dot_avx2(const double* vertices_t, std::size_t n_vertices,
                    std::size_t n_states, const double* gamble) {
  double best = 0.0;
  bool have = false;
  std::size_t v = 0;
  for (; v + 4 <= n_vertices; v += 4) {
    __m256d acc = _mm256_setzero_pd();
    for (std::size_t s = 0; s < n_states; ++s) {
      const __m256d w = _mm256_loadu_pd(vertices_t + s * n_vertices + v);
      acc = _mm256_add_pd(acc, _mm256_mul_pd(w, _mm256_set1_pd(gamble[s])));
    }
    alignas(32) double lane[4];
    _mm256_store_pd(lane, acc);
    for (double value : lane) {
      best = (!have || value > best) ? value : best;
      have = true;
    }
  }
  for (; v < n_vertices; ++v) {
    double acc = 0.0;
    for (std::size_t s = 0; s < n_states; ++s) {
      acc = acc + vertices_t[s * n_vertices + v] * gamble[s];
    }
    best = (!have || acc > best) ? acc : best;
    have = true;
  }
  return best + 0.0;
}

void sub_scaled_avx2(double* y, const double* x, double a, std::size_t n) {
  const __m256d va = _mm256_set1_pd(a);
  std::size_t t = 0;
  for (; t + 4 <= n; t += 4) {
    const __m256d prod = _mm256_mul_pd(va, _mm256_loadu_pd(x + t));
    _mm256_storeu_pd(y + t, _mm256_sub_pd(_mm256_loadu_pd(y + t), prod));
  }
  for (; t < n; ++t) y[t] = y[t] - a * x[t];
}

}  // namespace

const KernelTable kAvx2Table = {
    Isa::kAvx2,
    expectation_matrix_avx2,
    max_difference_row_avx2,
    max_dot_avx2,
    sub_scaled_avx2,
};

}  // namespace budgeted::simd::detail
