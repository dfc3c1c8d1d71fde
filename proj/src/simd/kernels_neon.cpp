#include <arm_neon.h>

#include "simd/kernels_internal.hpp"

namespace budgeted::simd::detail {
namespace {

// vmaxq_f64 orders -0 below +0; select explicitly to mirror `d > m ? d : m`.
inline float64x2_t select_greater(float64x2_t d, float64x2_t m) {
  return vbslq_f64(vcgtq_f64(d, m), d, m);
}

void expectation_matrix_neon(const double* vertices, std::size_t n_vertices,
                             std::size_t n_states, const double* payoffs_t,
                             std::size_t n_acts, double* out) {
  for (std::size_t v = 0; v < n_vertices; ++v) {
    const double* p = vertices + v * n_states;
    double* row = out + v * n_acts;
    std::size_t a = 0;
    for (; a + 2 <= n_acts; a += 2) {
      float64x2_t acc = vdupq_n_f64(0.0);
      for (std::size_t s = 0; s < n_states; ++s) {
        const float64x2_t prod =
            vmulq_f64(vdupq_n_f64(p[s]), vld1q_f64(payoffs_t + s * n_acts + a));
        acc = vaddq_f64(acc, prod);
      }
      vst1q_f64(row + a, acc);
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

void max_difference_row_neon(const double* x, std::size_t n_vertices,
                             std::size_t n, std::size_t i, double* out) {
  const float64x2_t zero = vdupq_n_f64(0.0);
  std::size_t j = 0;
  for (; j + 2 <= n; j += 2) {
    float64x2_t m = vsubq_f64(vld1q_f64(x + j), vdupq_n_f64(x[i]));
    for (std::size_t v = 1; v < n_vertices; ++v) {
      const float64x2_t d =
          vsubq_f64(vld1q_f64(x + v * n + j), vdupq_n_f64(x[v * n + i]));
      m = select_greater(d, m);
    }
    vst1q_f64(out + j, vaddq_f64(m, zero));
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

double max_dot_neon(const double* vertices_t, std::size_t n_vertices,
                    std::size_t n_states, const double* gamble) {
  double best = 0.0;
  bool have = false;
  std::size_t v = 0;
  for (; v + 2 <= n_vertices; v += 2) {
    float64x2_t acc = vdupq_n_f64(0.0);
    for (std::size_t s = 0; s < n_states; ++s) {
      const float64x2_t prod = vmulq_f64(vld1q_f64(vertices_t + s * n_vertices + v),
                                         vdupq_n_f64(gamble[s]));
      acc = vaddq_f64(acc, prod);
    }
    const double lane[2] = {vgetq_lane_f64(acc, 0), vgetq_lane_f64(acc, 1)};
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

void sub_scaled_neon(double* y, const double* x, double a, std::size_t n) {
  const float64x2_t va = vdupq_n_f64(a);
  std::size_t t = 0;
  for (; t + 2 <= n; t += 2) {
    const float64x2_t prod = vmulq_f64(va, vld1q_f64(x + t));
    vst1q_f64(y + t, vsubq_f64(vld1q_f64(y + t), prod));
  }
  for (; t < n; ++t) y[t] = y[t] - a * x[t];
}

}  // namespace

const KernelTable kNeonTable = {
    Isa::kNeon,
    expectation_matrix_neon,
    max_difference_row_neon,
    max_dot_neon,
    sub_scaled_neon,
};

}  // namespace budgeted::simd::detail
