#include "simd/kernels_internal.hpp"

namespace budgeted::simd::detail {
namespace {

void expectation_matrix_scalar(const double* vertices, std::size_t n_vertices,
                               std::size_t n_states, const double* payoffs_t,
                               std::size_t n_acts, double* out) {
  for (std::size_t v = 0; v < n_vertices; ++v) {
    const double* p = vertices + v * n_states;
    double* row = out + v * n_acts;
    for (std::size_t a = 0; a < n_acts; ++a) {
      double acc = 0.0;
      for (std::size_t s = 0; s < n_states; ++s) {
        acc = acc + p[s] * payoffs_t[s * n_acts + a];
      }
      row[a] = acc;
    }
  }
}

void max_difference_row_scalar(const double* x, std::size_t n_vertices,
                               std::size_t n, std::size_t i, double* out) {
  for (std::size_t j = 0; j < n; ++j) {
    double m = x[j] - x[i];
    for (std::size_t v = 1; v < n_vertices; ++v) {
      const double d = x[v * n + j] - x[v * n + i];
      m = d > m ? d : m;
    }
    out[j] = m + 0.0;
  }
}

double max_dot_scalar(const double* vertices_t, std::size_t n_vertices,
                      std::size_t n_states, const double* gamble) {
  double best = 0.0;
  for (std::size_t v = 0; v < n_vertices; ++v) {
    double acc = 0.0;
    for (std::size_t s = 0; s < n_states; ++s) {
      acc = acc + vertices_t[s * n_vertices + v] * gamble[s];
    }
    best = (v == 0 || acc > best) ? acc : best;
  }
  return best + 0.0;
}

void sub_scaled_scalar(double* y, const double* x, double a, std::size_t n) {
  for (std::size_t t = 0; t < n; ++t) y[t] = y[t] - a * x[t];
}

}  // namespace

const KernelTable kScalarTable = {
    Isa::kScalar,
    expectation_matrix_scalar,
    max_difference_row_scalar,
    max_dot_scalar,
    sub_scaled_scalar,
};

}  // namespace budgeted::simd::detail
