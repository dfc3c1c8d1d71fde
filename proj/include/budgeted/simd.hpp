#pragma once

// Data-parallel inner loops used by the credal and LP code.
//
// Every kernel has a scalar reference and optional AVX2 / NEON variants. All
// variants accumulate in the same order and never fuse multiply-add, so their
// outputs are bitwise identical; tests/unit/simd_equivalence_test.cpp holds
// them to that.

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace budgeted::simd {

enum class Isa { kScalar, kAvx2, kNeon };

std::string_view isa_name(Isa isa);

struct KernelTable {
  Isa isa;

  // out[v * n_acts + a] = sum_s vertices[v * n_states + s] * payoffs_t[s * n_acts + a]
  // Sum runs over s in ascending order.
  void (*expectation_matrix)(const double* vertices, std::size_t n_vertices,
                             std::size_t n_states, const double* payoffs_t,
                             std::size_t n_acts, double* out);

  // out[j] = max_v (x[v * n + j] - x[v * n + i]) for every j.
  void (*max_difference_row)(const double* x, std::size_t n_vertices,
                             std::size_t n, std::size_t i, double* out);

  // max_v sum_s vertices_t[s * n_vertices + v] * gamble[s]
  double (*max_dot)(const double* vertices_t, std::size_t n_vertices,
                    std::size_t n_states, const double* gamble);

  // y[t] = y[t] - a * x[t]
  void (*sub_scaled)(double* y, const double* x, double a, std::size_t n);
};

// Reference implementation, always available.
const KernelTable& scalar_kernels();

// Variants compiled in and supported by the running CPU, scalar first.
std::vector<Isa> available_isas();
const KernelTable& kernels_for(Isa isa);

// Kernel table used by the library. Chosen once: BUDGETED_SIMD
// (scalar|avx2|neon|auto) overrides, otherwise the widest supported ISA.
const KernelTable& active_kernels();

}  // namespace budgeted::simd
