#pragma once

#include "budgeted/simd.hpp"

namespace budgeted::simd::detail {

extern const KernelTable kScalarTable;

#if defined(BUDGETED_HAVE_AVX2)
extern const KernelTable kAvx2Table;
#endif

#if defined(BUDGETED_HAVE_NEON)
extern const KernelTable kNeonTable;
#endif

}  // namespace budgeted::simd::detail
