#include <cstdlib>
#include <string>

#include "budgeted/error.hpp"
#include "simd/kernels_internal.hpp"

namespace budgeted::simd {
namespace {

bool cpu_supports(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return true;
    case Isa::kAvx2:
#if defined(BUDGETED_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Isa::kNeon:
#if defined(BUDGETED_HAVE_NEON)
      return true;  // mandatory on aarch64
#else
      return false;
#endif
  }
  return false;
}

const KernelTable& select_kernels() {
  const char* env = std::getenv("BUDGETED_SIMD");
  const std::string choice = env ? env : "auto";
  if (choice == "scalar") return scalar_kernels();
  if (choice == "avx2" || choice == "neon") {
    const Isa wanted = choice == "avx2" ? Isa::kAvx2 : Isa::kNeon;
    if (!cpu_supports(wanted)) {
      fail(ErrorKind::kMalformedInput,
           "BUDGETED_SIMD=" + choice + " is not supported on this CPU/build");
    }
    return kernels_for(wanted);
  }
  if (choice != "auto") {
    fail(ErrorKind::kMalformedInput, "BUDGETED_SIMD: unknown value '" + choice + "'");
  }
  return kernels_for(available_isas().back());
}

}  // namespace

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return "scalar";
    case Isa::kAvx2:
      return "avx2";
    case Isa::kNeon:
      return "neon";
  }
  return "unknown";
}

const KernelTable& scalar_kernels() { return detail::kScalarTable; }

std::vector<Isa> available_isas() {
  std::vector<Isa> out{Isa::kScalar};
  for (Isa isa : {Isa::kAvx2, Isa::kNeon}) {
    if (cpu_supports(isa)) out.push_back(isa);
  }
  return out;
}

const KernelTable& kernels_for(Isa isa) {
  if (!cpu_supports(isa)) {
    fail(ErrorKind::kInternal, "kernel set not available: " + std::string(isa_name(isa)));
  }
  switch (isa) {
#if defined(BUDGETED_HAVE_AVX2)
    case Isa::kAvx2:
      return detail::kAvx2Table;
#endif
#if defined(BUDGETED_HAVE_NEON)
    case Isa::kNeon:
      return detail::kNeonTable;
#endif
    default:
      return detail::kScalarTable;
  }
}

const KernelTable& active_kernels() {
  static const KernelTable& table = select_kernels();
  return table;
}

}  // namespace budgeted::simd
