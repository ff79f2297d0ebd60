/// @file kernels.cpp
/// @brief Runtime kernel dispatch: MZV_KERNEL override, else the best
///        variant the CPU supports, else the scalar reference.

#include "mzv/kernels.hpp"

#include <cstdlib>
#include <cstdio>

namespace mzv::kernels {
namespace {

const Ops* pick() {
  if (const char* env = std::getenv("MZV_KERNEL")) {
    if (const Ops* o = ops_by_name(env)) return o;
    std::fprintf(stderr,
                 "mzv: MZV_KERNEL=%s unavailable on this machine; "
                 "falling back to auto-detection\n",
                 env);
  }
  if (const Ops* o = avx2_ops_or_null()) return o;
  if (const Ops* o = neon_ops_or_null()) return o;
  return &scalar_ops();
}

}  // namespace

const Ops& ops() {
  static const Ops* selected = pick();
  return *selected;
}

const Ops* ops_by_name(const std::string& name) {
  if (name == "scalar") return &scalar_ops();
  if (name == "avx2") return avx2_ops_or_null();
  if (name == "neon") return neon_ops_or_null();
  return nullptr;
}

}  // namespace mzv::kernels
