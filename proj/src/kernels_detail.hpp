#pragma once
// Internal declarations shared between the kernel translation units.

#include "dfsim/kernels.hpp"

namespace dfsim::kernels::detail {

// Defined in kernels_avx2.cpp. Returns nullptr when that translation unit
// was built without AVX2+FMA support. The caller must verify CPU support
// before invoking any function from the returned table.
const Backend* avx2_backend_table();

}  // namespace dfsim::kernels::detail
