/*
 * SPDX-License-Identifier: Apache-2.0
 */

#ifndef INFERCOST_SRC_KERNELS_INTERNAL_H_
#define INFERCOST_SRC_KERNELS_INTERNAL_H_

#include "infercost/kernels.h"

namespace infercost::kernels {

namespace scalar {
extern const KernelTable kTable;
}  // namespace scalar

#if defined(INFERCOST_HAVE_AVX2)
namespace avx2 {
extern const KernelTable kTable;
}  // namespace avx2
#endif

}  // namespace infercost::kernels

#endif  // INFERCOST_SRC_KERNELS_INTERNAL_H_
