/*
 * SPDX-License-Identifier: Apache-2.0
 */

#ifndef INFERCOST_TESTS_FIXTURE_H_
#define INFERCOST_TESTS_FIXTURE_H_

#include <stdexcept>

#include "infercost/registry.h"

namespace testing_support {

inline std::filesystem::path DataDir() { return INFERCOST_TEST_DATA_DIR; }

// The bundled tables, loaded once per test binary.
inline const infercost::DatasetBundle& Bundle() {
  static const infercost::DatasetBundle bundle = [] {
    infercost::LoadResult r = infercost::load_bundle(infercost::bundle_paths_in(DataDir()));
    if (!r.ok()) {
      std::string msg = "bundled data failed to load:";
      for (const auto& e : r.errors) msg += "\n  " + e.to_string();
      throw std::runtime_error(msg);
    }
    return std::move(*r.bundle);
  }();
  return bundle;
}

inline std::vector<infercost::ModelRecord> Domain(infercost::Domain d) {
  return infercost::filter_models(Bundle(), {d, std::nullopt, false,
                                             infercost::ExtraDataFilter::kAny});
}

}  // namespace testing_support

#endif  // INFERCOST_TESTS_FIXTURE_H_
