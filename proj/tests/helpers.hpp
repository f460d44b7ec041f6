#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "gaprep/core.hpp"

namespace testing_helpers {

/// Repeat from copy coordinates (lbeg..lend, rbeg..rend).
inline gaprep::GappedRepeat copies(gaprep::pos_t lbeg, gaprep::pos_t lend, gaprep::pos_t rbeg, gaprep::pos_t rend) {
    return {lbeg, lend - lbeg + 1, rbeg - lbeg};
}

template <class T>
std::vector<T> sorted(std::vector<T> v) {
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace testing_helpers
