#pragma once

#include <vector>

#include "hessencomb/hessenberg.hpp"

namespace hessencomb {

// All Hessenberg functions on [n] with h(i) >= i+1 for i < n, in
// lexicographic order; there are Catalan(n-1) of them. Accepts 2 <= n <= 9.
std::vector<HessenbergFunction> enumerate_hessenberg(int n);

} // namespace hessencomb
