#include "hessencomb/universe.hpp"

#include "hessencomb/errors.hpp"

namespace hessencomb {

std::vector<HessenbergFunction> enumerate_hessenberg(int n) {
    if (n < 2 || n > 9) throw BudgetExceeded("Hessenberg universe is generated for 2 <= n <= 9");
    std::vector<HessenbergFunction> out;
    std::vector<int> values;
    auto rec = [&](auto&& self, int i) -> void {
        if (i > n) {
            out.emplace_back(values);
            return;
        }
        const int lo = std::max(i < n ? i + 1 : i, values.empty() ? 0 : values.back());
        for (int v = lo; v <= n; ++v) {
            values.push_back(v);
            self(self, i + 1);
            values.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

} // namespace hessencomb
