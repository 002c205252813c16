#include "hessencomb/hessenberg.hpp"

#include <algorithm>
#include <sstream>

#include "hessencomb/errors.hpp"

namespace hessencomb {

int IncomparabilityGraph::edge_index(int j, int i) const {
    if (j > i) std::swap(j, i);
    auto it = std::lower_bound(edges.begin(), edges.end(), std::pair<int, int>{j, i});
    if (it == edges.end() || *it != std::pair<int, int>{j, i}) return -1;
    return static_cast<int>(it - edges.begin());
}

std::vector<std::vector<int>> IncomparabilityGraph::adjacency() const {
    std::vector<std::vector<int>> adj(n + 1);
    for (auto [j, i] : edges) {
        adj[j].push_back(i);
        adj[i].push_back(j);
    }
    return adj;
}

HessenbergFunction::HessenbergFunction(std::vector<int> values) : values_(std::move(values)) {
    const int sz = static_cast<int>(values_.size());
    if (sz == 0) throw ValueOutOfRange("Hessenberg function must be nonempty");
    for (int i = 1; i <= sz; ++i) {
        const int v = values_[i - 1];
        if (v < i || v > sz)
            throw ValueOutOfRange("h(" + std::to_string(i) + ")=" + std::to_string(v) +
                                  " out of [" + std::to_string(i) + "," + std::to_string(sz) + "]");
        if (i > 1 && v < values_[i - 2])
            throw NotWeaklyIncreasing("h(" + std::to_string(i) + ") < h(" + std::to_string(i - 1) +
                                      ")");
        // Standing irreducibility assumption: h(i) >= i+1 for i < n.
        if (i < sz && v == i)
            throw Reducible("h(" + std::to_string(i) + ")=" + std::to_string(i) +
                            " makes the variety reducible");
    }
    for (int i = 1; i <= sz; ++i) dimension_ += values_[i - 1] - i;
    // T_h = { i in [n-1] : h(i-1) > i } with the convention h(0) = 2.
    for (int i = 1; i < sz; ++i) {
        const int prev = (i == 1) ? 2 : values_[i - 2];
        if (prev > i) T_.push_back(i);
    }
    graph_.n = sz;
    for (int j = 1; j <= sz; ++j)
        for (int i = j + 1; i <= values_[j - 1]; ++i) graph_.edges.emplace_back(j, i);
    std::sort(graph_.edges.begin(), graph_.edges.end());
}

bool HessenbergFunction::in_T(int i) const {
    return std::binary_search(T_.begin(), T_.end(), i);
}

std::string HessenbergFunction::str() const {
    std::ostringstream out;
    for (int i = 0; i < n(); ++i) {
        if (i) out << ',';
        out << values_[i];
    }
    return out.str();
}

HessenbergFunction HessenbergFunction::parse(const std::string& text) {
    std::vector<int> vals;
    std::stringstream ss(text);
    std::string tok;
    size_t offset = 0;
    while (std::getline(ss, tok, ',')) {
        try {
            size_t used = 0;
            int v = std::stoi(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            vals.push_back(v);
        } catch (const std::exception&) {
            throw ParseError("bad Hessenberg entry '" + tok + "' at position " +
                             std::to_string(offset));
        }
        offset += tok.size() + 1;
    }
    if (vals.empty()) throw ParseError("empty Hessenberg function literal");
    return HessenbergFunction(std::move(vals));
}

HessenbergFunction make_hessenberg(std::vector<int> values) {
    return HessenbergFunction(std::move(values));
}

} // namespace hessencomb
