#include "hessencomb/partitions.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "hessencomb/errors.hpp"

namespace hessencomb {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw ValueOutOfRange("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw NotWeaklyIncreasing("partition parts must be weakly decreasing");
        size_ += parts_[i];
    }
}

std::string Partition::str() const {
    std::ostringstream out;
    out << '(';
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) out << ',';
        out << parts_[i];
    }
    out << ')';
    return out.str();
}

bool Partition::operator<(const Partition& other) const {
    if (size_ != other.size_) return size_ < other.size_;
    return std::lexicographical_compare(parts_.begin(), parts_.end(), other.parts_.begin(),
                                        other.parts_.end(), std::greater<int>());
}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_) {
        if (p <= 0) throw ValueOutOfRange("composition parts must be positive");
        size_ += p;
    }
}

Partition Composition::sorted() const {
    std::vector<int> p = parts_;
    std::sort(p.begin(), p.end(), std::greater<int>());
    return Partition(std::move(p));
}

std::string Composition::str() const {
    std::ostringstream out;
    out << '(';
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) out << ',';
        out << parts_[i];
    }
    out << ')';
    return out.str();
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rest, int max_part) -> void {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int k = std::min(rest, max_part); k >= 1; --k) {
            cur.push_back(k);
            self(self, rest - k, k);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

namespace {
Int multinomial(int n, const std::vector<int>& parts) {
    Int r = factorial(n);
    for (int p : parts) r /= factorial(p);
    return r;
}
} // namespace

Int multinomial_dim(const Composition& alpha) { return multinomial(alpha.size(), alpha.parts()); }
Int multinomial_dim(const Partition& lambda) { return multinomial(lambda.size(), lambda.parts()); }

} // namespace hessencomb
