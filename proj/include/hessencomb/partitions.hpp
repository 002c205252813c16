#pragma once

#include <compare>
#include <string>
#include <vector>

#include "hessencomb/bigint.hpp"

namespace hessencomb {

// A partition of n: weakly decreasing positive parts. Ordered by the
// reverse-lexicographic convention used throughout for canonical term
// order: (n) first, (1,...,1) last.
class Partition {
  public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }           // |lambda|
    int length() const { return static_cast<int>(parts_.size()); }

    std::string str() const; // "(4,2)"

    // Reverse-lex: larger first part sorts earlier within fixed n.
    bool operator<(const Partition& other) const;
    bool operator==(const Partition& other) const { return parts_ == other.parts_; }

  private:
    std::vector<int> parts_;
    int size_ = 0;
};

// A composition of n: positive parts in any order.
class Composition {
  public:
    Composition() = default;
    explicit Composition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }
    int length() const { return static_cast<int>(parts_.size()); }

    Partition sorted() const;
    std::string str() const;

    bool operator==(const Composition& other) const { return parts_ == other.parts_; }

  private:
    std::vector<int> parts_;
    int size_ = 0;
};

// Partitions of n in the canonical (reverse-lexicographic) order.
std::vector<Partition> partitions_of(int n);

// n! / prod(parts!) = dim of the permutation module M^alpha.
Int multinomial_dim(const Composition& alpha);
Int multinomial_dim(const Partition& lambda);

} // namespace hessencomb
