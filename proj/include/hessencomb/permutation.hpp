#pragma once

#include <compare>
#include <string>
#include <vector>

namespace hessencomb {

// A permutation of [n] in one-line notation w(1)..w(n). Immutable value
// type; the canonical ordering (lexicographic on words) makes enumeration
// order deterministic everywhere.
class Permutation {
  public:
    Permutation() = default;
    explicit Permutation(std::vector<int> word);

    static Permutation identity(int n);
    // Swaps the values i and i+1, i.e. left multiplication by the simple
    // reflection s_i.
    static Permutation simple_reflection(int n, int i);

    int size() const { return static_cast<int>(word_.size()); }
    // w(i), 1-based.
    int operator()(int i) const { return word_[i - 1]; }
    // w^{-1}(value), 1-based.
    int position_of(int value) const { return pos_[value - 1]; }
    const std::vector<int>& word() const { return word_; }

    Permutation inverse() const;
    // (this ∘ other): apply other first.
    Permutation compose(const Permutation& other) const;
    // s_i * w: swap the values i and i+1 in the word.
    Permutation left_multiply_simple(int i) const;
    // w * s_{j,i}: swap the entries at positions j and i.
    Permutation right_multiply_transposition(int j, int i) const;

    int inversions() const;
    std::vector<int> descent_set() const;

    // Digit string for n <= 9 ("4123"), comma-separated otherwise.
    std::string str() const;
    static Permutation parse(const std::string& text);

    auto operator<=>(const Permutation& other) const { return word_ <=> other.word_; }
    bool operator==(const Permutation& other) const = default;

  private:
    std::vector<int> word_;
    std::vector<int> pos_;
};

// All permutations of [n] in lexicographic order.
std::vector<Permutation> all_permutations(int n);

} // namespace hessencomb
