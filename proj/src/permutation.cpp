#include "hessencomb/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "hessencomb/errors.hpp"

namespace hessencomb {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
    const int n = static_cast<int>(word_.size());
    if (n == 0) throw ParseError("permutation must be nonempty");
    pos_.assign(n, 0);
    for (int i = 0; i < n; ++i) {
        const int v = word_[i];
        if (v < 1 || v > n || pos_[v - 1] != 0)
            throw ParseError("word is not a bijection of [n]: " + std::to_string(v));
        pos_[v - 1] = i + 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    return Permutation(std::move(w));
}

Permutation Permutation::simple_reflection(int n, int i) {
    if (i < 1 || i >= n) throw IndexOutOfRange("simple reflection index out of [1,n-1]");
    return identity(n).left_multiply_simple(i);
}

Permutation Permutation::inverse() const {
    return Permutation(pos_);
}

Permutation Permutation::compose(const Permutation& other) const {
    if (size() != other.size()) throw SizeMismatch("compose: sizes differ");
    std::vector<int> w(word_.size());
    for (int i = 1; i <= size(); ++i) w[i - 1] = (*this)(other(i));
    return Permutation(std::move(w));
}

Permutation Permutation::left_multiply_simple(int i) const {
    if (i < 1 || i >= size()) throw IndexOutOfRange("simple reflection index out of [1,n-1]");
    std::vector<int> w = word_;
    std::swap(w[pos_[i - 1] - 1], w[pos_[i] - 1]);
    return Permutation(std::move(w));
}

Permutation Permutation::right_multiply_transposition(int j, int i) const {
    if (j < 1 || i < 1 || j > size() || i > size() || j == i)
        throw IndexOutOfRange("transposition positions out of range");
    std::vector<int> w = word_;
    std::swap(w[j - 1], w[i - 1]);
    return Permutation(std::move(w));
}

int Permutation::inversions() const {
    int count = 0;
    const int n = size();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (word_[a] > word_[b]) ++count;
    return count;
}

std::vector<int> Permutation::descent_set() const {
    std::vector<int> des;
    for (int i = 1; i < size(); ++i)
        if (word_[i - 1] > word_[i]) des.push_back(i);
    return des;
}

std::string Permutation::str() const {
    std::ostringstream out;
    if (size() <= 9) {
        for (int v : word_) out << v;
    } else {
        for (int i = 0; i < size(); ++i) {
            if (i) out << ',';
            out << word_[i];
        }
    }
    return out.str();
}

Permutation Permutation::parse(const std::string& text) {
    if (text.empty()) throw ParseError("empty permutation literal");
    std::vector<int> w;
    if (text.find(',') != std::string::npos) {
        std::stringstream ss(text);
        std::string tok;
        size_t offset = 0;
        while (std::getline(ss, tok, ',')) {
            try {
                size_t used = 0;
                int v = std::stoi(tok, &used);
                if (used != tok.size()) throw std::invalid_argument(tok);
                w.push_back(v);
            } catch (const std::exception&) {
                throw ParseError("bad permutation entry '" + tok + "' at position " +
                                 std::to_string(offset));
            }
            offset += tok.size() + 1;
        }
    } else {
        for (size_t i = 0; i < text.size(); ++i) {
            if (text[i] < '1' || text[i] > '9')
                throw ParseError("bad digit '" + std::string(1, text[i]) + "' at position " +
                                 std::to_string(i));
            w.push_back(text[i] - '0');
        }
    }
    return Permutation(std::move(w));
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    std::vector<Permutation> out;
    do {
        out.emplace_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

} // namespace hessencomb
