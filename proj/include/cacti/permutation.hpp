#ifndef CACTI_PERMUTATION_HPP
#define CACTI_PERMUTATION_HPP

#include <random>
#include <string>
#include <vector>

namespace cacti::operad {

// Permutation of {1..n}; operator()(k) is the image of k. Acts on operad
// elements from the right: (x sigma)_k = x_{sigma(k)}.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(int n);  // identity
    // Images of 1..n; throws std::invalid_argument if not a bijection.
    explicit Permutation(std::vector<int> images);

    static Permutation transposition(int n, int a, int b);
    static Permutation random(int n, std::mt19937_64& rng);
    static std::vector<Permutation> all(int n);

    int size() const { return static_cast<int>(images_.size()); }
    int operator()(int k) const { return images_[static_cast<std::size_t>(k - 1)]; }
    const std::vector<int>& images() const { return images_; }

    Permutation inverse() const;
    // (a * b)(k) = a(b(k)); with the right action x(ab) = (xa)b.
    friend Permutation operator*(const Permutation& a, const Permutation& b);

    // sigma o_i tau in Sigma_{m+n-1}: sigma permutes m consecutive blocks, all
    // singletons except the i-th which has n elements and is permuted by tau.
    // Satisfies (x sigma) o_i (y tau) = (x o_{sigma(i)} y)(sigma o_i tau).
    static Permutation block(const Permutation& sigma, int i, const Permutation& tau);

    bool is_identity() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> images_;
};

std::string to_string(const Permutation& p);

}  // namespace cacti::operad

#endif
