#include "cacti/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cacti::operad {

Permutation::Permutation(int n) : images_(static_cast<std::size_t>(n))
{
    std::iota(images_.begin(), images_.end(), 1);
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images))
{
    std::vector<bool> seen(images_.size() + 1, false);
    for (int v : images_) {
        if (v < 1 || v > size() || seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("not a permutation");
        seen[static_cast<std::size_t>(v)] = true;
    }
}

Permutation Permutation::transposition(int n, int a, int b)
{
    Permutation p(n);
    std::swap(p.images_[static_cast<std::size_t>(a - 1)], p.images_[static_cast<std::size_t>(b - 1)]);
    return p;
}

Permutation Permutation::random(int n, std::mt19937_64& rng)
{
    Permutation p(n);
    std::shuffle(p.images_.begin(), p.images_.end(), rng);
    return p;
}

std::vector<Permutation> Permutation::all(int n)
{
    std::vector<Permutation> out;
    Permutation p(n);
    do {
        out.push_back(p);
    } while (std::next_permutation(p.images_.begin(), p.images_.end()));
    return out;
}

Permutation Permutation::inverse() const
{
    std::vector<int> inv(images_.size());
    for (int k = 1; k <= size(); ++k) inv[static_cast<std::size_t>((*this)(k) - 1)] = k;
    return Permutation(std::move(inv));
}

Permutation operator*(const Permutation& a, const Permutation& b)
{
    if (a.size() != b.size()) throw std::invalid_argument("permutation size mismatch");
    std::vector<int> out(a.images_.size());
    for (int k = 1; k <= a.size(); ++k) out[static_cast<std::size_t>(k - 1)] = a(b(k));
    return Permutation(std::move(out));
}

Permutation Permutation::block(const Permutation& sigma, int i, const Permutation& tau)
{
    const int m = sigma.size();
    const int n = tau.size();
    if (i < 1 || i > m) throw std::out_of_range("block permutation slot out of range");
    const int si = sigma(i);
    // Position of input a of x in x o_{sigma(i)} y, for a != sigma(i).
    auto outer_position = [&](int a) { return a < si ? a : a + n - 1; };
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(m + n - 1));
    for (int k = 1; k < i; ++k) out.push_back(outer_position(sigma(k)));
    for (int b = 1; b <= n; ++b) out.push_back(si + tau(b) - 1);
    for (int k = i + 1; k <= m; ++k) out.push_back(outer_position(sigma(k)));
    return Permutation(std::move(out));
}

bool Permutation::is_identity() const
{
    for (int k = 1; k <= size(); ++k)
        if ((*this)(k) != k) return false;
    return true;
}

std::string to_string(const Permutation& p)
{
    std::ostringstream os;
    os << '[';
    for (int k = 1; k <= p.size(); ++k) os << (k > 1 ? " " : "") << p(k);
    os << ']';
    return os.str();
}

}  // namespace cacti::operad
