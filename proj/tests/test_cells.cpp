#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "cacti/cell_complex.hpp"

using namespace cacti::homology;

namespace {

// Coefficients of prod_{i=1}^{n-1} (1 + i t^{m-1}).
std::vector<long> product_betti(int n, int m)
{
    std::vector<long> p{1};
    for (int i = 1; i < n; ++i) {
        std::vector<long> q(p.size() + static_cast<std::size_t>(m - 1), 0);
        for (std::size_t d = 0; d < p.size(); ++d) {
            q[d] += p[d];
            q[d + static_cast<std::size_t>(m - 1)] += i * p[d];
        }
        p = q;
    }
    return p;
}

// Brute-force cell test straight from the definition.
bool brute_cell(const Cell& x, int n, int m)
{
    std::set<int> seen(x.begin(), x.end());
    if (static_cast<int>(seen.size()) != n || *seen.begin() != 1 || *seen.rbegin() != n) return false;
    for (std::size_t i = 1; i < x.size(); ++i)
        if (x[i] == x[i - 1]) return false;
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) {
            std::vector<int> f;
            for (int v : x)
                if ((v == a || v == b) && (f.empty() || f.back() != v)) f.push_back(v);
            if (static_cast<int>(f.size()) >= m + 2) return false;
        }
    return true;
}

// Rank over Q by fraction-free Gaussian elimination.
long dense_rank(const SparseIntMatrix& m)
{
    std::vector<std::vector<Integer>> a(static_cast<std::size_t>(m.rows()), std::vector<Integer>(static_cast<std::size_t>(m.cols()), 0));
    for (int c = 0; c < m.cols(); ++c)
        for (const auto& [r, v] : m.column(c)) a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
    long rank = 0;
    std::size_t row = 0;
    for (std::size_t c = 0; c < static_cast<std::size_t>(m.cols()) && row < a.size(); ++c) {
        std::size_t p = row;
        while (p < a.size() && a[p][c] == 0) ++p;
        if (p == a.size()) continue;
        std::swap(a[p], a[row]);
        for (std::size_t i = row + 1; i < a.size(); ++i) {
            if (a[i][c] == 0) continue;
            Integer f = a[i][c], g = a[row][c];
            for (std::size_t j = c; j < a[i].size(); ++j) a[i][j] = a[i][j] * g - a[row][j] * f;
        }
        ++row;
        ++rank;
    }
    return rank;
}

}  // namespace

TEST_CASE("small cell lists")
{
    auto c = enumerate_cells(2, 2);
    REQUIRE(c.size() == 2);
    CHECK(c[0] == std::vector<Cell>{{1, 2}, {2, 1}});
    CHECK(c[1] == std::vector<Cell>{{1, 2, 1}, {2, 1, 2}});
    CHECK(enumerate_cells(1, 2) == std::vector<std::vector<Cell>>{{{1}}});
    CHECK_THROWS_AS(enumerate_cells(0, 2), std::invalid_argument);
}

TEST_CASE("enumeration agrees with brute force")
{
    for (auto [n, m] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {3, 3}, {4, 2}, {2, 5}}) {
        auto cells = enumerate_cells(n, m);
        std::set<Cell> listed;
        for (const auto& g : cells) listed.insert(g.begin(), g.end());
        // Every sequence of length <= top length over 1..n.
        std::size_t maxlen = static_cast<std::size_t>(n) + cells.size() - 1;
        std::set<Cell> brute;
        Cell x;
        std::function<void()> rec = [&] {
            if (brute_cell(x, n, m)) brute.insert(x);
            if (x.size() == maxlen + 1) return;
            for (int s = 1; s <= n; ++s) {
                x.push_back(s);
                rec();
                x.pop_back();
            }
        };
        rec();
        INFO("n=" << n << " m=" << m);
        CHECK(listed == brute);
    }
}

TEST_CASE("f-vectors")
{
    auto f = [](int n, int m) {
        std::vector<long> v;
        for (const auto& g : enumerate_cells(n, m)) v.push_back(static_cast<long>(g.size()));
        return v;
    };
    CHECK(f(3, 2) == std::vector<long>{6, 18, 12});
    CHECK(f(4, 2) == std::vector<long>{24, 144, 240, 120});
    CHECK(f(3, 3) == std::vector<long>{6, 18, 42, 54, 36, 6});
    // F_m(2) has two cells in each dimension 0..m-1.
    for (int m = 1; m <= 6; ++m) CHECK(f(2, m) == std::vector<long>(static_cast<std::size_t>(m), 2));
}

TEST_CASE("boundary of small cells")
{
    auto d = boundary({1, 2, 1}, 2, 2);
    REQUIRE(d.size() == 2);
    CHECK(d[0].cell == Cell{1, 2});
    CHECK(d[1].cell == Cell{2, 1});
    CHECK(d[0].sign == -d[1].sign);
    // The two middle deletions of (1,2,1,2) at m = 3 lie between equal
    // labels; only the end deletions survive.
    auto e = boundary({1, 2, 1, 2}, 2, 3);
    REQUIRE(e.size() == 2);
    CHECK(e[0].cell == Cell{1, 2, 1});
    CHECK(e[1].cell == Cell{2, 1, 2});
    // (1,2,1) and (2,1,2) carry opposite boundaries in this orientation.
    CHECK(e[0].sign == e[1].sign);
    auto d121 = boundary({1, 2, 1}, 2, 3), d212 = boundary({2, 1, 2}, 2, 3);
    REQUIRE(d121.size() == 2);
    REQUIRE(d212.size() == 2);
    CHECK(d121[0].sign == -d212[0].sign);
    CHECK(boundary({1, 2}, 2, 2).empty());
    CHECK_THROWS_AS(boundary({1, 2, 1, 2}, 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(boundary({1, 1}, 1, 2), std::invalid_argument);
}

TEST_CASE("boundary squared vanishes")
{
    for (auto [n, m] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {4, 2}, {2, 3}, {3, 3}, {2, 4}, {3, 4}}) {
        auto c = build_chain_complex(n, m);
        INFO("n=" << n << " m=" << m);
        CHECK_NOTHROW(check_boundary_squared(c));
    }
}

TEST_CASE("homology matches the product formula")
{
    for (auto [n, m] : std::vector<std::pair<int, int>>{{1, 2}, {2, 2}, {3, 2}, {4, 2}, {2, 3}, {3, 3}, {2, 4}, {3, 4}, {2, 7}}) {
        auto h = homology(n, m);
        INFO("n=" << n << " m=" << m);
        CHECK(same_betti(h.betti, product_betti(n, m)));
        for (const auto& t : h.torsion) CHECK(t.empty());
        long chi = 0;
        for (std::size_t d = 0; d < h.betti.size(); ++d) chi += (d % 2 == 0 ? 1 : -1) * h.betti[d];
        CHECK(chi == h.euler);
    }
    CHECK(homology(3, 3).betti == std::vector<long>{1, 0, 3, 0, 2, 0});
}

TEST_CASE("five points in the plane" * doctest::timeout(120))
{
    auto h = homology(5, 2);
    CHECK(h.fvector == std::vector<long>{120, 1200, 3600, 4200, 1680});
    CHECK(h.betti == std::vector<long>{1, 10, 35, 50, 24});
}

TEST_CASE("poset oracle")
{
    for (int n = 1; n <= 3; ++n) {
        INFO("n=" << n);
        CHECK(same_betti(poset_oracle_homology(n).betti, homology(n, 2).betti));
    }
    CHECK_THROWS_AS(poset_oracle_homology(5), std::invalid_argument);
}

TEST_CASE("poset oracle n = 4" * doctest::timeout(300))
{
    CHECK(same_betti(poset_oracle_homology(4).betti, homology(4, 2).betti));
}

TEST_CASE("size caps")
{
    CHECK(feasible(5, 2));
    CHECK_FALSE(feasible(6, 2));
    CHECK(feasible(3, 4));
    CHECK_FALSE(feasible(4, 3));
    CHECK(feasible(2, 30));
    CHECK_THROWS_AS(homology(6, 2), std::invalid_argument);
    CHECK_THROWS_AS(homology(0, 2), std::invalid_argument);
}

TEST_CASE("smith normal form")
{
    SparseIntMatrix z(3, 2);
    CHECK(elementary_divisors(z).empty());

    SparseIntMatrix a(2, 2);
    a.add(0, 0, 2);
    a.add(1, 1, 3);
    CHECK(elementary_divisors(a) == std::vector<Integer>{1, 6});

    SparseIntMatrix b(1, 1);
    b.add(0, 0, -4);
    CHECK(elementary_divisors(b) == std::vector<Integer>{4});

    // Boundary of the projective plane's 2-cell: Z/2 torsion.
    SparseIntMatrix rp(1, 1);
    rp.add(0, 0, 2);
    CHECK(elementary_divisors(rp) == std::vector<Integer>{2});

    SparseIntMatrix c(3, 3);
    int v[3][3] = {{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) c.add(i, j, v[i][j]);
    CHECK(elementary_divisors(c) == std::vector<Integer>{2, 6, 12});

    SparseIntMatrix e(2, 2);
    e.add(0, 0, 1);
    e.add(0, 0, -1);
    CHECK(e.is_zero());
    CHECK_THROWS_AS(e.add(2, 0, 1), std::out_of_range);
    CHECK_THROWS_AS(a.multiply(SparseIntMatrix(3, 1)), std::invalid_argument);
}

TEST_CASE("smith rank and determinant on random matrices")
{
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> entry(-3, 3), size(1, 7), sparse(0, 2);
    for (int trial = 0; trial < 200; ++trial) {
        int r = size(rng), c = size(rng);
        SparseIntMatrix m(r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j)
                if (sparse(rng) == 0) m.add(i, j, entry(rng));
        auto d = elementary_divisors(m);
        CHECK(static_cast<long>(d.size()) == dense_rank(m));
        for (std::size_t i = 1; i < d.size(); ++i) CHECK(d[i] % d[i - 1] == 0);
        for (const auto& x : d) CHECK(x > 0);
    }
}
