#include "cacti/cell_complex.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "cacti/partition.hpp"

namespace cacti::homology {

int cell_dimension(const Cell& x, int n)
{
    return static_cast<int>(x.size()) - n;
}

bool is_cell(const Cell& x, int n, int m)
{
    return n >= 1 && kernel::validate_labels(x, n, m).valid;
}

std::string to_string(const Cell& x)
{
    std::string s = "(";
    for (std::size_t i = 0; i < x.size(); ++i) s += (i ? "," : "") + std::to_string(x[i]);
    return s + ")";
}

std::vector<std::vector<Cell>> enumerate_cells(int n, int m)
{
    if (n < 1 || m < 1) throw std::invalid_argument("enumerate_cells needs n >= 1 and m >= 1");
    std::vector<std::vector<Cell>> out;
    Cell seq;
    std::vector<int> count(static_cast<std::size_t>(n) + 1, 0);
    int distinct = 0;
    // Appending s keeps every alternation involving s below m + 2.
    auto admissible = [&](int s) {
        Cell next = seq;
        next.push_back(s);
        for (int a = 1; a <= n; ++a)
            if (a != s && kernel::longest_alternation(next, a, s) >= m + 2) return false;
        return true;
    };
    std::function<void()> dfs = [&] {
        if (distinct == n) {
            auto d = static_cast<std::size_t>(cell_dimension(seq, n));
            if (out.size() <= d) out.resize(d + 1);
            out[d].push_back(seq);
        }
        for (int s = 1; s <= n; ++s) {
            if (!seq.empty() && seq.back() == s) continue;
            if (!seq.empty() && !admissible(s)) continue;
            seq.push_back(s);
            if (count[static_cast<std::size_t>(s)]++ == 0) ++distinct;
            dfs();
            if (--count[static_cast<std::size_t>(s)] == 0) --distinct;
            seq.pop_back();
        }
    };
    dfs();
    for (auto& group : out) std::sort(group.begin(), group.end());
    return out;
}

std::vector<Face> boundary(const Cell& x, int n, int m)
{
    if (!is_cell(x, n, m)) throw std::invalid_argument("not a cell of F_" + std::to_string(m) + "(" + std::to_string(n) + "): " + to_string(x));
    const std::size_t k = x.size();
    std::vector<int> mult(static_cast<std::size_t>(n) + 1, 0);
    for (int a : x) ++mult[static_cast<std::size_t>(a)];
    std::map<Cell, int> acc;
    std::vector<int> rank(static_cast<std::size_t>(n) + 1, 0);
    for (std::size_t i = 0; i < k; ++i) {
        const int a = x[i];
        const int r = ++rank[static_cast<std::size_t>(a)];
        if (mult[static_cast<std::size_t>(a)] < 2) continue;
        if (i > 0 && i + 1 < k && x[i - 1] == x[i + 1]) continue;
        int e = r - 1;
        for (int j = 1; j < a; ++j) e += mult[static_cast<std::size_t>(j)] - 1;
        Cell y = x;
        y.erase(y.begin() + static_cast<std::ptrdiff_t>(i));
        acc[y] += (e % 2 == 0) ? 1 : -1;
    }
    std::vector<Face> out;
    for (auto& [c, s] : acc)
        if (s != 0) out.push_back({c, s});
    return out;
}

ChainComplex build_chain_complex(int n, int m)
{
    ChainComplex c;
    c.n = n;
    c.m = m;
    c.cells = enumerate_cells(n, m);
    for (std::size_t d = 0; d < c.cells.size(); ++d) {
        const int cols = static_cast<int>(c.cells[d].size());
        if (d == 0) {
            c.differentials.emplace_back(0, cols);
            continue;
        }
        const auto& lower = c.cells[d - 1];
        SparseIntMatrix mat(static_cast<int>(lower.size()), cols);
        for (int j = 0; j < cols; ++j)
            for (const auto& f : boundary(c.cells[d][static_cast<std::size_t>(j)], n, m)) {
                auto it = std::lower_bound(lower.begin(), lower.end(), f.cell);
                if (it == lower.end() || *it != f.cell)
                    throw std::logic_error("face " + to_string(f.cell) + " is not a cell");
                mat.add(static_cast<int>(it - lower.begin()), j, f.sign);
            }
        c.differentials.push_back(std::move(mat));
    }
    return c;
}

void check_boundary_squared(const ChainComplex& c)
{
    for (std::size_t d = 2; d < c.differentials.size(); ++d) {
        auto p = c.differentials[d - 1].multiply(c.differentials[d]);
        for (int j = 0; j < p.cols(); ++j)
            if (!p.column(j).empty()) {
                const auto& [r, v] = *p.column(j).begin();
                throw std::logic_error("boundary of boundary of " + to_string(c.cells[d][static_cast<std::size_t>(j)]) +
                                       " has coefficient " + v.get_str() + " on " +
                                       to_string(c.cells[d - 2][static_cast<std::size_t>(r)]));
            }
    }
}

namespace {

Homology homology_from(const std::vector<long>& fvector, const std::vector<SparseIntMatrix>& differentials)
{
    Homology h;
    h.fvector = fvector;
    const std::size_t top = fvector.size();
    std::vector<std::vector<Integer>> divisors(top + 1);
    for (std::size_t d = 1; d < top; ++d) divisors[d] = elementary_divisors(differentials[d]);
    for (std::size_t d = 0; d < top; ++d) {
        long rank_out = static_cast<long>(divisors[d].size());
        long rank_in = static_cast<long>(divisors[d + 1].size());
        h.betti.push_back(fvector[d] - rank_out - rank_in);
        std::vector<Integer> tors;
        for (const auto& q : divisors[d + 1])
            if (q != 1) tors.push_back(q);
        h.torsion.push_back(std::move(tors));
        h.euler += (d % 2 == 0 ? 1 : -1) * fvector[d];
    }
    return h;
}

}  // namespace

Homology homology(const ChainComplex& c)
{
    std::vector<long> f;
    for (const auto& g : c.cells) f.push_back(static_cast<long>(g.size()));
    return homology_from(f, c.differentials);
}

bool feasible(int n, int m)
{
    if (n < 1 || m < 1) return false;
    if (n <= 2) return m <= 64;
    if (m == 2) return n <= 5;
    return n == 3 && m <= 4;
}

Homology homology(int n, int m)
{
    if (!feasible(n, m))
        throw std::invalid_argument("homology of F_" + std::to_string(m) + "(" + std::to_string(n) + ") exceeds the size cap");
    auto c = build_chain_complex(n, m);
    check_boundary_squared(c);
    return homology(c);
}

Homology poset_oracle_homology(int n)
{
    if (n < 1 || n > 4) throw std::invalid_argument("poset oracle is limited to 1 <= n <= 4");
    const int m = 2;
    auto groups = enumerate_cells(n, m);
    std::vector<Cell> all;
    std::vector<int> dim;
    for (std::size_t d = 0; d < groups.size(); ++d)
        for (const auto& x : groups[d]) {
            all.push_back(x);
            dim.push_back(static_cast<int>(d));
        }
    std::map<Cell, int> id;
    for (std::size_t i = 0; i < all.size(); ++i) id[all[i]] = static_cast<int>(i);
    // Strict down-sets, built in order of dimension.
    std::vector<std::vector<int>> below(all.size());
    for (std::size_t i = 0; i < all.size(); ++i) {
        std::vector<int> acc;
        // Codimension-one faces are the single-entry deletions that stay cells.
        for (std::size_t p = 0; p < all[i].size(); ++p) {
            Cell y = all[i];
            y.erase(y.begin() + static_cast<std::ptrdiff_t>(p));
            auto it = id.find(y);
            if (it == id.end()) continue;
            acc.push_back(it->second);
            const auto& more = below[static_cast<std::size_t>(it->second)];
            acc.insert(acc.end(), more.begin(), more.end());
        }
        std::sort(acc.begin(), acc.end());
        acc.erase(std::unique(acc.begin(), acc.end()), acc.end());
        below[i] = std::move(acc);
    }
    // Chains listed from the top element down.
    std::vector<std::map<std::vector<int>, int>> simplices;
    std::vector<int> chain;
    std::function<void(int)> extend = [&](int top) {
        chain.push_back(top);
        auto d = chain.size() - 1;
        if (simplices.size() <= d) simplices.resize(d + 1);
        auto& group = simplices[d];
        group.emplace(chain, static_cast<int>(group.size()));
        for (int b : below[static_cast<std::size_t>(top)]) extend(b);
        chain.pop_back();
    };
    for (std::size_t i = 0; i < all.size(); ++i) extend(static_cast<int>(i));

    std::vector<long> f;
    std::vector<SparseIntMatrix> diffs;
    for (std::size_t d = 0; d < simplices.size(); ++d) {
        f.push_back(static_cast<long>(simplices[d].size()));
        if (d == 0) {
            diffs.emplace_back(0, static_cast<int>(simplices[0].size()));
            continue;
        }
        SparseIntMatrix mat(static_cast<int>(simplices[d - 1].size()), static_cast<int>(simplices[d].size()));
        for (const auto& [s, j] : simplices[d])
            for (std::size_t p = 0; p < s.size(); ++p) {
                auto face = s;
                face.erase(face.begin() + static_cast<std::ptrdiff_t>(p));
                mat.add(simplices[d - 1].at(face), j, p % 2 == 0 ? 1 : -1);
            }
        diffs.push_back(std::move(mat));
    }
    return homology_from(f, diffs);
}

bool same_betti(const std::vector<long>& a, const std::vector<long>& b)
{
    auto trim = [](std::vector<long> v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
        return v;
    };
    return trim(a) == trim(b);
}

}  // namespace cacti::homology
