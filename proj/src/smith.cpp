#include "cacti/smith.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace cacti::homology {

SparseIntMatrix::SparseIntMatrix(int rows, int cols) : rows_(rows), cols_(cols), columns_(static_cast<std::size_t>(cols))
{
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix size");
}

void SparseIntMatrix::add(int r, int c, const Integer& v)
{
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw std::out_of_range("matrix index out of range");
    auto& col = columns_[static_cast<std::size_t>(c)];
    auto [it, fresh] = col.emplace(r, v);
    if (!fresh) it->second += v;
    if (it->second == 0) col.erase(it);
}

Integer SparseIntMatrix::at(int r, int c) const
{
    const auto& col = columns_[static_cast<std::size_t>(c)];
    auto it = col.find(r);
    return it == col.end() ? Integer(0) : it->second;
}

std::size_t SparseIntMatrix::nonzeros() const
{
    std::size_t n = 0;
    for (const auto& c : columns_) n += c.size();
    return n;
}

SparseIntMatrix SparseIntMatrix::multiply(const SparseIntMatrix& other) const
{
    if (cols_ != other.rows_) throw std::invalid_argument("matrix product size mismatch");
    SparseIntMatrix out(rows_, other.cols_);
    for (int c = 0; c < other.cols_; ++c)
        for (const auto& [k, v] : other.column(c))
            for (const auto& [r, w] : column(k)) out.add(r, c, v * w);
    return out;
}

namespace {

using Dense = std::vector<std::vector<Integer>>;

void dense_snf(Dense a, std::vector<Integer>& out)
{
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    std::size_t t = 0;
    while (t < rows && t < cols) {
        // Smallest nonzero entry of the trailing block.
        std::size_t pr = rows, pc = cols;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j)
                if (a[i][j] != 0 && (pr == rows || abs(a[i][j]) < abs(a[pr][pc]))) pr = i, pc = j;
        if (pr == rows) break;
        std::swap(a[t], a[pr]);
        for (auto& row : a) std::swap(row[t], row[pc]);
        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a[i][t] == 0) continue;
                Integer q = a[i][t] / a[t][t];
                for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
                if (a[i][t] != 0) {
                    std::swap(a[t], a[i]);
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a[t][j] == 0) continue;
                Integer q = a[t][j] / a[t][t];
                for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
                if (a[t][j] != 0) {
                    for (auto& row : a) std::swap(row[t], row[j]);
                    clean = false;
                }
            }
            if (!clean) continue;
            // Divisibility: fold an offending row into row t.
            for (std::size_t i = t + 1; i < rows && clean; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (a[i][j] % a[t][t] != 0) {
                        for (std::size_t k = t; k < cols; ++k) a[t][k] += a[i][k];
                        clean = false;
                        break;
                    }
        }
        out.push_back(abs(a[t][t]));
        ++t;
    }
}

}  // namespace

std::vector<Integer> elementary_divisors(const SparseIntMatrix& m)
{
    std::vector<std::map<int, Integer>> cols;
    for (int c = 0; c < m.cols(); ++c) cols.push_back(m.column(c));
    std::vector<std::set<int>> row_cols(static_cast<std::size_t>(m.rows()));
    for (int c = 0; c < m.cols(); ++c)
        for (const auto& [r, v] : cols[static_cast<std::size_t>(c)]) row_cols[static_cast<std::size_t>(r)].insert(c);

    std::vector<Integer> divisors;
    std::vector<bool> col_alive(cols.size(), true);
    // Unit pivots first; each one is a unimodular elimination.
    for (bool progress = true; progress;) {
        progress = false;
        for (std::size_t c = 0; c < cols.size(); ++c) {
            if (!col_alive[c] || cols[c].empty()) continue;
            int pr = -1;
            for (const auto& [r, v] : cols[c])
                if ((v == 1 || v == -1) &&
                    (pr < 0 || row_cols[static_cast<std::size_t>(r)].size() < row_cols[static_cast<std::size_t>(pr)].size()))
                    pr = r;
            if (pr < 0) continue;
            const Integer pv = cols[c].at(pr);
            std::vector<int> others(row_cols[static_cast<std::size_t>(pr)].begin(), row_cols[static_cast<std::size_t>(pr)].end());
            for (int c2 : others) {
                if (c2 == static_cast<int>(c)) continue;
                auto& target = cols[static_cast<std::size_t>(c2)];
                const Integer factor = target.at(pr) * pv;
                for (const auto& [r, v] : cols[c]) {
                    auto [it, fresh] = target.emplace(r, 0);
                    it->second -= factor * v;
                    if (it->second == 0) {
                        target.erase(it);
                        row_cols[static_cast<std::size_t>(r)].erase(c2);
                    } else if (fresh) {
                        row_cols[static_cast<std::size_t>(r)].insert(c2);
                    }
                }
            }
            for (const auto& [r, v] : cols[c]) row_cols[static_cast<std::size_t>(r)].erase(static_cast<int>(c));
            // Row pr now meets only column c; drop both.
            cols[c].clear();
            col_alive[c] = false;
            divisors.push_back(1);
            progress = true;
        }
    }

    std::vector<int> rows_left;
    std::vector<std::size_t> cols_left;
    for (std::size_t c = 0; c < cols.size(); ++c)
        if (col_alive[c] && !cols[c].empty()) cols_left.push_back(c);
    {
        std::set<int> rs;
        for (auto c : cols_left)
            for (const auto& [r, v] : cols[c]) rs.insert(r);
        rows_left.assign(rs.begin(), rs.end());
    }
    if (!cols_left.empty()) {
        Dense a(rows_left.size(), std::vector<Integer>(cols_left.size(), 0));
        for (std::size_t j = 0; j < cols_left.size(); ++j)
            for (const auto& [r, v] : cols[cols_left[j]]) {
                auto i = static_cast<std::size_t>(std::lower_bound(rows_left.begin(), rows_left.end(), r) - rows_left.begin());
                a[i][j] = v;
            }
        dense_snf(std::move(a), divisors);
    }
    std::sort(divisors.begin(), divisors.end());
    return divisors;
}

}  // namespace cacti::homology
