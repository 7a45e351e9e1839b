#ifndef CACTI_SMITH_HPP
#define CACTI_SMITH_HPP

#include <map>
#include <vector>

#include "cacti/rational.hpp"

namespace cacti::homology {

using geom::Integer;

// Integer matrix stored by columns.
class SparseIntMatrix {
public:
    SparseIntMatrix() = default;
    SparseIntMatrix(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    // Adds v to entry (r, c); zero results are removed.
    void add(int r, int c, const Integer& v);
    Integer at(int r, int c) const;
    const std::map<int, Integer>& column(int c) const { return columns_[static_cast<std::size_t>(c)]; }
    std::size_t nonzeros() const;

    // this * other.
    SparseIntMatrix multiply(const SparseIntMatrix& other) const;
    bool is_zero() const { return nonzeros() == 0; }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<std::map<int, Integer>> columns_;
};

// Nonzero diagonal entries of the Smith normal form, positive and in
// divisibility order; their count is the rank.
std::vector<Integer> elementary_divisors(const SparseIntMatrix& m);

}  // namespace cacti::homology

#endif
