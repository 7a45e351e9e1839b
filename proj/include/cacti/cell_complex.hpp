#ifndef CACTI_CELL_COMPLEX_HPP
#define CACTI_CELL_COMPLEX_HPP

#include <string>
#include <vector>

#include "cacti/smith.hpp"

namespace cacti::homology {

// A cell of F_m(n) is its label sequence; dimension = length - n.
using Cell = std::vector<int>;

int cell_dimension(const Cell& x, int n);
bool is_cell(const Cell& x, int n, int m);
std::string to_string(const Cell& x);

// All cells grouped by dimension, each group in lexicographic order.
std::vector<std::vector<Cell>> enumerate_cells(int n, int m);

struct Face {
    Cell cell;
    int sign;
};

// Cellular boundary. Faces deleting an entry between two equal labels are
// collapsed and contribute nothing. Throws std::invalid_argument for an
// invalid cell.
std::vector<Face> boundary(const Cell& x, int n, int m);

struct ChainComplex {
    int n = 0, m = 0;
    std::vector<std::vector<Cell>> cells;        // by dimension
    std::vector<SparseIntMatrix> differentials;  // d[k]: C_k -> C_{k-1}; d[0] is 0 x |C_0|
};

ChainComplex build_chain_complex(int n, int m);

// Throws std::logic_error naming the first nonzero entry of d o d.
void check_boundary_squared(const ChainComplex& c);

struct Homology {
    std::vector<long> fvector;
    std::vector<long> betti;
    std::vector<std::vector<Integer>> torsion;  // non-unit divisors per dimension
    long euler = 0;
};

Homology homology(const ChainComplex& c);

// Documented caps: n <= 5 at m = 2, n <= 3 at m <= 4, any m at n <= 2.
bool feasible(int n, int m);
// Throws std::invalid_argument when infeasible and std::logic_error if
// d o d != 0.
Homology homology(int n, int m);

// Homology of the order complex of the face poset (m = 2, n <= 4).
Homology poset_oracle_homology(int n);

// Equal up to trailing zeros.
bool same_betti(const std::vector<long>& a, const std::vector<long>& b);

}  // namespace cacti::homology

#endif
