#ifndef CACTI_INSTANCES_HPP
#define CACTI_INSTANCES_HPP

#include <string>
#include <vector>

#include "cacti/free_term.hpp"
#include "cacti/operad.hpp"

namespace cacti::operad {

// Ass(n) is a point; the element only remembers its arity.
struct AssocElement {
    int arity = 1;
    friend bool operator==(const AssocElement&, const AssocElement&) = default;
};

OperadInstance<AssocElement> assoc_instance();
Domain<AssocElement> assoc_domain();

// Finite monoid on {0..n-1} given by its multiplication table.
class FiniteMonoid {
public:
    // Throws std::invalid_argument unless the table is square, closed,
    // associative and `unit` is a two-sided unit.
    FiniteMonoid(std::vector<std::vector<int>> table, int unit, std::vector<std::string> names = {});

    static FiniteMonoid cyclic_group(int n);
    static FiniteMonoid symmetric_group_3();
    // {0, 1} under multiplication: 1 is the unit, 0 has no inverse.
    static FiniteMonoid two_element_monoid();

    int size() const { return static_cast<int>(table_.size()); }
    int unit() const { return unit_; }
    int multiply(int a, int b) const { return table_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
    bool is_group() const;
    // Throws std::domain_error if a is not invertible.
    int inverse(int a) const;
    std::string name(int a) const;

private:
    std::vector<std::vector<int>> table_;
    int unit_;
    std::vector<std::string> names_;
};

// Elements of M(n) = M^n.
using MonoidTuple = std::vector<int>;

// The operad M of a monoid with m_2 = (1,1), u = (), right permutation action
// and, when `cyclic`, t_n(g_1..g_n) = (g_1^-1 g_2, ..., g_1^-1 g_n, g_1^-1).
// Requesting `cyclic` for a non-group throws std::invalid_argument.
OperadInstance<MonoidTuple> monoid_instance(const FiniteMonoid& m, bool cyclic);
Domain<MonoidTuple> monoid_domain(const FiniteMonoid& m);

// Elements of lX(n) = X^{n+1}, X = {0..|X|-1}.
using CorrTuple = std::vector<int>;

// Partial cyclic operad lX: x o_i y defined iff x_i = y_0; basepoints are the
// constant tuples; t_n(x_0..x_n) = (x_1..x_n, x_0).
OperadInstance<CorrTuple> correspondence_instance(int x_size);
Domain<CorrTuple> correspondence_domain(int x_size);

Domain<FreeTerm> free_domain(int max_vertices = 4);

}  // namespace cacti::operad

#endif
