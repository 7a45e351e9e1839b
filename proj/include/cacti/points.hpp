#ifndef CACTI_POINTS_HPP
#define CACTI_POINTS_HPP

#include <string>
#include <utility>
#include <vector>

#include "cacti/pl_map.hpp"
#include "cacti/rational.hpp"

namespace cacti::geom {

// 0 <= x_1 <= ... <= x_k <= 1.
class DeltaPoint {
public:
    DeltaPoint() = default;
    // Throws std::invalid_argument if the coordinates are not weakly
    // increasing inside [0,1].
    explicit DeltaPoint(std::vector<Rat> coords);

    int degree() const { return static_cast<int>(coords_.size()); }
    const std::vector<Rat>& coords() const { return coords_; }
    const Rat& operator[](int i) const { return coords_[static_cast<std::size_t>(i)]; }

    // No coordinate equals 0 or 1 and no two coincide.
    bool is_interior() const;

    friend bool operator==(const DeltaPoint&, const DeltaPoint&) = default;
    friend auto operator<=>(const DeltaPoint& a, const DeltaPoint& b) { return compare(a, b); }

private:
    static std::strong_ordering compare(const DeltaPoint& a, const DeltaPoint& b);
    std::vector<Rat> coords_;
};

// Cyclically ordered points (x_0, ..., x_k) of S^1. Stored as the pair
// (offsets, start) of Lambda^k = Delta^k x S^1: x_0 = start and
// x_i = start + offsets_i, with offsets weakly increasing in [0,1]. This keeps
// the coincident configurations (x_i = x_0 reached before or after a full
// turn) distinct, as they are in Delta^k x S^1.
class LambdaPoint {
public:
    LambdaPoint() = default;
    LambdaPoint(DeltaPoint offsets, CirclePoint start) : offsets_(std::move(offsets)), start_(start) {}

    // From circle coordinates. Offsets are (x_i - x_0) mod 1, except that a
    // coordinate equal to x_0 that follows a strictly positive offset is read
    // as a full turn (offset 1). Throws std::invalid_argument if the points are
    // not cyclically ordered.
    static LambdaPoint from_coordinates(const std::vector<CirclePoint>& coords);

    int degree() const { return offsets_.degree(); }
    const DeltaPoint& offsets() const { return offsets_; }
    const CirclePoint& start() const { return start_; }
    // x_0, ..., x_k as points of S^1.
    std::vector<CirclePoint> coordinates() const;

    bool is_interior() const { return offsets_.is_interior(); }

    friend bool operator==(const LambdaPoint&, const LambdaPoint&) = default;

private:
    DeltaPoint offsets_;
    CirclePoint start_;
};

// Lambda^k ~= Delta^k x S^1 and its inverse.
std::pair<DeltaPoint, CirclePoint> lambda_split(const LambdaPoint& p);
LambdaPoint lambda_join(const DeltaPoint& d, const CirclePoint& z);

DeltaPoint apply_reparam(const PLMonotoneMap& f, const DeltaPoint& p);

// Cosimplicial structure of Delta^*: d^i for 0 <= i <= k+1, s^i for
// 0 <= i <= k-1 on a degree-k point.
DeltaPoint coface(const DeltaPoint& p, int i);
DeltaPoint codegeneracy(const DeltaPoint& p, int i);

// Cocyclic structure of Lambda^*: d^i doubles x_i (0 <= i <= k), d^{k+1}
// appends x_0 after a full turn, s^i drops x_{i+1}, t shifts x_0 to the end.
LambdaPoint coface(const LambdaPoint& p, int i);
LambdaPoint codegeneracy(const LambdaPoint& p, int i);
LambdaPoint cyclic_shift(const LambdaPoint& p);

std::string to_string(const DeltaPoint& p);
std::string to_string(const LambdaPoint& p);

}  // namespace cacti::geom

#endif
