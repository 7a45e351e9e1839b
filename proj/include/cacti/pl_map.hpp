#ifndef CACTI_PL_MAP_HPP
#define CACTI_PL_MAP_HPP

#include <variant>
#include <vector>

#include "cacti/rational.hpp"

namespace cacti::geom {

struct Breakpoint {
    Rat s;
    Rat v;
    friend bool operator==(const Breakpoint&, const Breakpoint&) = default;
};

// Drops middle points of collinear triples. Input must be sorted by s.
std::vector<Breakpoint> canonical_breakpoints(std::vector<Breakpoint> pts);

// Weakly increasing piecewise-linear map [0,1] -> [0,1] fixing 0 and 1,
// stored in minimal form so that equal functions compare equal.
class PLMonotoneMap {
public:
    PLMonotoneMap();  // identity

    // Throws std::invalid_argument unless s runs strictly from 0 to 1 and v
    // weakly from 0 to 1.
    explicit PLMonotoneMap(std::vector<Breakpoint> pts);

    static PLMonotoneMap identity() { return PLMonotoneMap(); }

    Rat operator()(const Rat& s) const;
    const std::vector<Breakpoint>& breakpoints() const { return pts_; }

    friend bool operator==(const PLMonotoneMap&, const PLMonotoneMap&) = default;

private:
    std::vector<Breakpoint> pts_;
};

// Weakly monotone degree-1 self-map of S^1, given by a lift L: [0,1] -> R with
// L(1) = L(0) + 1. The lift is normalized so that L(0) lies in [0,1).
class PLCircleMap {
public:
    PLCircleMap();  // identity

    // Throws std::invalid_argument unless s runs strictly from 0 to 1, v is
    // weakly increasing and v.back() == v.front() + 1.
    explicit PLCircleMap(std::vector<Breakpoint> lift);

    static PLCircleMap identity() { return PLCircleMap(); }
    static PLCircleMap rotation(const Rat& shift);
    // The circle map induced by a map of the interval fixing the boundary.
    static PLCircleMap from_interval(const PLMonotoneMap& f);

    // The lift at s in [0,1].
    Rat lift(const Rat& s) const;
    // Periodic extension of the lift to all of R: L(x + 1) = L(x) + 1.
    Rat lift_extended(const Rat& x) const;
    CirclePoint operator()(const CirclePoint& p) const { return CirclePoint(lift(p.value())); }
    CirclePoint operator()(const Rat& s) const { return CirclePoint(lift(s)); }

    Rat basepoint_shift() const { return pts_.front().v; }
    // Total increase of the lift over [a, b], 0 <= a <= b <= 1.
    Rat variation(const Rat& a, const Rat& b) const { return lift(b) - lift(a); }

    PLCircleMap shifted(const Rat& by) const;

    const std::vector<Breakpoint>& breakpoints() const { return pts_; }

    friend bool operator==(const PLCircleMap&, const PLCircleMap&) = default;

private:
    std::vector<Breakpoint> pts_;
};

PLMonotoneMap compose(const PLMonotoneMap& f, const PLMonotoneMap& g);
PLCircleMap compose(const PLCircleMap& f, const PLCircleMap& g);
PLCircleMap compose(const PLCircleMap& f, const PLMonotoneMap& g);

// Dynamically typed entry point; interval-after-circle is a kind mismatch and
// throws std::invalid_argument.
using PLMap = std::variant<PLMonotoneMap, PLCircleMap>;
PLMap compose_pl(const PLMap& f, const PLMap& g);

}  // namespace cacti::geom

#endif
