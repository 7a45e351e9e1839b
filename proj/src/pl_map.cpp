#include "cacti/pl_map.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace cacti::geom {

namespace {

bool collinear(const Breakpoint& a, const Breakpoint& b, const Breakpoint& c)
{
    return (b.v - a.v) * (c.s - b.s) == (c.v - b.v) * (b.s - a.s);
}

void check_domain(const std::vector<Breakpoint>& pts)
{
    if (pts.size() < 2) throw std::invalid_argument("PL map needs at least two breakpoints");
    if (pts.front().s != 0 || pts.back().s != 1)
        throw std::invalid_argument("PL map breakpoints must start at s=0 and end at s=1");
    for (std::size_t i = 1; i < pts.size(); ++i) {
        if (!(pts[i - 1].s < pts[i].s))
            throw std::invalid_argument("PL map breakpoints must be strictly increasing in s");
        if (pts[i].v < pts[i - 1].v)
            throw std::invalid_argument("PL map values must be weakly increasing");
    }
}

// Linear interpolation on a sorted breakpoint list; s must lie in [s_0, s_N].
Rat interpolate(const std::vector<Breakpoint>& pts, const Rat& s)
{
    auto it = std::lower_bound(pts.begin(), pts.end(), s,
                               [](const Breakpoint& b, const Rat& x) { return b.s < x; });
    if (it == pts.end()) throw std::out_of_range("PL map evaluated outside [0,1]");
    if (it->s == s) return it->v;
    if (it == pts.begin()) throw std::out_of_range("PL map evaluated outside [0,1]");
    const Breakpoint& b = *it;
    const Breakpoint& a = *(it - 1);
    return a.v + (b.v - a.v) * (s - a.s) / (b.s - a.s);
}

// Breakpoints of outer(inner(s)). `outer_knots` are the s-coordinates of the
// outer map's breakpoints; when `periodic` the outer map is the periodic lift
// and every integer translate of a knot counts.
std::vector<Breakpoint> compose_lifts(const std::function<Rat(const Rat&)>& outer,
                                      const std::vector<Breakpoint>& outer_pts, bool periodic,
                                      const std::vector<Breakpoint>& inner)
{
    std::vector<Rat> cuts;
    cuts.reserve(inner.size() * 2);
    for (const auto& p : inner) cuts.push_back(p.s);
    for (std::size_t i = 1; i < inner.size(); ++i) {
        const Breakpoint& a = inner[i - 1];
        const Breakpoint& b = inner[i];
        if (a.v == b.v) continue;
        Integer k_lo = periodic ? floor(a.v) : Integer(0);
        Integer k_hi = periodic ? floor(b.v) : Integer(0);
        for (Integer k = k_lo; k <= k_hi; ++k) {
            for (const auto& knot : outer_pts) {
                Rat w = Rat(k) + knot.s;
                if (a.v < w && w < b.v) cuts.push_back(a.s + (w - a.v) * (b.s - a.s) / (b.v - a.v));
            }
        }
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    std::vector<Breakpoint> out;
    out.reserve(cuts.size());
    for (const auto& s : cuts) out.push_back({s, outer(interpolate(inner, s))});
    return canonical_breakpoints(std::move(out));
}

}  // namespace

std::vector<Breakpoint> canonical_breakpoints(std::vector<Breakpoint> pts)
{
    if (pts.size() < 3) return pts;
    std::vector<Breakpoint> out;
    out.reserve(pts.size());
    out.push_back(pts[0]);
    for (std::size_t i = 1; i + 1 < pts.size(); ++i) {
        if (collinear(out.back(), pts[i], pts[i + 1])) continue;
        out.push_back(pts[i]);
    }
    out.push_back(pts.back());
    return out;
}

PLMonotoneMap::PLMonotoneMap() : pts_{{0, 0}, {1, 1}} {}

PLMonotoneMap::PLMonotoneMap(std::vector<Breakpoint> pts)
{
    check_domain(pts);
    if (pts.front().v != 0 || pts.back().v != 1)
        throw std::invalid_argument("interval reparametrization must fix 0 and 1");
    pts_ = canonical_breakpoints(std::move(pts));
}

Rat PLMonotoneMap::operator()(const Rat& s) const
{
    return interpolate(pts_, s);
}

PLCircleMap::PLCircleMap() : pts_{{0, 0}, {1, 1}} {}

PLCircleMap::PLCircleMap(std::vector<Breakpoint> lift)
{
    check_domain(lift);
    if (lift.back().v != lift.front().v + 1)
        throw std::invalid_argument("circle map lift must have degree 1");
    Rat shift = Rat(floor(lift.front().v));
    if (shift != 0)
        for (auto& p : lift) p.v -= shift;
    pts_ = canonical_breakpoints(std::move(lift));
}

PLCircleMap PLCircleMap::rotation(const Rat& shift)
{
    return PLCircleMap({{0, shift}, {1, shift + 1}});
}

PLCircleMap PLCircleMap::from_interval(const PLMonotoneMap& f)
{
    return PLCircleMap(f.breakpoints());
}

Rat PLCircleMap::lift(const Rat& s) const
{
    return interpolate(pts_, s);
}

Rat PLCircleMap::lift_extended(const Rat& x) const
{
    Integer k = floor(x);
    Rat r = x - Rat(k);
    return interpolate(pts_, r) + Rat(k);
}

PLCircleMap PLCircleMap::shifted(const Rat& by) const
{
    auto pts = pts_;
    for (auto& p : pts) p.v += by;
    return PLCircleMap(std::move(pts));
}

PLMonotoneMap compose(const PLMonotoneMap& f, const PLMonotoneMap& g)
{
    auto pts = compose_lifts([&](const Rat& x) { return f(x); }, f.breakpoints(), false, g.breakpoints());
    return PLMonotoneMap(std::move(pts));
}

PLCircleMap compose(const PLCircleMap& f, const PLCircleMap& g)
{
    auto pts = compose_lifts([&](const Rat& x) { return f.lift_extended(x); }, f.breakpoints(), true,
                             g.breakpoints());
    return PLCircleMap(std::move(pts));
}

PLCircleMap compose(const PLCircleMap& f, const PLMonotoneMap& g)
{
    auto pts = compose_lifts([&](const Rat& x) { return f.lift_extended(x); }, f.breakpoints(), true,
                             g.breakpoints());
    return PLCircleMap(std::move(pts));
}

PLMap compose_pl(const PLMap& f, const PLMap& g)
{
    if (std::holds_alternative<PLMonotoneMap>(f)) {
        if (!std::holds_alternative<PLMonotoneMap>(g))
            throw std::invalid_argument("cannot compose an interval map after a circle map");
        return compose(std::get<PLMonotoneMap>(f), std::get<PLMonotoneMap>(g));
    }
    const auto& outer = std::get<PLCircleMap>(f);
    if (std::holds_alternative<PLMonotoneMap>(g)) return compose(outer, std::get<PLMonotoneMap>(g));
    return compose(outer, std::get<PLCircleMap>(g));
}

}  // namespace cacti::geom
