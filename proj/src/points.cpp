#include "cacti/points.hpp"

#include <sstream>
#include <stdexcept>

namespace cacti::geom {

DeltaPoint::DeltaPoint(std::vector<Rat> coords) : coords_(std::move(coords))
{
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (coords_[i] < 0 || coords_[i] > 1)
            throw std::invalid_argument("simplex coordinate outside [0,1]");
        if (i > 0 && coords_[i] < coords_[i - 1])
            throw std::invalid_argument("simplex coordinates must be weakly increasing");
    }
}

bool DeltaPoint::is_interior() const
{
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (coords_[i] == 0 || coords_[i] == 1) return false;
        if (i > 0 && coords_[i] == coords_[i - 1]) return false;
    }
    return true;
}

std::strong_ordering DeltaPoint::compare(const DeltaPoint& a, const DeltaPoint& b)
{
    const std::size_t n = std::min(a.coords_.size(), b.coords_.size());
    for (std::size_t i = 0; i < n; ++i) {
        int c = cmp(a.coords_[i], b.coords_[i]);
        if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return a.coords_.size() <=> b.coords_.size();
}

LambdaPoint LambdaPoint::from_coordinates(const std::vector<CirclePoint>& coords)
{
    if (coords.empty()) throw std::invalid_argument("a cyclic point needs at least x_0");
    const CirclePoint start = coords.front();
    std::vector<Rat> offsets;
    offsets.reserve(coords.size() - 1);
    for (std::size_t i = 1; i < coords.size(); ++i) {
        Rat d = coords[i].distance_from(start);
        if (d == 0 && !offsets.empty() && offsets.back() > 0) d = 1;
        if (!offsets.empty() && d < offsets.back())
            throw std::invalid_argument("points are not cyclically ordered");
        offsets.push_back(d);
    }
    return LambdaPoint(DeltaPoint(std::move(offsets)), start);
}

std::vector<CirclePoint> LambdaPoint::coordinates() const
{
    std::vector<CirclePoint> out;
    out.reserve(static_cast<std::size_t>(degree()) + 1);
    out.push_back(start_);
    for (const auto& d : offsets_.coords()) out.push_back(start_ + d);
    return out;
}

std::pair<DeltaPoint, CirclePoint> lambda_split(const LambdaPoint& p)
{
    return {p.offsets(), p.start()};
}

LambdaPoint lambda_join(const DeltaPoint& d, const CirclePoint& z)
{
    return LambdaPoint(d, z);
}

DeltaPoint apply_reparam(const PLMonotoneMap& f, const DeltaPoint& p)
{
    std::vector<Rat> out;
    out.reserve(p.coords().size());
    for (const auto& x : p.coords()) out.push_back(f(x));
    return DeltaPoint(std::move(out));
}

DeltaPoint coface(const DeltaPoint& p, int i)
{
    const int k = p.degree();
    if (i < 0 || i > k + 1) throw std::out_of_range("coface index out of range");
    std::vector<Rat> c = p.coords();
    if (i == 0)
        c.insert(c.begin(), Rat(0));
    else if (i == k + 1)
        c.push_back(Rat(1));
    else
        c.insert(c.begin() + i, c[static_cast<std::size_t>(i - 1)]);
    return DeltaPoint(std::move(c));
}

DeltaPoint codegeneracy(const DeltaPoint& p, int i)
{
    const int k = p.degree();
    if (i < 0 || i > k - 1) throw std::out_of_range("codegeneracy index out of range");
    std::vector<Rat> c = p.coords();
    c.erase(c.begin() + i);
    return DeltaPoint(std::move(c));
}

LambdaPoint coface(const LambdaPoint& p, int i)
{
    return LambdaPoint(coface(p.offsets(), i), p.start());
}

LambdaPoint codegeneracy(const LambdaPoint& p, int i)
{
    return LambdaPoint(codegeneracy(p.offsets(), i), p.start());
}

LambdaPoint cyclic_shift(const LambdaPoint& p)
{
    const auto& d = p.offsets().coords();
    if (d.empty()) return p;
    const Rat first = d.front();
    std::vector<Rat> out;
    out.reserve(d.size());
    for (std::size_t i = 1; i < d.size(); ++i) out.push_back(d[i] - first);
    out.push_back(1 - first);
    return LambdaPoint(DeltaPoint(std::move(out)), p.start() + first);
}

std::string to_string(const DeltaPoint& p)
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < p.coords().size(); ++i) os << (i ? "," : "") << to_string(p.coords()[i]);
    os << ')';
    return os.str();
}

std::string to_string(const LambdaPoint& p)
{
    std::ostringstream os;
    os << '[' << to_string(p.start()) << ';' << to_string(p.offsets()) << ']';
    return os.str();
}

}  // namespace cacti::geom
