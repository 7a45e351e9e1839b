#include "cacti/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "cacti/cactus.hpp"

namespace cacti::kernel {

namespace {

constexpr double kTurn = 2 * std::numbers::pi;
constexpr double kShrink = 0.5;
constexpr double kSpread = 0.9;  // radians between siblings at one point
constexpr double kScale = 100;

struct Builder {
    const FMSElement& e;
    LobeGeometry geo;
    CactusTree tree;
    CactusLayout out;

    double coord(int cls, int lobe) const
    {
        return geom::to_double(geo.classes[static_cast<std::size_t>(cls)].image[static_cast<std::size_t>(lobe - 1)].value());
    }

    // Attaches the lobe vertices `kids` to `parent` at the point of class
    // `cls`, fanned out around the outward normal.
    void attach(LobeCircle parent, int cls, const std::vector<int>& kids)
    {
        const double phi = parent.zero_angle + kTurn * coord(cls, parent.lobe);
        const double px = parent.cx + parent.r * std::cos(phi);
        const double py = parent.cy + parent.r * std::sin(phi);
        const double k = static_cast<double>(kids.size());
        for (std::size_t i = 0; i < kids.size(); ++i) {
            const double psi = phi + kSpread * (static_cast<double>(i) - (k - 1) / 2);
            const int lobe = tree.vertices[static_cast<std::size_t>(kids[i])].lobe;
            LobeCircle c;
            c.lobe = lobe;
            c.parent = parent.lobe;
            c.r = parent.r * kShrink;
            c.px = px;
            c.py = py;
            c.cx = px + c.r * std::cos(psi);
            c.cy = py + c.r * std::sin(psi);
            c.zero_angle = psi + std::numbers::pi - kTurn * coord(cls, lobe);
            place(kids[i], c);
        }
    }

    void place(int v, const LobeCircle& c)
    {
        out.circles.push_back(c);
        for (int q : tree.vertices[static_cast<std::size_t>(v)].children) {
            const auto& iv = tree.vertices[static_cast<std::size_t>(q)];
            attach(c, class_of_breakpoint(geo, iv.breakpoints.front()), iv.children);
        }
    }

    void run()
    {
        if (e.arity() == 0) return;
        const auto& root = tree.vertices[static_cast<std::size_t>(tree.root)];
        const int first = root.kind == CactusTree::Vertex::Kind::Lobe ? tree.root : root.children.front();
        const int lobe = tree.vertices[static_cast<std::size_t>(first)].lobe;
        LobeCircle c;
        c.lobe = lobe;
        c.r = 1;
        c.zero_angle = -std::numbers::pi / 2 - kTurn * coord(geo.basepoint_class, lobe);
        out.base_x = 0;
        out.base_y = -1;
        place(first, c);
        if (root.kind == CactusTree::Vertex::Kind::Intersection) {
            std::vector<int> rest(root.children.begin() + 1, root.children.end());
            attach(out.circles.front(), geo.basepoint_class, rest);
        }
    }
};

std::string fmt(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", std::abs(x) < 5e-4 ? 0.0 : x);
    return buf;
}

}  // namespace

CactusLayout layout(const FMSElement& e)
{
    require_valid(e);
    Builder b{e, lobe_geometry(e), {}, {}};
    if (e.arity() > 0) b.tree = associated_tree(e.partition);
    b.run();
    return b.out;
}

std::string render_svg(const FMSElement& e)
{
    const auto lay = layout(e);
    double x0 = lay.base_x - 0.3, x1 = lay.base_x + 0.3, y0 = lay.base_y - 0.3, y1 = lay.base_y + 0.3;
    for (const auto& c : lay.circles) {
        x0 = std::min(x0, c.cx - c.r - 0.2);
        x1 = std::max(x1, c.cx + c.r + 0.2);
        y0 = std::min(y0, c.cy - c.r - 0.2);
        y1 = std::max(y1, c.cy + c.r + 0.2);
    }
    // SVG has y pointing down.
    auto X = [](double x) { return fmt(kScale * x); };
    auto Y = [](double y) { return fmt(-kScale * y); };
    std::string s = "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" + X(x0) + " " + Y(y1) + " " + fmt(kScale * (x1 - x0)) +
                    " " + fmt(kScale * (y1 - y0)) + "\">\n";
    for (const auto& c : lay.circles) {
        s += "  <circle cx=\"" + X(c.cx) + "\" cy=\"" + Y(c.cy) + "\" r=\"" + fmt(kScale * c.r) +
             "\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>\n";
        const double zx = c.cx + c.r * std::cos(c.zero_angle), zy = c.cy + c.r * std::sin(c.zero_angle);
        s += "  <circle cx=\"" + X(zx) + "\" cy=\"" + Y(zy) + "\" r=\"3\" fill=\"white\" stroke=\"black\"/>\n";
        s += "  <text x=\"" + X(c.cx) + "\" y=\"" + Y(c.cy) + "\" text-anchor=\"middle\" dominant-baseline=\"middle\" font-size=\"" +
             fmt(std::max(10.0, 40 * c.r)) + "\">" + std::to_string(c.lobe) + "</text>\n";
    }
    s += "  <circle cx=\"" + X(lay.base_x) + "\" cy=\"" + Y(lay.base_y) + "\" r=\"5\" fill=\"black\"/>\n";
    s += "</svg>\n";
    return s;
}

}  // namespace cacti::kernel
