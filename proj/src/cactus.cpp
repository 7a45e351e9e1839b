#include "cacti/cactus.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

namespace cacti::kernel {

LobeGeometry lobe_geometry(const FMSElement& e)
{
    LobeGeometry g;
    const auto& p = e.partition;
    if (p.n == 0) return g;
    std::vector<geom::PLCircleMap> pi;
    for (int j = 1; j <= p.n; ++j)
        pi.push_back(coordinate_map(p, j).shifted(e.offsets[static_cast<std::size_t>(j - 1)].value()));
    const int N = p.arc_count();
    std::map<std::vector<Rat>, int> index;
    for (int i = 0; i < N; ++i) {
        std::vector<geom::CirclePoint> image;
        std::vector<Rat> key;
        for (const auto& c : pi) {
            image.push_back(c(p.breaks[static_cast<std::size_t>(i)]));
            key.push_back(image.back().value());
        }
        auto [it, fresh] = index.emplace(key, static_cast<int>(g.classes.size()));
        if (fresh) g.classes.push_back(PointClass{{}, image, {}, false});
        auto& cls = g.classes[static_cast<std::size_t>(it->second)];
        cls.breakpoints.push_back(i);
        // Arcs ending and starting at t_i.
        int before = i == 0 ? p.label(N) : p.label(i);
        int after = p.label(i + 1);
        for (int x : {before, after})
            if (std::find(cls.lobes.begin(), cls.lobes.end(), x) == cls.lobes.end()) cls.lobes.push_back(x);
    }
    for (auto& c : g.classes) {
        std::sort(c.lobes.begin(), c.lobes.end());
        c.intersection = c.lobes.size() >= 2;
    }
    g.basepoint_class = class_of_breakpoint(g, 0);
    g.basepoint_is_intersection = g.classes[static_cast<std::size_t>(g.basepoint_class)].intersection;
    return g;
}

int class_of_breakpoint(const LobeGeometry& g, int i)
{
    for (std::size_t c = 0; c < g.classes.size(); ++c) {
        const auto& b = g.classes[c].breakpoints;
        if (std::find(b.begin(), b.end(), i) != b.end()) return static_cast<int>(c);
    }
    return -1;
}

int CactusTree::lobe_vertex(int j) const
{
    for (std::size_t v = 0; v < vertices.size(); ++v)
        if (vertices[v].kind == Vertex::Kind::Lobe && vertices[v].lobe == j) return static_cast<int>(v);
    return -1;
}

std::string CactusTree::to_dot(const std::string& name) const
{
    std::ostringstream os;
    os << "graph " << name << " {\n  root [shape=point];\n";
    for (std::size_t v = 0; v < vertices.size(); ++v) {
        const auto& x = vertices[v];
        if (x.kind == Vertex::Kind::Lobe)
            os << "  v" << v << " [shape=circle,label=\"" << x.lobe << "\"];\n";
        else
            os << "  v" << v << " [shape=point,width=0.12];\n";
    }
    if (root >= 0) os << "  root -- v" << root << ";\n";
    for (std::size_t v = 0; v < vertices.size(); ++v)
        for (int c : vertices[v].children) os << "  v" << v << " -- v" << c << ";\n";
    os << "}\n";
    return os.str();
}

std::string CactusTree::to_string() const
{
    std::function<void(std::ostringstream&, int)> put = [&](std::ostringstream& os, int v) {
        const auto& x = vertices[static_cast<std::size_t>(v)];
        if (x.kind == Vertex::Kind::Lobe)
            os << x.lobe;
        else
            os << '*';
        if (x.children.empty()) return;
        os << '(';
        for (std::size_t k = 0; k < x.children.size(); ++k) {
            if (k) os << ',';
            put(os, x.children[k]);
        }
        os << ')';
    };
    std::ostringstream os;
    if (root >= 0) put(os, root);
    return os.str();
}

CactusTree associated_tree(const LabeledPartition& p)
{
    require_valid(p, 2);
    using Kind = CactusTree::Vertex::Kind;
    CactusTree t;
    const int N = p.arc_count();
    auto add = [&](Kind kind, int parent) {
        t.vertices.push_back(CactusTree::Vertex{kind, 0, {}, parent, {}});
        int v = static_cast<int>(t.vertices.size()) - 1;
        if (parent >= 0) t.vertices[static_cast<std::size_t>(parent)].children.push_back(v);
        return v;
    };
    std::vector<int> remaining(static_cast<std::size_t>(p.n) + 1, 0);
    for (int x : p.labels) ++remaining[static_cast<std::size_t>(x)];
    std::vector<int> vertex_of(static_cast<std::size_t>(p.n) + 1, -1);

    int q = -1;  // current intersection vertex
    if (p.label(1) != p.label(N)) {
        q = add(Kind::Intersection, -1);
        t.vertices[static_cast<std::size_t>(q)].breakpoints.push_back(0);
        t.root = q;
    }
    for (int i = 1; i <= N; ++i) {
        const int a = p.label(i);
        auto& va = vertex_of[static_cast<std::size_t>(a)];
        if (va < 0) {
            va = add(Kind::Lobe, q);
            t.vertices[static_cast<std::size_t>(va)].lobe = a;
            if (t.root < 0) t.root = va;
        } else if (q < 0 || t.vertices[static_cast<std::size_t>(q)].parent != va) {
            throw std::invalid_argument("label " + std::to_string(a) + " returns out of order at arc " +
                                        std::to_string(i));
        }
        if (i == N) break;
        if (--remaining[static_cast<std::size_t>(a)] == 0) {
            q = t.vertices[static_cast<std::size_t>(va)].parent;
            if (q < 0) throw std::invalid_argument("root lobe closes before the end of the circle");
        } else {
            q = add(Kind::Intersection, va);
        }
        t.vertices[static_cast<std::size_t>(q)].breakpoints.push_back(i);
    }
    return t;
}

}  // namespace cacti::kernel
