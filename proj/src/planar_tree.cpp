#include "cacti/planar_tree.hpp"

#include <sstream>
#include <stdexcept>

namespace cacti::operad {

int PlanarRootedTree::add_vertex()
{
    vertices_.emplace_back();
    if (root_ < 0) root_ = 0;
    return vertex_count() - 1;
}

void PlanarRootedTree::add_input(int vertex, TreeInput in)
{
    vertices_.at(static_cast<std::size_t>(vertex)).inputs.push_back(in);
}

int PlanarRootedTree::leaf_count() const
{
    if (is_edge()) return 1;
    int n = 0;
    for (const auto& v : vertices_)
        for (const auto& in : v.inputs) n += in.is_leaf() ? 1 : 0;
    return n;
}

std::vector<int> PlanarRootedTree::parents() const
{
    std::vector<int> parent(vertices_.size(), -1);
    for (int v = 0; v < vertex_count(); ++v)
        for (const auto& in : vertex(v).inputs)
            if (!in.is_leaf()) parent[static_cast<std::size_t>(in.index)] = v;
    return parent;
}

std::vector<int> PlanarRootedTree::preorder() const
{
    std::vector<int> order;
    if (is_edge()) return order;
    std::vector<int> stack{root_};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        order.push_back(v);
        const auto& ins = vertex(v).inputs;
        for (auto it = ins.rbegin(); it != ins.rend(); ++it)
            if (!it->is_leaf()) stack.push_back(it->index);
    }
    return order;
}

std::vector<int> PlanarRootedTree::leaves_in_planar_order() const
{
    if (is_edge()) return {1};
    std::vector<int> out;
    std::function<void(int)> walk = [&](int v) {
        for (const auto& in : vertex(v).inputs) {
            if (in.is_leaf())
                out.push_back(in.index);
            else
                walk(in.index);
        }
    };
    walk(root_);
    return out;
}

void PlanarRootedTree::validate() const
{
    if (is_edge()) return;
    if (root_ < 0 || root_ >= vertex_count()) throw std::logic_error("tree root out of range");
    std::vector<int> seen(vertices_.size(), 0);
    for (int v = 0; v < vertex_count(); ++v)
        for (const auto& in : vertex(v).inputs) {
            if (in.is_leaf()) continue;
            if (in.index < 0 || in.index >= vertex_count() || in.index == root_)
                throw std::logic_error("tree edge points to an invalid vertex");
            if (seen[static_cast<std::size_t>(in.index)]++)
                throw std::logic_error("tree vertex has two parents");
        }
    if (static_cast<int>(preorder().size()) != vertex_count())
        throw std::logic_error("tree is not connected to its root");
    auto leaves = leaves_in_planar_order();
    for (std::size_t i = 0; i < leaves.size(); ++i)
        if (leaves[i] != static_cast<int>(i) + 1)
            throw std::logic_error("leaves are not numbered in planar order");
}

std::string PlanarRootedTree::to_dot(const std::function<std::string(int)>& label, const std::string& name) const
{
    std::ostringstream os;
    os << "digraph " << name << " {\n  rankdir=BT;\n  root [shape=point];\n";
    if (is_edge()) {
        os << "  leaf1 [shape=plaintext,label=\"1\"];\n  leaf1 -> root;\n}\n";
        return os.str();
    }
    for (int v = 0; v < vertex_count(); ++v) os << "  v" << v << " [label=\"" << label(v) << "\"];\n";
    os << "  v" << root_ << " -> root;\n";
    for (int v = 0; v < vertex_count(); ++v) {
        int port = 0;
        for (const auto& in : vertex(v).inputs) {
            ++port;
            if (in.is_leaf()) {
                os << "  leaf" << in.index << " [shape=plaintext,label=\"" << in.index << "\"];\n";
                os << "  leaf" << in.index << " -> v" << v << " [taillabel=\"" << port << "\"];\n";
            } else {
                os << "  v" << in.index << " -> v" << v << " [taillabel=\"" << port << "\"];\n";
            }
        }
    }
    os << "}\n";
    return os.str();
}

}  // namespace cacti::operad
