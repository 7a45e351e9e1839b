#ifndef CACTI_PLANAR_TREE_HPP
#define CACTI_PLANAR_TREE_HPP

#include <functional>
#include <string>
#include <vector>

namespace cacti::operad {

// Incoming edge of a vertex: an internal edge from another vertex or a leaf
// (half-open edge). Leaves are numbered from 1.
struct TreeInput {
    enum class Kind { Vertex, Leaf };
    Kind kind;
    int index;

    static TreeInput vertex(int v) { return {Kind::Vertex, v}; }
    static TreeInput leaf(int k) { return {Kind::Leaf, k}; }
    bool is_leaf() const { return kind == Kind::Leaf; }
    friend bool operator==(const TreeInput&, const TreeInput&) = default;
};

// Rooted planar tree. The root is a half-edge attached to `root()`; a tree
// with no vertices is a single edge (root = leaf 1). The inputs of a vertex
// are listed in counterclockwise order starting after its outgoing edge.
class PlanarRootedTree {
public:
    struct Vertex {
        std::vector<TreeInput> inputs;
    };

    PlanarRootedTree() = default;

    int add_vertex();
    void add_input(int vertex, TreeInput in);
    void set_root(int vertex) { root_ = vertex; }

    int root() const { return root_; }
    bool is_edge() const { return vertices_.empty(); }
    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    const Vertex& vertex(int v) const { return vertices_[static_cast<std::size_t>(v)]; }
    int arity(int v) const { return static_cast<int>(vertex(v).inputs.size()); }
    int leaf_count() const;

    // Parent of every vertex (-1 for the root).
    std::vector<int> parents() const;
    // Vertices in depth-first planar order from the root.
    std::vector<int> preorder() const;
    // Leaf indices in planar order.
    std::vector<int> leaves_in_planar_order() const;

    // Throws std::logic_error unless the structure is a tree reachable from the
    // root with leaves numbered 1..n in planar order.
    void validate() const;

    // Graphviz rendering; `label` names each vertex.
    std::string to_dot(const std::function<std::string(int)>& label, const std::string& name = "tree") const;

private:
    std::vector<Vertex> vertices_;
    int root_ = -1;
};

}  // namespace cacti::operad

#endif
