#ifndef CACTI_FREE_TERM_HPP
#define CACTI_FREE_TERM_HPP

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "cacti/operad.hpp"
#include "cacti/points.hpp"

namespace cacti::operad {

// Evaluation data attached to a generator: none (opaque symbol), a point of
// Delta^l (a_j^l(y)) or a point of Lambda^l (cyclic mode).
using Payload = std::variant<std::monostate, geom::DeltaPoint, geom::LambdaPoint>;

// The basepoint m_p of the vertex's arity.
struct Basepoint {
    friend bool operator==(const Basepoint&, const Basepoint&) = default;
};

// Formal generator. `rot` is the rotation marker [q] of opaque generators,
// kept modulo arity + 1. Payload generators carry their rotation in the
// payload itself (t acts on Lambda points) and keep rot = 0.
struct Generator {
    std::string name;
    int rot = 0;
    Payload payload;
    friend bool operator==(const Generator&, const Generator&) = default;
};

using VertexLabel = std::variant<Basepoint, Generator>;

// Element of the free operad with multiplication on formal generators: a
// planar tree with labeled vertices. Immutable; subterms are shared.
class FreeTerm {
public:
    // The unit: a bare edge (also a leaf when used as an input).
    FreeTerm() = default;

    static FreeTerm leaf() { return FreeTerm(); }
    // Vertex with the given inputs; payload generators must have as many
    // inputs as their payload degree. Not normalized.
    static FreeTerm vertex(VertexLabel label, std::vector<FreeTerm> inputs);
    // Corollas; basepoint(p) is m_p (p = 0 is u).
    static FreeTerm basepoint(int arity);
    static FreeTerm generator(Generator g, int arity);
    static FreeTerm generator(const std::string& name, int arity) { return generator(Generator{name, 0, {}}, arity); }

    bool is_edge() const { return node_ == nullptr; }
    // Number of leaves.
    int arity() const { return node_ ? node_->arity : 1; }
    // Number of inputs of the root vertex.
    int root_arity() const { return static_cast<int>(node_->inputs.size()); }
    const VertexLabel& label() const { return node_->label; }
    const std::vector<FreeTerm>& inputs() const { return node_->inputs; }
    bool is_basepoint() const { return node_ && std::holds_alternative<Basepoint>(node_->label); }
    int vertex_count() const;

    friend bool operator==(const FreeTerm& a, const FreeTerm& b);

private:
    struct Node {
        VertexLabel label;
        std::vector<FreeTerm> inputs;
        int arity;
    };
    std::shared_ptr<const Node> node_;
};

// x o_i y by grafting, without normalization.
FreeTerm graft(const FreeTerm& x, int i, const FreeTerm& y);

// Normal form: m-m edges collapsed, m_1 vertices deleted, opaque rotation
// markers reduced, degenerate payloads a(d^i y) expanded through m_2 and m_0
// inputs of payload generators absorbed into the payload.
FreeTerm normalize(const FreeTerm& t);

// Normalizing composition.
FreeTerm compose(const FreeTerm& x, int i, const FreeTerm& y);

// t_n: re-root at leaf 1 (the old root becomes the last leaf). Throws
// std::logic_error on generators with a Delta payload (no cyclic structure).
FreeTerm rotate(const FreeTerm& t, int steps = 1);

// Rotation of a single vertex label by [q].
VertexLabel rotate_label(const VertexLabel& label, int arity, int q);

std::string to_string(const Payload& p);
std::string to_string(const VertexLabel& label);
// Bracket notation: label(child, ...), "|" for a leaf, "1" for the unit.
std::string to_string(const FreeTerm& t);
std::string to_dot(const FreeTerm& t, const std::string& name = "term");

// Free operad with multiplication on formal generators, with cyclic structure.
OperadInstance<FreeTerm> free_operad_instance();

// Random normal-form term of the given arity on opaque generators f and g
// with random rotation markers, basepoint vertices mixed in.
FreeTerm random_term(int arity, std::mt19937_64& rng, int max_vertices = 4, bool with_basepoints = true);

// Evaluates a term in an operad with multiplication. `interpret` supplies
// the value of each generator vertex; basepoints evaluate to m_p.
template <class T, class F>
T evaluate(const FreeTerm& t, const OperadInstance<T>& op, F&& interpret)
{
    if (t.is_edge()) return op.unit();
    T value = [&] {
        if (t.is_basepoint()) {
            auto cands = op.basepoints(t.root_arity());
            if (cands.size() != 1) throw std::logic_error("evaluate needs a total operad");
            return cands.front();
        }
        return interpret(std::get<Generator>(t.label()), t.root_arity());
    }();
    for (int i = t.root_arity(); i >= 1; --i) {
        const auto& c = t.inputs()[static_cast<std::size_t>(i - 1)];
        if (c.is_edge()) continue;
        value = op.compose_or_throw(value, i, evaluate(c, op, interpret));
    }
    return value;
}

}  // namespace cacti::operad

#endif
