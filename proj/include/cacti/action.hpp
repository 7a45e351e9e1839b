#ifndef CACTI_ACTION_HPP
#define CACTI_ACTION_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "cacti/fms.hpp"
#include "cacti/free_term.hpp"
#include "cacti/operad.hpp"
#include "cacti/planar_tree.hpp"
#include "cacti/points.hpp"

namespace cacti::action {

using geom::Rat;
using kernel::FMSElement;
using operad::FreeTerm;
using operad::Payload;

enum class Mode { Plain, Cyclic };

// Which slot of a lobe's cyclic payload holds the exit point toward the
// root. Only First is correct; Last exists for negative controls.
enum class ExitSlot { First, Last };

struct BuildOptions {
    ExitSlot exit_slot = ExitSlot::First;
};

struct ActionVertex {
    enum class Kind { Lobe, Intersection, Special };
    Kind kind = Kind::Special;
    int lobe = 0;                // Lobe, or the lobe of an interior special point
    int point_class = -1;        // breakpoint class of an Intersection or Special vertex, else -1
    geom::CirclePoint position;  // Special at an interior point: coordinate on `lobe`
    Payload payload;             // Lobe: DeltaPoint (plain) or LambdaPoint (cyclic)
    // Lobe: the input point each payload slot moves with (slot 0 is the exit,
    // then the children); -1 when the slot is a fixed point of the cactus.
    std::vector<int> sources;
    std::vector<operad::TreeInput> inputs;  // counterclockwise after the outgoing edge
};

// Labeled planar tree of a cactus and input points. Leaves are the points
// x_1..x_k; the output is the basepoint (plain mode) or x_0 (cyclic mode).
struct ActionTree {
    Mode mode = Mode::Plain;
    int lobes = 0;
    int leaves = 0;
    int root = -1;
    std::vector<ActionVertex> vertices;

    operad::PlanarRootedTree shape() const;
    int count(ActionVertex::Kind kind) const;
    // Vertex count, leaf count and arity sum agree with the cactus; returns
    // an empty string or the first discrepancy.
    std::string census_error(const FMSElement& e) const;
    std::string to_dot(const std::string& name = "action") const;
    std::string describe_vertex(int v) const;
};

// Plain mode: e spineless, p = (x_1..x_k) with the basepoint as x_0 = 0.
// Throws std::invalid_argument for an invalid or framed cactus.
ActionTree build_action_tree(const FMSElement& e, const geom::DeltaPoint& p, const BuildOptions& opt = {});
// Cyclic mode: p = (x_0..x_k), rooted at x_0.
ActionTree build_action_tree(const FMSElement& e, const geom::LambdaPoint& p, const BuildOptions& opt = {});
// Dispatches on the payload kind; monostate throws std::invalid_argument.
ActionTree build_action_tree(const FMSElement& e, const Payload& p, const BuildOptions& opt = {});

// One family of evaluations a_j^l: payload of degree l -> O(l).
template <class T>
using CosimplicialInput = std::function<T(const Payload&)>;

// Composite of the tree with lobe j labeled inputs[j-1](y_j) and point
// vertices labeled by the basepoints m_p of a total operad.
template <class T>
T evaluate_tree(const operad::OperadInstance<T>& op, const ActionTree& tree, const std::vector<CosimplicialInput<T>>& inputs)
{
    if (static_cast<int>(inputs.size()) != tree.lobes)
        throw std::invalid_argument("expected " + std::to_string(tree.lobes) + " inputs, got " + std::to_string(inputs.size()));
    operad::LabeledTree<T> lt{tree.shape(), {}};
    for (const auto& v : tree.vertices) {
        if (v.kind == ActionVertex::Kind::Lobe) {
            lt.labels.push_back(inputs[static_cast<std::size_t>(v.lobe - 1)](v.payload));
        } else {
            auto m = op.basepoints(static_cast<int>(v.inputs.size()));
            if (m.size() != 1) throw std::logic_error(op.name + ": evaluation needs a total operad with multiplication");
            lt.labels.push_back(m.front());
        }
    }
    return operad::compose_along_tree(op, lt);
}

template <class T>
T theta(const operad::OperadInstance<T>& op, const FMSElement& e, const std::vector<CosimplicialInput<T>>& inputs,
        const Payload& point, const BuildOptions& opt = {})
{
    return evaluate_tree(op, build_action_tree(e, point, opt), inputs);
}

// Formal generator a_j of the given name with payload y.
CosimplicialInput<FreeTerm> symbolic_input(const std::string& name);
std::vector<CosimplicialInput<FreeTerm>> symbolic_inputs(int n, const std::string& prefix = "a");

// Normal form of the composite in the free operad.
FreeTerm evaluate_symbolic(const ActionTree& tree, const std::vector<CosimplicialInput<FreeTerm>>& inputs);
FreeTerm theta_symbolic(const FMSElement& e, const Payload& point, const BuildOptions& opt = {});
FreeTerm theta_symbolic(const FMSElement& e, const std::vector<CosimplicialInput<FreeTerm>>& inputs, const Payload& point,
                        const BuildOptions& opt = {});

// Limit of theta along p + delta * direction as delta decreases to 0, read
// off the tree at p + delta * direction with every payload coordinate moved
// continuously back to its value at p. `direction` has k + 1 entries (x_0
// first; plain mode requires direction[0] = 0). Throws
// std::invalid_argument if p + delta * direction leaves the simplex.
FreeTerm theta_limit(const FMSElement& e, const Payload& p, const std::vector<Rat>& direction, const Rat& delta);

// Smallest positive gap between the event times of p (input points and
// ends of the reparametrization's flat pieces over breakpoints).
Rat event_gap(const FMSElement& e, const Payload& p);

struct ActionCheckOptions {
    Mode mode = Mode::Cyclic;
    int configurations = 50;
    int max_arity = 3;  // lobes
    int max_degree = 3;  // points
    int max_denominator = 8;
    std::uint64_t seed = 1;
    BuildOptions build;
};

// Cosimpliciality, cyclic equivariance (cyclic mode), algebra property,
// symmetric equivariance, continuity across coincidences and the tree
// census, on seeded random cacti and points, symbolically.
operad::CheckReport verify_action(const ActionCheckOptions& opt);

// Random point with coordinates of denominator at most `max_denominator`,
// so that coincidences with breakpoints and other points are frequent.
geom::DeltaPoint random_delta_point(int degree, std::mt19937_64& rng, int max_denominator);
geom::LambdaPoint random_lambda_point(int degree, std::mt19937_64& rng, int max_denominator);

}  // namespace cacti::action

#endif
