#include "cacti/action.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "cacti/cactus.hpp"
#include "cacti/cosimplicial.hpp"

namespace cacti::action {

namespace {

using geom::CirclePoint;
using geom::DeltaPoint;
using geom::LambdaPoint;
using operad::TreeInput;
using Kind = ActionVertex::Kind;

// Largest s with f(s) = v.
Rat sup_preimage(const geom::PLMonotoneMap& f, const Rat& v)
{
    const auto& pts = f.breakpoints();
    for (std::size_t j = pts.size() - 1; j >= 1; --j) {
        const auto &a = pts[j - 1], &b = pts[j];
        if (a.v <= v && v <= b.v) {
            if (b.v == v) return b.s;
            return a.s + (v - a.v) * (b.s - a.s) / (b.v - a.v);
        }
    }
    throw std::logic_error("value outside the range of the reparametrization");
}

Rat inf_preimage(const geom::PLMonotoneMap& f, const Rat& v)
{
    const auto& pts = f.breakpoints();
    for (std::size_t j = 1; j < pts.size(); ++j) {
        const auto &a = pts[j - 1], &b = pts[j];
        if (a.v <= v && v <= b.v) {
            if (a.v == v) return a.s;
            return a.s + (v - a.v) * (b.s - a.s) / (b.v - a.v);
        }
    }
    throw std::logic_error("value outside the range of the reparametrization");
}

int payload_degree(const Payload& p)
{
    if (const auto* d = std::get_if<DeltaPoint>(&p)) return d->degree();
    if (const auto* l = std::get_if<LambdaPoint>(&p)) return l->degree();
    return 0;
}

// A point of the cactus that carries a vertex.
struct CactusPoint {
    int cls = -1;  // breakpoint class, or -1 for a point inside an arc
    int lobe = 0;  // lobe of an interior point
    CirclePoint position;
    std::vector<int> leaves;                      // input points here, 0 is the root
    std::vector<std::pair<int, Rat>> departures;  // lobe leaving the point, and when
};

class Builder {
public:
    Builder(const FMSElement& e, Mode mode, const BuildOptions& opt) : e_(e), mode_(mode), opt_(opt) {}

    ActionTree build(const Rat& x0, const std::vector<Rat>& d)
    {
        kernel::require_valid(e_);
        const int n = e_.arity();
        const int k = static_cast<int>(d.size());
        tree_.mode = mode_;
        tree_.lobes = n;
        tree_.leaves = k;
        if (n == 0) {
            // The nullary cactus is a single point carrying every input.
            ActionVertex v;
            for (int i = 1; i <= k; ++i) v.inputs.push_back(TreeInput::leaf(i));
            tree_.vertices.push_back(std::move(v));
            tree_.root = 0;
            return std::move(tree_);
        }
        const auto& p = e_.partition;
        geometry_ = kernel::lobe_geometry(e_);
        for (int j = 1; j <= n; ++j)
            pi_.push_back(kernel::coordinate_map(p, j).shifted(e_.offsets[static_cast<std::size_t>(j - 1)].value()));

        d_ = d;
        d_.insert(d_.begin(), Rat(0));
        for (const auto& di : d_) tau_.push_back(geom::frac(x0 + di));

        for (std::size_t c = 0; c < geometry_.classes.size(); ++c)
            if (geometry_.classes[c].intersection) class_point(static_cast<int>(c));
        for (int i = 0; i <= k; ++i) points_[static_cast<std::size_t>(locate(i))].leaves.push_back(i);

        for (auto& pt : points_)
            for (int j : lobes_at(pt)) on_lobe_[j].push_back(static_cast<int>(&pt - points_.data()));

        tree_.root = build_point(root_point_, 0);
        return std::move(tree_);
    }

private:
    int class_point(int c)
    {
        auto [it, fresh] = class_points_.emplace(c, static_cast<int>(points_.size()));
        if (fresh) {
            CactusPoint pt;
            pt.cls = c;
            const auto& p = e_.partition;
            for (int i : geometry_.classes[static_cast<std::size_t>(c)].breakpoints)
                pt.departures.emplace_back(p.labels[static_cast<std::size_t>(i)],
                                           sup_preimage(e_.reparam, p.breaks[static_cast<std::size_t>(i)]));
            points_.push_back(std::move(pt));
        }
        return it->second;
    }

    // Point carrying input i; creates it on first use.
    int locate(int i)
    {
        const auto& p = e_.partition;
        const Rat t = e_.reparam(tau_[static_cast<std::size_t>(i)]);
        int at = -1;
        if (t == 1) {
            at = class_point(geometry_.basepoint_class);
        } else {
            auto it = std::lower_bound(p.breaks.begin(), p.breaks.end(), t);
            const int idx = static_cast<int>(it - p.breaks.begin());
            if (*it == t) {
                at = class_point(kernel::class_of_breakpoint(geometry_, idx));
            } else {
                const int lobe = p.label(idx);
                const CirclePoint pos = pi_[static_cast<std::size_t>(lobe - 1)](t);
                auto [jt, fresh] = interior_points_.emplace(std::make_pair(lobe, pos.value()), static_cast<int>(points_.size()));
                if (fresh) {
                    CactusPoint pt;
                    pt.lobe = lobe;
                    pt.position = pos;
                    pt.departures.emplace_back(lobe, sup_preimage(e_.reparam, t));
                    points_.push_back(std::move(pt));
                }
                at = jt->second;
            }
        }
        if (i == 0) root_point_ = at;
        return at;
    }

    std::vector<int> lobes_at(const CactusPoint& pt) const
    {
        if (pt.cls >= 0) return geometry_.classes[static_cast<std::size_t>(pt.cls)].lobes;
        return {pt.lobe};
    }

    CirclePoint coordinate(int point, int lobe) const
    {
        const auto& pt = points_[static_cast<std::size_t>(point)];
        if (pt.cls >= 0) return geometry_.classes[static_cast<std::size_t>(pt.cls)].image[static_cast<std::size_t>(lobe - 1)];
        return pt.position;
    }

    int source(int point) const
    {
        const auto& pt = points_[static_cast<std::size_t>(point)];
        if (pt.cls >= 0 && geometry_.classes[static_cast<std::size_t>(pt.cls)].intersection) return -1;
        return *std::min_element(pt.leaves.begin(), pt.leaves.end());
    }

    int build_point(int point, int parent_lobe)
    {
        const auto& pt = points_[static_cast<std::size_t>(point)];
        const int v = static_cast<int>(tree_.vertices.size());
        {
            ActionVertex vx;
            vx.point_class = pt.cls;
            vx.kind = (pt.cls >= 0 && geometry_.classes[static_cast<std::size_t>(pt.cls)].intersection) ? Kind::Intersection
                                                                                                         : Kind::Special;
            if (pt.cls < 0) {
                vx.lobe = pt.lobe;
                vx.position = pt.position;
            }
            tree_.vertices.push_back(std::move(vx));
        }
        const bool root = parent_lobe == 0;
        Rat s0 = tau_[0];
        if (!root)
            for (const auto& [j, time] : pt.departures)
                if (j == parent_lobe) s0 = time;
        // (position after the outgoing edge, leaves before lobes, index)
        std::vector<std::tuple<Rat, int, int>> events;
        for (int i : pt.leaves) {
            if (i == 0) continue;
            Rat u = root ? d_[static_cast<std::size_t>(i)] : geom::frac(tau_[static_cast<std::size_t>(i)] - s0);
            if (!root && u == 0) u = 1;
            events.emplace_back(u, 0, i);
        }
        for (const auto& [j, time] : pt.departures)
            if (j != parent_lobe) events.emplace_back(geom::frac(time - s0), 1, j);
        std::sort(events.begin(), events.end());
        std::vector<TreeInput> inputs;
        for (const auto& [u, rank, index] : events)
            inputs.push_back(rank == 0 ? TreeInput::leaf(index) : TreeInput::vertex(build_lobe(index, point)));
        tree_.vertices[static_cast<std::size_t>(v)].inputs = std::move(inputs);
        return v;
    }

    int build_lobe(int lobe, int exit)
    {
        const int v = static_cast<int>(tree_.vertices.size());
        ActionVertex lv;
        lv.kind = Kind::Lobe;
        lv.lobe = lobe;
        tree_.vertices.push_back(lv);
        const CirclePoint c0 = coordinate(exit, lobe);
        std::vector<std::pair<Rat, int>> children;
        for (int q : on_lobe_.at(lobe))
            if (q != exit) children.emplace_back(coordinate(q, lobe).distance_from(c0), q);
        std::sort(children.begin(), children.end());
        std::vector<Rat> offsets;
        std::vector<int> sources{source(exit)};
        for (const auto& [off, q] : children) {
            offsets.push_back(off);
            sources.push_back(source(q));
        }
        Payload payload;
        if (mode_ == Mode::Plain) {
            payload = DeltaPoint(offsets);
        } else if (opt_.exit_slot == ExitSlot::First) {
            payload = LambdaPoint(DeltaPoint(offsets), c0);
        } else {
            std::vector<CirclePoint> coords;
            for (const auto& off : offsets) coords.push_back(c0 + off);
            coords.push_back(c0);
            payload = LambdaPoint::from_coordinates(coords);
        }
        std::vector<TreeInput> inputs;
        for (const auto& [off, q] : children) inputs.push_back(TreeInput::vertex(build_point(q, lobe)));
        auto& vx = tree_.vertices[static_cast<std::size_t>(v)];
        vx.payload = std::move(payload);
        vx.sources = std::move(sources);
        vx.inputs = std::move(inputs);
        return v;
    }

    const FMSElement& e_;
    Mode mode_;
    BuildOptions opt_;
    kernel::LobeGeometry geometry_;
    std::vector<geom::PLCircleMap> pi_;
    std::vector<Rat> d_, tau_;
    std::vector<CactusPoint> points_;
    std::map<int, int> class_points_;
    std::map<std::pair<int, Rat>, int> interior_points_;
    std::map<int, std::vector<int>> on_lobe_;
    int root_point_ = -1;
    ActionTree tree_;
};

ActionTree finish(ActionTree t)
{
    t.shape().validate();
    return t;
}

}  // namespace

operad::PlanarRootedTree ActionTree::shape() const
{
    operad::PlanarRootedTree s;
    for (std::size_t v = 0; v < vertices.size(); ++v) s.add_vertex();
    for (std::size_t v = 0; v < vertices.size(); ++v)
        for (const auto& in : vertices[v].inputs) s.add_input(static_cast<int>(v), in);
    s.set_root(root);
    return s;
}

int ActionTree::count(ActionVertex::Kind kind) const
{
    return static_cast<int>(std::count_if(vertices.begin(), vertices.end(), [&](const ActionVertex& v) { return v.kind == kind; }));
}

std::string ActionTree::census_error(const FMSElement& e) const
{
    const int n = e.arity();
    if (lobes != n) return "tree has " + std::to_string(lobes) + " lobes, cactus has " + std::to_string(n);
    const int V = static_cast<int>(vertices.size());
    if (count(Kind::Lobe) != n) return "lobe vertex count " + std::to_string(count(Kind::Lobe)) + " != " + std::to_string(n);
    if (V != n + count(Kind::Intersection) + count(Kind::Special)) return "vertex kinds do not add up";
    if (n > 0) {
        auto g = kernel::lobe_geometry(e);
        int inter = static_cast<int>(std::count_if(g.classes.begin(), g.classes.end(), [](const auto& c) { return c.intersection; }));
        if (count(Kind::Intersection) != inter)
            return "intersection vertices " + std::to_string(count(Kind::Intersection)) + " != intersection classes " +
                   std::to_string(inter);
    }
    std::set<int> seen;
    int arity_sum = 0, leaf_total = 0;
    for (const auto& v : vertices) {
        arity_sum += static_cast<int>(v.inputs.size());
        for (const auto& in : v.inputs) leaf_total += in.is_leaf() ? 1 : 0;
        if (v.kind == Kind::Lobe) {
            if (!seen.insert(v.lobe).second) return "lobe " + std::to_string(v.lobe) + " occurs twice";
            if (payload_degree(v.payload) != static_cast<int>(v.inputs.size()))
                return "lobe " + std::to_string(v.lobe) + " payload degree differs from its arity";
        }
    }
    if (leaf_total != leaves) return "leaf count " + std::to_string(leaf_total) + " != " + std::to_string(leaves);
    if (arity_sum != V - 1 + leaves)
        return "arity sum " + std::to_string(arity_sum) + " != vertices - 1 + leaves = " + std::to_string(V - 1 + leaves);
    return {};
}

std::string ActionTree::describe_vertex(int v) const
{
    const auto& x = vertices[static_cast<std::size_t>(v)];
    const std::string p = std::to_string(x.inputs.size());
    switch (x.kind) {
    case Kind::Lobe: return "a" + std::to_string(x.lobe) + operad::to_string(x.payload);
    case Kind::Intersection: return "m" + p + " (intersection)";
    case Kind::Special: return "m" + p + " (special)";
    }
    return {};
}

std::string ActionTree::to_dot(const std::string& name) const
{
    return shape().to_dot([this](int v) { return describe_vertex(v); }, name);
}

ActionTree build_action_tree(const FMSElement& e, const DeltaPoint& p, const BuildOptions& opt)
{
    if (!e.is_spineless()) throw std::invalid_argument("plain mode needs a spineless cactus");
    return finish(Builder(e, Mode::Plain, opt).build(0, p.coords()));
}

ActionTree build_action_tree(const FMSElement& e, const LambdaPoint& p, const BuildOptions& opt)
{
    return finish(Builder(e, Mode::Cyclic, opt).build(p.start().value(), p.offsets().coords()));
}

ActionTree build_action_tree(const FMSElement& e, const Payload& p, const BuildOptions& opt)
{
    if (const auto* d = std::get_if<DeltaPoint>(&p)) return build_action_tree(e, *d, opt);
    if (const auto* l = std::get_if<LambdaPoint>(&p)) return build_action_tree(e, *l, opt);
    throw std::invalid_argument("no evaluation point given");
}

CosimplicialInput<FreeTerm> symbolic_input(const std::string& name)
{
    return [name](const Payload& y) {
        return operad::normalize(FreeTerm::generator(operad::Generator{name, 0, y}, payload_degree(y)));
    };
}

std::vector<CosimplicialInput<FreeTerm>> symbolic_inputs(int n, const std::string& prefix)
{
    std::vector<CosimplicialInput<FreeTerm>> out;
    for (int j = 1; j <= n; ++j) out.push_back(symbolic_input(prefix + std::to_string(j)));
    return out;
}

FreeTerm evaluate_symbolic(const ActionTree& tree, const std::vector<CosimplicialInput<FreeTerm>>& inputs)
{
    static const auto op = operad::free_operad_instance();
    return operad::normalize(evaluate_tree(op, tree, inputs));
}

FreeTerm theta_symbolic(const FMSElement& e, const Payload& point, const BuildOptions& opt)
{
    return evaluate_symbolic(build_action_tree(e, point, opt), symbolic_inputs(e.arity()));
}

FreeTerm theta_symbolic(const FMSElement& e, const std::vector<CosimplicialInput<FreeTerm>>& inputs, const Payload& point,
                        const BuildOptions& opt)
{
    return evaluate_symbolic(build_action_tree(e, point, opt), inputs);
}

namespace {

// Unrolled times x_0 + d_i of a point (index 0 is x_0).
struct Times {
    Rat x0;
    std::vector<Rat> d;
    Rat at(int i) const { return x0 + d[static_cast<std::size_t>(i)]; }
};

Times times_of(const Payload& p)
{
    if (const auto* d = std::get_if<DeltaPoint>(&p)) {
        Times t{0, d->coords()};
        t.d.insert(t.d.begin(), Rat(0));
        return t;
    }
    const auto& l = std::get<LambdaPoint>(p);
    Times t{l.start().value(), l.offsets().coords()};
    t.d.insert(t.d.begin(), Rat(0));
    return t;
}

}  // namespace

FreeTerm theta_limit(const FMSElement& e, const Payload& p, const std::vector<Rat>& direction, const Rat& delta)
{
    const Times lim = times_of(p);
    if (direction.size() != lim.d.size()) throw std::invalid_argument("direction needs one entry per point including x_0");
    const bool plain = std::holds_alternative<DeltaPoint>(p);
    if (plain && direction[0] != 0) throw std::invalid_argument("plain mode keeps x_0 at the basepoint");
    Times near{lim.x0 + delta * direction[0], {Rat(0)}};
    std::vector<Rat> offsets;
    for (std::size_t i = 1; i < lim.d.size(); ++i) {
        near.d.push_back(lim.d[i] + delta * direction[i]);
        offsets.push_back(near.d.back());
    }
    DeltaPoint near_offsets(offsets);
    Payload near_point = plain ? Payload(near_offsets) : Payload(LambdaPoint(near_offsets, CirclePoint(near.x0)));
    ActionTree tree = build_action_tree(e, near_point);
    const auto maps = e.arity() > 0 ? kernel::to_map(e) : std::vector<geom::PLCircleMap>{};
    for (auto& v : tree.vertices) {
        if (v.kind != Kind::Lobe) continue;
        const auto& m = maps[static_cast<std::size_t>(v.lobe - 1)];
        auto shift = [&](int src) -> Rat {
            if (src < 0) return 0;
            return m.lift_extended(lim.at(src)) - m.lift_extended(near.at(src));
        };
        const Rat s0 = shift(v.sources[0]);
        const auto& old = plain ? std::get<DeltaPoint>(v.payload).coords()
                                : std::get<LambdaPoint>(v.payload).offsets().coords();
        std::vector<Rat> moved;
        for (std::size_t j = 0; j < old.size(); ++j) moved.push_back(old[j] + shift(v.sources[j + 1]) - s0);
        if (plain)
            v.payload = DeltaPoint(moved);
        else
            v.payload = LambdaPoint(DeltaPoint(moved), std::get<LambdaPoint>(v.payload).start() + s0);
    }
    return evaluate_symbolic(tree, symbolic_inputs(e.arity()));
}

Rat event_gap(const FMSElement& e, const Payload& p)
{
    const Times t = times_of(p);
    std::set<Rat> events;
    for (std::size_t i = 0; i < t.d.size(); ++i) events.insert(geom::frac(t.at(static_cast<int>(i))));
    for (const auto& b : e.reparam.breakpoints()) events.insert(geom::frac(b.s));
    for (const auto& b : e.partition.breaks) {
        events.insert(geom::frac(inf_preimage(e.reparam, b)));
        events.insert(geom::frac(sup_preimage(e.reparam, b)));
    }
    if (events.size() < 2) return 1;
    Rat gap = *events.begin() + 1 - *events.rbegin();
    for (auto it = std::next(events.begin()); it != events.end(); ++it) gap = std::min(gap, Rat(*it - *std::prev(it)));
    return gap;
}

DeltaPoint random_delta_point(int degree, std::mt19937_64& rng, int max_denominator)
{
    std::vector<Rat> c;
    for (int i = 0; i < degree; ++i) {
        const int q = std::uniform_int_distribution<int>(1, max_denominator)(rng);
        c.push_back(geom::make_rat(std::uniform_int_distribution<int>(0, q)(rng), q));
    }
    std::sort(c.begin(), c.end());
    return DeltaPoint(c);
}

LambdaPoint random_lambda_point(int degree, std::mt19937_64& rng, int max_denominator)
{
    const int q = std::uniform_int_distribution<int>(1, max_denominator)(rng);
    CirclePoint start(geom::make_rat(std::uniform_int_distribution<int>(0, q - 1)(rng), q));
    return LambdaPoint(random_delta_point(degree, rng, max_denominator), start);
}

namespace {

std::string show(const Payload& p)
{
    return operad::to_string(p);
}

// Direction keeping p + delta * v inside the simplex: ties stay ordered and
// coordinates at 0 or 1 do not leave [0, 1].
std::vector<Rat> random_direction(const Payload& p, std::mt19937_64& rng)
{
    const Times t = times_of(p);
    std::vector<Rat> v;
    for (std::size_t i = 0; i < t.d.size(); ++i) v.push_back(std::uniform_int_distribution<int>(-1, 1)(rng));
    if (std::holds_alternative<DeltaPoint>(p)) v[0] = 0;
    for (std::size_t i = 1; i < t.d.size();) {
        std::size_t j = i;
        while (j < t.d.size() && t.d[j] == t.d[i]) ++j;
        std::sort(v.begin() + static_cast<std::ptrdiff_t>(i), v.begin() + static_cast<std::ptrdiff_t>(j));
        for (std::size_t r = i; r < j; ++r) {
            if (t.d[i] == 0) v[r] = std::max(v[r], Rat(0));
            if (t.d[i] == 1) v[r] = std::min(v[r], Rat(0));
        }
        i = j;
    }
    return v;
}

}  // namespace

operad::CheckReport verify_action(const ActionCheckOptions& opt)
{
    operad::CheckReport report{opt.mode == Mode::Cyclic ? "action (cyclic)" : "action (plain)"};
    report.exhaustive = false;
    std::mt19937_64 rng(opt.seed);
    auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    const bool cyclic = opt.mode == Mode::Cyclic;
    const auto free_op = operad::free_operad_instance();
    const auto cos = cyclic ? cosimplicial::build_cocyclic(free_op) : cosimplicial::build_cosimplicial(free_op);
    kernel::RandomFMSOptions fopt;
    fopt.framed = cyclic;

    auto expect = [&](const FreeTerm& lhs, const FreeTerm& rhs, const std::string& what) {
        ++report.checks;
        if (!(lhs == rhs)) report.fail(what + ": " + operad::to_string(lhs) + " != " + operad::to_string(rhs));
    };

    for (int c = 0; c < opt.configurations; ++c) {
        const int n = uniform(1, opt.max_arity);
        const int k = uniform(0, opt.max_degree);
        const FMSElement e = kernel::random_fms(n, rng, fopt);
        const Payload p = cyclic ? Payload(random_lambda_point(k, rng, opt.max_denominator))
                                 : Payload(random_delta_point(k, rng, opt.max_denominator));
        const std::string where = "cactus " + kernel::to_string(e) + " at " + show(p);
        const auto theta = [&](const FMSElement& x, const Payload& q) { return theta_symbolic(x, q, opt.build); };
        try {
            const ActionTree tree = build_action_tree(e, p, opt.build);
            ++report.checks;
            if (auto err = tree.census_error(e); !err.empty()) report.fail("census, " + where + ": " + err);

            const FreeTerm a = evaluate_symbolic(tree, symbolic_inputs(n));
            ++report.checks;
            if (a.arity() != k) report.fail("arity " + std::to_string(a.arity()) + " != " + std::to_string(k) + ", " + where);

            for (int i = 0; i <= k + 1; ++i) {
                Payload q = cyclic ? Payload(geom::coface(std::get<LambdaPoint>(p), i))
                                   : Payload(geom::coface(std::get<DeltaPoint>(p), i));
                expect(cos.coface(a, i), theta(e, q), "d^" + std::to_string(i) + ", " + where);
            }
            for (int i = 0; i < k; ++i) {
                Payload q = cyclic ? Payload(geom::codegeneracy(std::get<LambdaPoint>(p), i))
                                   : Payload(geom::codegeneracy(std::get<DeltaPoint>(p), i));
                expect(cos.codegeneracy(a, i), theta(e, q), "s^" + std::to_string(i) + ", " + where);
            }
            if (cyclic)
                expect(theta(e, geom::cyclic_shift(std::get<LambdaPoint>(p))), operad::rotate(a), "t_" + std::to_string(k) + ", " + where);

            // Algebra property against a random second cactus.
            const int n2 = uniform(0, 2);
            const int slot = uniform(1, n);
            const FMSElement e2 = kernel::random_fms(n2, rng, fopt);
            const FMSElement e12 = kernel::compose(e, slot, e2);
            const auto all = symbolic_inputs(n + n2 - 1);
            std::vector<CosimplicialInput<FreeTerm>> outer(all.begin(), all.begin() + (slot - 1));
            std::vector<CosimplicialInput<FreeTerm>> inner(all.begin() + (slot - 1), all.begin() + (slot - 1 + n2));
            const BuildOptions bopt = opt.build;
            outer.push_back([e2, inner, bopt](const Payload& y) { return theta_symbolic(e2, inner, y, bopt); });
            outer.insert(outer.end(), all.begin() + (slot - 1 + n2), all.end());
            expect(theta_symbolic(e12, all, p, opt.build), theta_symbolic(e, outer, p, opt.build),
                   "algebra o_" + std::to_string(slot) + " with " + kernel::to_string(e2) + ", " + where);

            // Symmetric equivariance: lobe j of e sigma is lobe sigma(j) of e.
            const auto sigma = operad::Permutation::random(n, rng);
            const auto base = symbolic_inputs(n);
            std::vector<CosimplicialInput<FreeTerm>> moved(static_cast<std::size_t>(n));
            for (int j = 1; j <= n; ++j) moved[static_cast<std::size_t>(sigma(j) - 1)] = base[static_cast<std::size_t>(j - 1)];
            expect(theta_symbolic(kernel::symmetric_action(e, sigma), base, p, opt.build), theta_symbolic(e, moved, p, opt.build),
                   "symmetric " + operad::to_string(sigma) + ", " + where);

            // Continuity: approach p from a nearby generic point.
            if (opt.build.exit_slot == ExitSlot::First) {
                auto v = random_direction(p, rng);
                const Rat delta = event_gap(e, p) / 4;
                expect(theta_limit(e, p, v, delta), a, "continuity, " + where);
            }
        } catch (const std::exception& ex) {
            report.fail(where + ": " + ex.what());
        }
    }
    return report;
}

}  // namespace cacti::action
