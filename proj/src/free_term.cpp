#include "cacti/free_term.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

namespace cacti::operad {

namespace {

int payload_degree(const Payload& p)
{
    if (const auto* d = std::get_if<geom::DeltaPoint>(&p)) return d->degree();
    if (const auto* l = std::get_if<geom::LambdaPoint>(&p)) return l->degree();
    return -1;
}

const std::vector<geom::Rat>& payload_coords(const Payload& p)
{
    if (const auto* d = std::get_if<geom::DeltaPoint>(&p)) return d->coords();
    return std::get<geom::LambdaPoint>(p).offsets().coords();
}

Payload with_coords(const Payload& p, std::vector<geom::Rat> coords)
{
    if (std::holds_alternative<geom::DeltaPoint>(p)) return geom::DeltaPoint(std::move(coords));
    return geom::LambdaPoint(geom::DeltaPoint(std::move(coords)), std::get<geom::LambdaPoint>(p).start());
}

Generator drop_coordinate(const Generator& g, std::size_t r)
{
    auto c = payload_coords(g.payload);
    c.erase(c.begin() + static_cast<std::ptrdiff_t>(r));
    return Generator{g.name, g.rot, with_coords(g.payload, std::move(c))};
}

std::vector<FreeTerm> slice(const std::vector<FreeTerm>& v, std::size_t from, std::size_t to)
{
    return std::vector<FreeTerm>(v.begin() + static_cast<std::ptrdiff_t>(from), v.begin() + static_cast<std::ptrdiff_t>(to));
}

FreeTerm rewrite(const VertexLabel& label, std::vector<FreeTerm> inputs);

FreeTerm rewrite_basepoint(const std::vector<FreeTerm>& inputs)
{
    std::vector<FreeTerm> flat;
    for (const auto& in : inputs) {
        if (in.is_basepoint())
            flat.insert(flat.end(), in.inputs().begin(), in.inputs().end());
        else
            flat.push_back(in);
    }
    if (flat.size() == 1) return flat.front();
    return FreeTerm::vertex(Basepoint{}, std::move(flat));
}

FreeTerm rewrite_generator(const Generator& g, std::vector<FreeTerm> inputs)
{
    const int p = static_cast<int>(inputs.size());
    if (std::holds_alternative<std::monostate>(g.payload)) {
        Generator h = g;
        h.rot = ((h.rot % (p + 1)) + (p + 1)) % (p + 1);
        return FreeTerm::vertex(h, std::move(inputs));
    }
    // Nullary basepoint inputs: a(y) o_r u = a(s^{r-1} y).
    for (std::size_t r = inputs.size(); r-- > 0;) {
        const auto& c = inputs[r];
        if (c.is_basepoint() && c.inputs().empty()) {
            Generator h = drop_coordinate(g, r);
            inputs.erase(inputs.begin() + static_cast<std::ptrdiff_t>(r));
            return rewrite_generator(h, std::move(inputs));
        }
    }
    const auto& d = payload_coords(g.payload);
    const std::size_t l = d.size();
    // a(d^0 y) = m_2 o_2 a(y)
    if (l >= 1 && d.front() == 0) {
        auto inner = rewrite_generator(drop_coordinate(g, 0), slice(inputs, 1, l));
        return rewrite_basepoint({inputs.front(), inner});
    }
    // a(d^i y) = a(y) o_i m_2
    for (std::size_t i = 0; i + 1 < l; ++i)
        if (d[i] == d[i + 1]) {
            auto mid = rewrite_basepoint({inputs[i], inputs[i + 1]});
            std::vector<FreeTerm> rest = slice(inputs, 0, i);
            rest.push_back(mid);
            auto tail = slice(inputs, i + 2, l);
            rest.insert(rest.end(), tail.begin(), tail.end());
            return rewrite_generator(drop_coordinate(g, i + 1), std::move(rest));
        }
    // a(d^{l} y) = m_2 o_1 a(y)
    if (l >= 1 && d.back() == 1) {
        auto inner = rewrite_generator(drop_coordinate(g, l - 1), slice(inputs, 0, l - 1));
        return rewrite_basepoint({inner, inputs.back()});
    }
    return FreeTerm::vertex(g, std::move(inputs));
}

FreeTerm rewrite(const VertexLabel& label, std::vector<FreeTerm> inputs)
{
    if (std::holds_alternative<Basepoint>(label)) return rewrite_basepoint(inputs);
    return rewrite_generator(std::get<Generator>(label), std::move(inputs));
}

FreeTerm rotate_once(const FreeTerm& t)
{
    if (t.is_edge() || t.arity() == 0) return t;
    FreeTerm up = FreeTerm::leaf();
    FreeTerm cur = t;
    for (;;) {
        const auto& ins = cur.inputs();
        std::size_t q = 0;
        while (ins[q].arity() == 0) ++q;
        std::vector<FreeTerm> next = slice(ins, q + 1, ins.size());
        next.push_back(up);
        auto head = slice(ins, 0, q);
        next.insert(next.end(), head.begin(), head.end());
        FreeTerm node = FreeTerm::vertex(rotate_label(cur.label(), static_cast<int>(ins.size()), static_cast<int>(q) + 1),
                                         std::move(next));
        if (ins[q].is_edge()) return node;
        up = node;
        cur = ins[q];
    }
}

}  // namespace

FreeTerm FreeTerm::vertex(VertexLabel label, std::vector<FreeTerm> inputs)
{
    if (const auto* g = std::get_if<Generator>(&label)) {
        int deg = payload_degree(g->payload);
        if (deg >= 0 && deg != static_cast<int>(inputs.size()))
            throw std::invalid_argument("generator " + g->name + " payload degree " + std::to_string(deg) +
                                        " does not match arity " + std::to_string(inputs.size()));
    }
    int arity = 0;
    for (const auto& in : inputs) arity += in.arity();
    FreeTerm t;
    t.node_ = std::make_shared<const Node>(Node{std::move(label), std::move(inputs), arity});
    return t;
}

FreeTerm FreeTerm::basepoint(int arity)
{
    return vertex(Basepoint{}, std::vector<FreeTerm>(static_cast<std::size_t>(arity)));
}

FreeTerm FreeTerm::generator(Generator g, int arity)
{
    return vertex(std::move(g), std::vector<FreeTerm>(static_cast<std::size_t>(arity)));
}

int FreeTerm::vertex_count() const
{
    if (is_edge()) return 0;
    int n = 1;
    for (const auto& in : inputs()) n += in.vertex_count();
    return n;
}

bool operator==(const FreeTerm& a, const FreeTerm& b)
{
    if (a.node_ == b.node_) return true;
    if (!a.node_ || !b.node_) return false;
    return a.node_->arity == b.node_->arity && a.node_->label == b.node_->label && a.node_->inputs == b.node_->inputs;
}

FreeTerm graft(const FreeTerm& x, int i, const FreeTerm& y)
{
    if (i < 1 || i > x.arity()) throw std::out_of_range("graft slot out of range");
    if (x.is_edge()) return y;
    std::vector<FreeTerm> ins = x.inputs();
    int offset = 0;
    for (auto& c : ins) {
        if (i <= offset + c.arity()) {
            c = graft(c, i - offset, y);
            break;
        }
        offset += c.arity();
    }
    return FreeTerm::vertex(x.label(), std::move(ins));
}

FreeTerm normalize(const FreeTerm& t)
{
    if (t.is_edge()) return t;
    std::vector<FreeTerm> ins;
    ins.reserve(t.inputs().size());
    for (const auto& c : t.inputs()) ins.push_back(normalize(c));
    return rewrite(t.label(), std::move(ins));
}

FreeTerm compose(const FreeTerm& x, int i, const FreeTerm& y)
{
    return normalize(graft(x, i, y));
}

VertexLabel rotate_label(const VertexLabel& label, int arity, int q)
{
    if (std::holds_alternative<Basepoint>(label)) return label;
    Generator g = std::get<Generator>(label);
    if (std::holds_alternative<geom::DeltaPoint>(g.payload))
        throw std::logic_error("generator " + g.name + " has no cyclic structure");
    if (auto* l = std::get_if<geom::LambdaPoint>(&g.payload)) {
        for (int k = 0; k < q; ++k) *l = geom::cyclic_shift(*l);
        return g;
    }
    g.rot = (g.rot + q) % (arity + 1);
    return g;
}

FreeTerm rotate(const FreeTerm& t, int steps)
{
    const int order = t.arity() + 1;
    steps = ((steps % order) + order) % order;
    FreeTerm r = t;
    for (int s = 0; s < steps; ++s) r = rotate_once(r);
    return normalize(r);
}

std::string to_string(const Payload& p)
{
    if (const auto* d = std::get_if<geom::DeltaPoint>(&p)) return geom::to_string(*d);
    if (const auto* l = std::get_if<geom::LambdaPoint>(&p)) return geom::to_string(*l);
    return "";
}

std::string to_string(const VertexLabel& label)
{
    if (std::holds_alternative<Basepoint>(label)) return "m";
    const auto& g = std::get<Generator>(label);
    std::string s = g.name;
    if (g.rot != 0) s += "^" + std::to_string(g.rot);
    return s + to_string(g.payload);
}

std::string to_string(const FreeTerm& t)
{
    if (t.is_edge()) return "1";
    std::function<void(std::ostringstream&, const FreeTerm&)> put = [&](std::ostringstream& os, const FreeTerm& s) {
        if (s.is_edge()) {
            os << '|';
            return;
        }
        os << to_string(s.label());
        if (s.is_basepoint()) os << s.inputs().size();
        if (s.inputs().empty()) return;
        os << '[';
        for (std::size_t i = 0; i < s.inputs().size(); ++i) {
            if (i) os << ',';
            put(os, s.inputs()[i]);
        }
        os << ']';
    };
    std::ostringstream os;
    put(os, t);
    return os.str();
}

std::string to_dot(const FreeTerm& t, const std::string& name)
{
    std::ostringstream os;
    os << "digraph " << name << " {\n  rankdir=BT;\n  root [shape=point];\n";
    int next_vertex = 0;
    int next_leaf = 0;
    std::function<std::string(const FreeTerm&)> walk = [&](const FreeTerm& s) -> std::string {
        if (s.is_edge()) {
            std::string id = "leaf" + std::to_string(++next_leaf);
            os << "  " << id << " [shape=plaintext,label=\"" << next_leaf << "\"];\n";
            return id;
        }
        std::string id = "v" + std::to_string(next_vertex++);
        std::string label = to_string(s.label());
        if (s.is_basepoint()) label += std::to_string(s.inputs().size());
        os << "  " << id << " [label=\"" << label << "\"];\n";
        int port = 0;
        for (const auto& c : s.inputs()) {
            std::string cid = walk(c);
            os << "  " << cid << " -> " << id << " [taillabel=\"" << ++port << "\"];\n";
        }
        return id;
    };
    os << "  " << walk(t) << " -> root;\n}\n";
    return os.str();
}

OperadInstance<FreeTerm> free_operad_instance()
{
    OperadInstance<FreeTerm> op;
    op.name = "free";
    op.arity = [](const FreeTerm& t) { return t.arity(); };
    op.compose = [](const FreeTerm& x, int i, const FreeTerm& y) -> std::optional<FreeTerm> { return compose(x, i, y); };
    op.units = [] { return std::vector<FreeTerm>{FreeTerm()}; };
    op.describe = [](const FreeTerm& t) { return to_string(t); };
    op.rotate = [](const FreeTerm& t) { return rotate(t, 1); };
    op.basepoints = [](int p) { return std::vector<FreeTerm>{normalize(FreeTerm::basepoint(p))}; };
    return op;
}

FreeTerm random_term(int arity, std::mt19937_64& rng, int max_vertices, bool with_basepoints)
{
    auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    std::function<FreeTerm(int, int)> gen = [&](int a, int budget) -> FreeTerm {
        auto label = [&](int p) -> VertexLabel {
            if (with_basepoints && p != 1 && uniform(0, 3) == 0) return Basepoint{};
            return Generator{uniform(0, 1) ? "f" : "g", uniform(0, p), {}};
        };
        if (budget <= 1) return FreeTerm::vertex(label(a), std::vector<FreeTerm>(static_cast<std::size_t>(a)));
        for (;;) {
            int p = uniform(0, 3);
            int c = uniform(0, std::min(p, budget - 1));
            int r = a - (p - c);
            if (r < 0 || (c == 0 && r != 0)) continue;
            std::vector<int> parts(static_cast<std::size_t>(c), 0);
            for (int k = 0; k < r; ++k) ++parts[static_cast<std::size_t>(uniform(0, c - 1))];
            std::vector<bool> is_sub(static_cast<std::size_t>(p), false);
            for (int k = 0; k < c; ++k) is_sub[static_cast<std::size_t>(k)] = true;
            std::shuffle(is_sub.begin(), is_sub.end(), rng);
            std::vector<FreeTerm> ins;
            int used = 0;
            for (int s = 0; s < p; ++s) {
                if (is_sub[static_cast<std::size_t>(s)])
                    ins.push_back(gen(parts[static_cast<std::size_t>(used++)], std::max(1, (budget - 1) / c)));
                else
                    ins.push_back(FreeTerm::leaf());
            }
            return FreeTerm::vertex(label(p), std::move(ins));
        }
    };
    return normalize(gen(arity, uniform(1, std::max(1, max_vertices))));
}

}  // namespace cacti::operad
