#include "cacti/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace cacti::io {

using geom::CirclePoint;
using geom::DeltaPoint;
using geom::LambdaPoint;
using geom::Rat;
using operad::FreeTerm;

namespace {

[[noreturn]] void bad(const std::string& what)
{
    throw std::invalid_argument(what);
}

const json& field(const json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

int int_from_json(const json& j, const char* what)
{
    if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
    return j.get<int>();
}

std::vector<Rat> rats_from_json(const json& j, const char* what)
{
    if (!j.is_array()) bad(std::string(what) + " must be an array of rationals");
    std::vector<Rat> out;
    for (const auto& x : j) out.push_back(rat_from_json(x));
    return out;
}

json rats_to_json(const std::vector<Rat>& v)
{
    json a = json::array();
    for (const auto& x : v) a.push_back(to_json(x));
    return a;
}

json integer_to_json(const geom::Integer& z)
{
    if (z.fits_slong_p()) return z.get_si();
    return z.get_str();
}

const char* kind_name(action::ActionVertex::Kind k)
{
    switch (k) {
    case action::ActionVertex::Kind::Lobe: return "lobe";
    case action::ActionVertex::Kind::Intersection: return "intersection";
    case action::ActionVertex::Kind::Special: return "special";
    }
    return "?";
}

}  // namespace

json to_json(const Rat& r)
{
    return geom::to_string(r);
}

Rat rat_from_json(const json& j)
{
    if (j.is_string()) return geom::parse_rat(j.get<std::string>());
    if (j.is_number_integer()) return Rat(j.get<long>());
    bad("rational must be a string \"p/q\", got " + j.dump());
}

json to_json(const kernel::FMSElement& e)
{
    json j;
    j["n"] = e.arity();
    if (e.arity() == 0) return j;
    j["breaks"] = rats_to_json(e.partition.breaks);
    j["labels"] = e.partition.labels;
    json f = json::array();
    for (const auto& p : e.reparam.breakpoints()) f.push_back(json::array({to_json(p.s), to_json(p.v)}));
    j["reparam"] = f;
    if (!e.is_spineless()) {
        json z = json::array();
        for (const auto& o : e.offsets) z.push_back(to_json(o.value()));
        j["offsets"] = z;
    }
    return j;
}

kernel::FMSElement fms_from_json(const json& j)
{
    const int n = int_from_json(field(j, "n"), "n");
    if (n < 0) bad("n must be nonnegative");
    if (n == 0) {
        if (j.contains("labels") && !j.at("labels").empty()) bad("the nullary element has no arcs");
        return kernel::FMSElement::nullary();
    }
    kernel::LabeledPartition p;
    p.n = n;
    p.breaks = rats_from_json(field(j, "breaks"), "breaks");
    const auto& labels = field(j, "labels");
    if (!labels.is_array()) bad("labels must be an array");
    for (const auto& x : labels) p.labels.push_back(int_from_json(x, "label"));
    if (p.breaks.size() != p.labels.size() + 1) bad("expected one more break than labels");
    geom::PLMonotoneMap f;
    if (j.contains("reparam")) {
        const auto& r = j.at("reparam");
        if (!r.is_array()) bad("reparam must be an array of [s, v] pairs");
        std::vector<geom::Breakpoint> pts;
        for (const auto& q : r) {
            if (!q.is_array() || q.size() != 2) bad("reparam entries are [s, v] pairs");
            pts.push_back({rat_from_json(q[0]), rat_from_json(q[1])});
        }
        f = geom::PLMonotoneMap(std::move(pts));
    }
    auto e = kernel::FMSElement::spineless(std::move(p), std::move(f));
    if (j.contains("offsets")) {
        auto z = rats_from_json(j.at("offsets"), "offsets");
        if (static_cast<int>(z.size()) != n) bad("one offset per lobe required");
        for (int i = 0; i < n; ++i) e.offsets[static_cast<std::size_t>(i)] = CirclePoint(z[static_cast<std::size_t>(i)]);
    }
    kernel::require_valid(e);
    return e;
}

json to_json(const operad::Payload& p)
{
    if (auto* d = std::get_if<DeltaPoint>(&p)) return rats_to_json(d->coords());
    if (auto* l = std::get_if<LambdaPoint>(&p)) {
        json j;
        j["offsets"] = rats_to_json(l->offsets().coords());
        j["start"] = to_json(l->start().value());
        return j;
    }
    return nullptr;
}

operad::Payload payload_from_json(const json& j)
{
    if (j.is_null()) return std::monostate{};
    if (j.is_array()) return DeltaPoint(rats_from_json(j, "payload"));
    if (j.is_object())
        return LambdaPoint(DeltaPoint(rats_from_json(field(j, "offsets"), "offsets")), CirclePoint(rat_from_json(field(j, "start"))));
    bad("payload must be null, an array or an object");
}

json to_json(const FreeTerm& t)
{
    json j;
    if (t.is_edge()) {
        j["op"] = "leaf";
        return j;
    }
    if (t.is_basepoint()) {
        j["op"] = "m";
        j["arity"] = t.root_arity();
    } else {
        const auto& g = std::get<operad::Generator>(t.label());
        j["op"] = "gen";
        j["arity"] = t.root_arity();
        j["name"] = g.name;
        j["rot"] = g.rot;
        if (!std::holds_alternative<std::monostate>(g.payload)) j["payload"] = to_json(g.payload);
    }
    json c = json::array();
    for (const auto& x : t.inputs()) c.push_back(to_json(x));
    j["children"] = c;
    return j;
}

FreeTerm term_from_json(const json& j)
{
    const auto& op = field(j, "op");
    if (!op.is_string()) bad("op must be a string");
    const auto kind = op.get<std::string>();
    if (kind == "leaf") return FreeTerm::leaf();
    if (kind != "m" && kind != "gen") bad("unknown op \"" + kind + "\"");
    std::vector<FreeTerm> children;
    if (j.contains("children")) {
        if (!j.at("children").is_array()) bad("children must be an array");
        for (const auto& c : j.at("children")) children.push_back(term_from_json(c));
    }
    if (j.contains("arity") && int_from_json(j.at("arity"), "arity") != static_cast<int>(children.size()))
        bad("arity does not match the number of children");
    if (kind == "m") return FreeTerm::vertex(operad::Basepoint{}, std::move(children));
    operad::Generator g;
    const auto& name = field(j, "name");
    if (!name.is_string()) bad("name must be a string");
    g.name = name.get<std::string>();
    if (j.contains("rot")) g.rot = int_from_json(j.at("rot"), "rot");
    if (j.contains("payload")) g.payload = payload_from_json(j.at("payload"));
    return FreeTerm::vertex(std::move(g), std::move(children));
}

json to_json(const homology::Homology& h, int n, int m, const homology::ChainComplex* complex)
{
    json j;
    j["n"] = n;
    j["m"] = m;
    j["fvector"] = h.fvector;
    j["betti"] = h.betti;
    json tor = json::array();
    for (const auto& t : h.torsion) {
        json d = json::array();
        for (const auto& z : t) d.push_back(integer_to_json(z));
        tor.push_back(d);
    }
    j["torsion"] = tor;
    j["euler"] = h.euler;
    if (!complex) return j;
    json cells = json::array();
    for (const auto& dim : complex->cells) {
        json d = json::array();
        for (const auto& c : dim) d.push_back(homology::to_string(c));
        cells.push_back(d);
    }
    j["cells"] = cells;
    json mats = json::array();
    for (const auto& d : complex->differentials) {
        json entries = json::array();
        for (int c = 0; c < d.cols(); ++c)
            for (const auto& [r, v] : d.column(c)) entries.push_back(json::array({r, c, integer_to_json(v)}));
        json mj;
        mj["rows"] = d.rows();
        mj["cols"] = d.cols();
        mj["entries"] = entries;
        mats.push_back(mj);
    }
    j["boundary"] = mats;
    return j;
}

json to_json(const operad::CheckReport& r)
{
    json j;
    j["name"] = r.name;
    j["passed"] = r.passed();
    j["checks"] = r.checks;
    j["undefined"] = r.undefined;
    j["exhaustive"] = r.exhaustive;
    j["failure_count"] = r.failure_count;
    j["failures"] = r.failures;
    return j;
}

json to_json(const action::ActionTree& t)
{
    json j;
    j["mode"] = t.mode == action::Mode::Plain ? "plain" : "cyclic";
    j["lobes"] = t.lobes;
    j["leaves"] = t.leaves;
    j["root"] = t.root;
    json vs = json::array();
    for (const auto& v : t.vertices) {
        json x;
        x["kind"] = kind_name(v.kind);
        if (v.kind == action::ActionVertex::Kind::Lobe) {
            x["lobe"] = v.lobe;
            x["payload"] = to_json(v.payload);
            x["sources"] = v.sources;
        } else {
            x["point_class"] = v.point_class;
            if (v.point_class < 0) {
                x["lobe"] = v.lobe;
                x["position"] = to_json(v.position.value());
            }
        }
        json ins = json::array();
        for (const auto& in : v.inputs) {
            json e;
            e[in.is_leaf() ? "leaf" : "vertex"] = in.index;
            ins.push_back(e);
        }
        x["inputs"] = ins;
        vs.push_back(x);
    }
    j["vertices"] = vs;
    return j;
}

json parse(const std::string& text)
{
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        bad(std::string("malformed JSON: ") + e.what());
    }
}

json read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) bad("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    try {
        return parse(ss.str());
    } catch (const std::invalid_argument& e) {
        bad(path + ": " + e.what());
    }
}

}  // namespace cacti::io
