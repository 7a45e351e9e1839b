// Command line front end. Exit codes: 0 success, 1 suite failure, 2 invalid input.
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "cacti/action.hpp"
#include "cacti/cactus.hpp"
#include "cacti/cell_complex.hpp"
#include "cacti/io.hpp"
#include "cacti/render.hpp"
#include "cacti/suites.hpp"

using namespace cacti;
using io::json;

namespace {

constexpr int kFailure = 1;
constexpr int kInvalid = 2;

void emit(const json& j)
{
    std::cout << j.dump(2) << '\n';
}

void require_feasible(int n, int m)
{
    if (n < 0 || m < 1) throw std::invalid_argument("need n >= 0 and m >= 1");
    if (!homology::feasible(n, m))
        throw std::invalid_argument("F_" + std::to_string(m) + "(" + std::to_string(n) +
                                    ") exceeds the size caps (n <= 5 at m = 2, n <= 3 at m <= 4, n <= 2 up to m = 64)");
}

int cmd_cells(int n, int m)
{
    require_feasible(n, m);
    json dims = json::array();
    for (const auto& d : homology::enumerate_cells(n, m)) {
        json cells = json::array();
        for (const auto& c : d) cells.push_back(homology::to_string(c));
        dims.push_back(cells);
    }
    json j;
    j["n"] = n;
    j["m"] = m;
    j["cells"] = dims;
    emit(j);
    return 0;
}

int cmd_homology(int n, int m, const std::string& oracle, bool with_cells)
{
    if (oracle == "poset") {
        if (m != 2 || n < 1 || n > 4) throw std::invalid_argument("the poset oracle covers m = 2 and 1 <= n <= 4");
        emit(io::to_json(homology::poset_oracle_homology(n), n, m));
        return 0;
    }
    if (!oracle.empty()) throw std::invalid_argument("unknown oracle \"" + oracle + "\"");
    require_feasible(n, m);
    auto c = homology::build_chain_complex(n, m);
    homology::check_boundary_squared(c);
    emit(io::to_json(homology::homology(c), n, m, with_cells ? &c : nullptr));
    return 0;
}

int cmd_compose(const std::string& a, const std::string& b, int slot)
{
    const auto ja = io::read_file(a), jb = io::read_file(b);
    if (ja.contains("op") != jb.contains("op")) throw std::invalid_argument("cannot compose a cactus with a term");
    if (ja.contains("op")) {
        auto x = operad::normalize(io::term_from_json(ja));
        if (slot < 1 || slot > x.arity()) throw std::invalid_argument("slot out of range");
        emit(io::to_json(operad::compose(x, slot, operad::normalize(io::term_from_json(jb)))));
        return 0;
    }
    auto x = io::fms_from_json(ja);
    if (slot < 1 || slot > x.arity()) throw std::invalid_argument("slot out of range");
    emit(io::to_json(kernel::compose(x, slot, io::fms_from_json(jb))));
    return 0;
}

int cmd_verify(const std::string& suite, const suites::SuiteOptions& opt)
{
    auto r = suites::run(suite, opt);
    emit(io::to_json(r));
    return r.passed() ? 0 : kFailure;
}

operad::Payload parse_points(const std::string& text, const std::string& mode)
{
    std::vector<geom::Rat> xs;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (item.find_first_not_of(' ') != std::string::npos) xs.push_back(geom::parse_rat(item));
    if (mode == "plain") return geom::DeltaPoint(xs);
    if (xs.empty()) throw std::invalid_argument("cyclic mode needs x0");
    std::vector<geom::CirclePoint> zs;
    for (const auto& x : xs) zs.emplace_back(x);
    return geom::LambdaPoint::from_coordinates(zs);
}

int cmd_act(const std::string& cactus, const std::string& points, const std::string& mode, bool symbolic)
{
    const auto e = io::fms_from_json(io::read_file(cactus));
    const auto p = parse_points(points, mode);
    json j;
    j["tree"] = io::to_json(action::build_action_tree(e, p));
    if (symbolic) {
        const auto t = action::theta_symbolic(e, p);
        j["term"] = io::to_json(t);
        j["text"] = operad::to_string(t);
    }
    emit(j);
    return 0;
}

int cmd_tree(const std::string& cactus, const std::string& format)
{
    const auto e = io::fms_from_json(io::read_file(cactus));
    if (e.arity() == 0) throw std::invalid_argument("the nullary cactus has no tree");
    const auto t = kernel::associated_tree(e.partition);
    if (format == "dot")
        std::cout << t.to_dot();
    else
        std::cout << t.to_string() << '\n';
    return 0;
}

int cmd_render(const std::string& cactus)
{
    std::cout << kernel::render_svg(io::fms_from_json(io::read_file(cactus)));
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Cactus operads, cell complexes and cosimplicial actions"};
    app.require_subcommand(1);

    int n = 0, m = 2, slot = 1;
    std::string oracle, a_file, b_file, suite, cactus, points, mode = "plain", format;
    bool with_cells = false, symbolic = false;
    suites::SuiteOptions sopt;

    auto* cells = app.add_subcommand("cells", "List the cells of F_m(n) by dimension");
    cells->add_option("--n", n, "Number of lobes")->required();
    cells->add_option("--m", m, "Filtration level")->required();

    auto* hom = app.add_subcommand("homology", "Integral cellular homology of F_m(n)");
    hom->add_option("--n", n)->required();
    hom->add_option("--m", m)->required();
    hom->add_option("--oracle", oracle, "Use the order complex of the face poset")->check(CLI::IsMember({"poset"}));
    hom->add_flag("--cells", with_cells, "Include the cells and boundary matrices");

    auto* comp = app.add_subcommand("compose", "A o_slot B for two cacti or two free terms");
    comp->add_option("A", a_file)->required()->check(CLI::ExistingFile);
    comp->add_option("B", b_file)->required()->check(CLI::ExistingFile);
    comp->add_option("--slot", slot)->required();

    auto* ver = app.add_subcommand("verify", "Run an identity suite");
    ver->add_option("--suite", suite)->required()->check(CLI::IsMember(suites::names()));
    ver->add_option("--seed", sopt.seed);
    ver->add_option("--samples", sopt.samples)->check(CLI::PositiveNumber);
    ver->add_option("--max-arity", sopt.max_arity)->check(CLI::Range(0, 5));

    auto* act = app.add_subcommand("act", "Tree and symbolic value of the action at a point");
    act->add_option("--cactus", cactus)->required()->check(CLI::ExistingFile);
    act->add_option("--points", points, "x1,...,xk (plain) or x0,...,xk (cyclic)");
    act->add_option("--mode", mode)->check(CLI::IsMember({"plain", "cyclic"}));
    act->add_flag("--symbolic", symbolic);

    auto* tree = app.add_subcommand("tree", "Associated tree of a cactus");
    tree->add_option("cactus", cactus)->required()->check(CLI::ExistingFile);
    tree->add_option("--format", format)->check(CLI::IsMember({"dot", "text"}));

    auto* render = app.add_subcommand("render", "Draw a cactus");
    render->add_option("cactus", cactus)->required()->check(CLI::ExistingFile);
    render->add_option("--format", format)->check(CLI::IsMember({"svg"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kInvalid;
    }

    try {
        if (*cells) return cmd_cells(n, m);
        if (*hom) return cmd_homology(n, m, oracle, with_cells);
        if (*comp) return cmd_compose(a_file, b_file, slot);
        if (*ver) return cmd_verify(suite, sopt);
        if (*act) return cmd_act(cactus, points, mode, symbolic);
        if (*tree) return cmd_tree(cactus, format.empty() ? "dot" : format);
        if (*render) return cmd_render(cactus);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInvalid;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInvalid;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInvalid;
    } catch (const std::exception& e) {
        std::cerr << "failure: " << e.what() << '\n';
        return kFailure;
    }
    return kInvalid;
}
