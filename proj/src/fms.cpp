#include "cacti/fms.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cacti::kernel {

using geom::Breakpoint;
using geom::CirclePoint;
using geom::PLCircleMap;
using geom::PLMonotoneMap;

bool FMSElement::is_spineless() const
{
    return std::all_of(offsets.begin(), offsets.end(), [](const CirclePoint& z) { return z.value() == 0; });
}

FMSElement FMSElement::unit()
{
    return spineless(LabeledPartition{1, {0, 1}, {1}, true});
}

FMSElement FMSElement::nullary()
{
    return FMSElement{};
}

FMSElement FMSElement::multiplication()
{
    return spineless(LabeledPartition{2, {0, Rat(1, 2), 1}, {1, 2}, true});
}

FMSElement FMSElement::spineless(LabeledPartition p, PLMonotoneMap f)
{
    const auto n = static_cast<std::size_t>(p.n);
    return FMSElement{std::move(p), std::move(f), std::vector<CirclePoint>(n)};
}

void require_valid(const FMSElement& e, int m)
{
    if (!e.partition.equal_length) throw std::invalid_argument("fMS elements need an equal-length partition");
    require_valid(e.partition, m);
    if (static_cast<int>(e.offsets.size()) != e.arity()) throw std::invalid_argument("one offset per lobe required");
}

std::vector<PLCircleMap> to_map(const FMSElement& e)
{
    std::vector<PLCircleMap> out;
    out.reserve(static_cast<std::size_t>(e.arity()));
    for (int j = 1; j <= e.arity(); ++j) {
        auto pi = coordinate_map(e.partition, j);
        out.push_back(compose(pi, e.reparam).shifted(e.offsets[static_cast<std::size_t>(j - 1)].value()));
    }
    return out;
}

FMSElement factorize(const std::vector<PLCircleMap>& g, int m)
{
    const int n = static_cast<int>(g.size());
    if (n == 0) return FMSElement::nullary();
    std::vector<Rat> cuts;
    for (const auto& c : g)
        for (const auto& p : c.breakpoints()) cuts.push_back(p.s);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    std::vector<Breakpoint> f_pts{{0, 0}};
    LabeledPartition part;
    part.n = n;
    part.breaks.push_back(0);
    Rat total = 0;
    for (std::size_t a = 0; a + 1 < cuts.size(); ++a) {
        int varying = 0;
        Rat step = 0;
        for (int j = 0; j < n; ++j) {
            Rat d = g[static_cast<std::size_t>(j)].variation(cuts[a], cuts[a + 1]);
            if (d == 0) continue;
            if (varying != 0)
                throw std::invalid_argument("coordinates " + std::to_string(varying) + " and " + std::to_string(j + 1) +
                                            " both vary on [" + geom::to_string(cuts[a]) + "," +
                                            geom::to_string(cuts[a + 1]) + "]");
            varying = j + 1;
            step = d;
        }
        total += step;
        f_pts.push_back({cuts[a + 1], total / n});
        if (varying == 0) continue;
        if (!part.labels.empty() && part.labels.back() == varying)
            part.breaks.back() = total / n;
        else {
            part.labels.push_back(varying);
            part.breaks.push_back(total / n);
        }
    }
    auto report = validate(part, m);
    if (!report.valid) throw std::invalid_argument("special indices do not form a cell: " + report.reason);
    FMSElement e;
    e.partition = std::move(part);
    e.reparam = PLMonotoneMap(std::move(f_pts));
    for (const auto& c : g) e.offsets.push_back(CirclePoint(c.lift(0)));
    return e;
}

std::vector<PLCircleMap> coend_compose(const std::vector<PLCircleMap>& g, int i, const std::vector<PLCircleMap>& h)
{
    if (i < 1 || i > static_cast<int>(g.size())) throw std::out_of_range("composition slot out of range");
    std::vector<PLCircleMap> out(g.begin(), g.begin() + (i - 1));
    const auto& gi = g[static_cast<std::size_t>(i - 1)];
    for (const auto& hb : h) out.push_back(geom::compose(hb, gi));
    out.insert(out.end(), g.begin() + i, g.end());
    return out;
}

FMSElement compose(const FMSElement& e, int i, const FMSElement& f)
{
    return factorize(coend_compose(to_map(e), i, to_map(f)));
}

FMSElement symmetric_action(const FMSElement& e, const operad::Permutation& sigma)
{
    if (sigma.size() != e.arity()) throw std::invalid_argument("permutation size mismatch");
    // Old label sigma(k) becomes k.
    std::vector<int> new_label(static_cast<std::size_t>(e.arity()) + 1, 0);
    for (int k = 1; k <= e.arity(); ++k) new_label[static_cast<std::size_t>(sigma(k))] = k;
    FMSElement out;
    out.partition = relabel(e.partition, new_label);
    out.reparam = e.reparam;
    for (int k = 1; k <= e.arity(); ++k) out.offsets.push_back(e.offsets[static_cast<std::size_t>(sigma(k) - 1)]);
    return out;
}

std::string to_string(const FMSElement& e)
{
    if (e.arity() == 0) return "MS(0)";
    std::ostringstream os;
    os << to_string(e.partition) << " f=";
    for (const auto& p : e.reparam.breakpoints()) os << '(' << geom::to_string(p.s) << ',' << geom::to_string(p.v) << ')';
    if (!e.is_spineless()) {
        os << " z=";
        for (std::size_t k = 0; k < e.offsets.size(); ++k) os << (k ? "," : "") << geom::to_string(e.offsets[k]);
    }
    return os.str();
}

std::vector<int> random_cell(int n, std::mt19937_64& rng, int max_extra_arcs)
{
    if (n <= 0) return {};
    auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    std::vector<int> seq{1};
    int extra = 0;
    for (int c = 2; c <= n; ++c) {
        if (extra + 1 <= max_extra_arcs && uniform(0, 1) == 0) {
            // Bud c off the middle of an arc: X_i -> X_i, c, X_i.
            int i = uniform(0, static_cast<int>(seq.size()) - 1);
            int a = seq[static_cast<std::size_t>(i)];
            seq.insert(seq.begin() + i + 1, {c, a});
            ++extra;
        } else {
            // Attach c at a breakpoint, the basepoint included.
            int pos = uniform(0, static_cast<int>(seq.size()));
            seq.insert(seq.begin() + pos, c);
        }
    }
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    std::shuffle(perm.begin(), perm.end(), rng);
    for (auto& x : seq) x = perm[static_cast<std::size_t>(x - 1)];
    return seq;
}

FMSElement random_fms(int n, std::mt19937_64& rng, const RandomFMSOptions& opt)
{
    if (n == 0) return FMSElement::nullary();
    auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    auto labels = random_cell(n, rng, opt.max_extra_arcs);
    std::vector<std::vector<int>> weights(static_cast<std::size_t>(n) + 1);
    for (int x : labels) weights[static_cast<std::size_t>(x)].push_back(uniform(1, opt.max_denominator));
    std::vector<int> sums(static_cast<std::size_t>(n) + 1, 0);
    for (int j = 1; j <= n; ++j)
        for (int w : weights[static_cast<std::size_t>(j)]) sums[static_cast<std::size_t>(j)] += w;
    std::vector<std::size_t> used(static_cast<std::size_t>(n) + 1, 0);
    LabeledPartition p;
    p.n = n;
    p.labels = labels;
    p.breaks.push_back(0);
    Rat acc = 0;
    for (int x : labels) {
        const auto j = static_cast<std::size_t>(x);
        Rat len(weights[j][used[j]++], sums[j] * n);
        len.canonicalize();
        acc += len;
        p.breaks.push_back(acc);
    }

    auto rational = [&] {
        int q = uniform(1, opt.max_denominator);
        Rat r(uniform(0, q), q);
        r.canonicalize();
        return r;
    };
    std::vector<Breakpoint> f{{0, 0}};
    int k = uniform(0, opt.max_reparam_breaks);
    std::vector<Rat> s, v;
    for (int t = 0; t < k; ++t) {
        Rat x = rational();
        if (x == 0 || x == 1 || std::find(s.begin(), s.end(), x) != s.end()) continue;
        s.push_back(x);
        v.push_back(rational());
    }
    std::sort(s.begin(), s.end());
    std::sort(v.begin(), v.end());
    for (std::size_t t = 0; t < s.size(); ++t) f.push_back({s[t], v[t]});
    f.push_back({1, 1});

    FMSElement e = FMSElement::spineless(std::move(p), PLMonotoneMap(std::move(f)));
    if (opt.framed)
        for (auto& z : e.offsets) z = CirclePoint(rational());
    return e;
}

operad::OperadInstance<FMSElement> fms_instance()
{
    operad::OperadInstance<FMSElement> op;
    op.name = "fMS";
    op.arity = [](const FMSElement& e) { return e.arity(); };
    op.compose = [](const FMSElement& e, int i, const FMSElement& f) -> std::optional<FMSElement> {
        return compose(e, i, f);
    };
    op.units = [] { return std::vector<FMSElement>{FMSElement::unit()}; };
    op.describe = [](const FMSElement& e) { return to_string(e); };
    op.act = [](const FMSElement& e, const operad::Permutation& s) { return symmetric_action(e, s); };
    return op;
}

operad::Domain<FMSElement> fms_domain(const RandomFMSOptions& opt)
{
    operad::Domain<FMSElement> d;
    d.sample = [opt](int n, std::mt19937_64& rng) { return random_fms(n, rng, opt); };
    return d;
}

}  // namespace cacti::kernel
