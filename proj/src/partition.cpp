#include "cacti/partition.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cacti::kernel {

Rat LabeledPartition::label_length(int j) const
{
    Rat total = 0;
    for (int i = 1; i <= arc_count(); ++i)
        if (label(i) == j) total += arc_length(i);
    return total;
}

int LabeledPartition::occurrences(int j) const
{
    return static_cast<int>(std::count(labels.begin(), labels.end(), j));
}

int longest_alternation(const std::vector<int>& labels, int a, int b)
{
    int runs = 0;
    int last = 0;
    for (int x : labels) {
        if (x != a && x != b) continue;
        if (x != last) ++runs;
        last = x;
    }
    return runs;
}

ValidationReport validate_labels(const std::vector<int>& labels, int n, int m)
{
    ValidationReport r;
    auto fail = [&](std::string reason, int pos) {
        r.valid = false;
        r.reason = std::move(reason);
        r.position = pos;
        return r;
    };
    if (m < 1) return fail("alternation order m must be at least 1", -1);
    if (n == 0) return labels.empty() ? r : fail("n = 0 admits only the empty sequence", 1);
    std::vector<int> seen(static_cast<std::size_t>(n) + 1, 0);
    for (std::size_t i = 0; i < labels.size(); ++i) {
        int x = labels[i];
        if (x < 1 || x > n) return fail("label " + std::to_string(x) + " out of range", static_cast<int>(i) + 1);
        if (i > 0 && labels[i - 1] == x)
            return fail("adjacent labels equal at position " + std::to_string(i + 1), static_cast<int>(i) + 1);
        seen[static_cast<std::size_t>(x)] = 1;
    }
    for (int j = 1; j <= n; ++j)
        if (!seen[static_cast<std::size_t>(j)]) return fail("label " + std::to_string(j) + " does not occur", -1);
    // Report the pair whose forbidden pattern completes earliest.
    int best_pos = -1;
    std::string best;
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) {
            int runs = 0, last = 0;
            for (std::size_t i = 0; i < labels.size(); ++i) {
                int x = labels[i];
                if (x != a && x != b) continue;
                if (x != last) ++runs;
                last = x;
                if (runs == m + 2) {
                    int pos = static_cast<int>(i) + 1;
                    if (best_pos < 0 || pos < best_pos) {
                        best_pos = pos;
                        best = "alternating subsequence of labels " + std::to_string(a) + "," + std::to_string(b) +
                               " has length " + std::to_string(m + 2);
                    }
                    break;
                }
            }
        }
    if (best_pos >= 0) return fail(best, best_pos);
    return r;
}

ValidationReport validate(const LabeledPartition& p, int m)
{
    ValidationReport r;
    auto fail = [&](std::string reason, int pos) {
        r.valid = false;
        r.reason = std::move(reason);
        r.position = pos;
        return r;
    };
    if (p.n < 0) return fail("negative label count", -1);
    if (p.n == 0) {
        if (!p.labels.empty() || !p.breaks.empty()) return fail("n = 0 element must be empty", -1);
        return r;
    }
    if (p.breaks.size() != p.labels.size() + 1) return fail("need one more break than labels", -1);
    if (p.breaks.front() != 0 || p.breaks.back() != 1) return fail("breaks must run from 0 to 1", -1);
    for (int i = 1; i <= p.arc_count(); ++i)
        if (!(p.arc_start(i) < p.arc_end(i))) return fail("breaks must be strictly increasing", i);
    auto lr = validate_labels(p.labels, p.n, m);
    if (!lr.valid) return lr;
    if (p.equal_length) {
        const Rat target = Rat(1) / p.n;
        for (int j = 1; j <= p.n; ++j)
            if (p.label_length(j) != target)
                return fail("label " + std::to_string(j) + " has total length " + geom::to_string(p.label_length(j)) +
                                ", expected " + geom::to_string(target),
                            -1);
    }
    return r;
}

void require_valid(const LabeledPartition& p, int m)
{
    auto r = validate(p, m);
    if (!r.valid) throw std::invalid_argument("invalid partition: " + r.reason);
}

geom::PLCircleMap coordinate_map(const LabeledPartition& p, int j)
{
    if (j < 1 || j > p.n) throw std::out_of_range("label out of range");
    const Rat len = p.label_length(j);
    if (len == 0) throw std::invalid_argument("label does not occur");
    std::vector<geom::Breakpoint> pts{{0, 0}};
    Rat acc = 0;
    for (int i = 1; i <= p.arc_count(); ++i) {
        if (p.label(i) == j) acc += p.arc_length(i);
        pts.push_back({p.arc_end(i), acc / len});
    }
    return geom::PLCircleMap(geom::canonical_breakpoints(std::move(pts)));
}

Rat metric_distance(const LabeledPartition& x, const LabeledPartition& y)
{
    if (x.n != y.n) throw std::invalid_argument("metric needs partitions with the same n");
    if (x.n == 0) return 0;
    std::vector<Rat> cuts = x.breaks;
    cuts.insert(cuts.end(), y.breaks.begin(), y.breaks.end());
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    auto label_at = [](const LabeledPartition& p, const Rat& mid) {
        auto it = std::upper_bound(p.breaks.begin(), p.breaks.end(), mid);
        return p.labels[static_cast<std::size_t>(it - p.breaks.begin() - 1)];
    };
    Rat d = 0;
    for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
        Rat mid = (cuts[k] + cuts[k + 1]) / 2;
        if (label_at(x, mid) != label_at(y, mid)) d += cuts[k + 1] - cuts[k];
    }
    return d;
}

LabeledPartition weighted_compose(const LabeledPartition& x, int i, const LabeledPartition& y)
{
    if (i < 1 || i > x.n) throw std::out_of_range("composition slot out of range");
    if (y.n == 0) throw std::invalid_argument("weighted composition needs an input of positive arity");
    const int l = y.n;
    const Rat len = x.label_length(i);
    auto shift = [&](int a) { return a < i ? a : a + l - 1; };
    LabeledPartition out;
    out.n = x.n + l - 1;
    out.equal_length = false;
    out.breaks.push_back(0);
    Rat consumed = 0;  // arclength of label-i arcs already traversed
    for (int a = 1; a <= x.arc_count(); ++a) {
        if (x.label(a) != i) {
            out.labels.push_back(shift(x.label(a)));
            out.breaks.push_back(x.arc_end(a));
            continue;
        }
        const Rat lo = consumed / len;
        const Rat hi = (consumed + x.arc_length(a)) / len;
        for (int b = 1; b <= y.arc_count(); ++b) {
            Rat s = std::max(y.arc_start(b), lo), e = std::min(y.arc_end(b), hi);
            if (!(s < e)) continue;
            out.labels.push_back(i + y.label(b) - 1);
            out.breaks.push_back(x.arc_start(a) + (e - lo) * len);
        }
        consumed += x.arc_length(a);
    }
    return out;
}

LabeledPartition relabel(const LabeledPartition& p, const std::vector<int>& new_label_of)
{
    LabeledPartition out = p;
    for (auto& x : out.labels) x = new_label_of[static_cast<std::size_t>(x)];
    return out;
}

std::string to_string(const LabeledPartition& p)
{
    std::ostringstream os;
    os << '(';
    for (std::size_t k = 0; k < p.breaks.size(); ++k) os << (k ? "," : "") << geom::to_string(p.breaks[k]);
    os << ';';
    for (std::size_t k = 0; k < p.labels.size(); ++k) os << (k ? "," : "") << p.labels[k];
    os << ')';
    return os.str();
}

}  // namespace cacti::kernel
