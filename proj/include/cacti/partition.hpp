#ifndef CACTI_PARTITION_HPP
#define CACTI_PARTITION_HPP

#include <optional>
#include <string>
#include <vector>

#include "cacti/pl_map.hpp"
#include "cacti/rational.hpp"

namespace cacti::kernel {

using geom::Rat;

// Partition of S^1 into arcs [t_{i-1}, t_i] labeled X_i in {1..n}.
struct LabeledPartition {
    int n = 0;
    std::vector<Rat> breaks;  // 0 = t_0 < ... < t_N = 1 (empty when n = 0)
    std::vector<int> labels;  // X_1 .. X_N
    bool equal_length = true;

    int arc_count() const { return static_cast<int>(labels.size()); }
    // Arc i is [t_{i-1}, t_i], 1-based.
    const Rat& arc_start(int i) const { return breaks[static_cast<std::size_t>(i - 1)]; }
    const Rat& arc_end(int i) const { return breaks[static_cast<std::size_t>(i)]; }
    int label(int i) const { return labels[static_cast<std::size_t>(i - 1)]; }
    Rat arc_length(int i) const { return arc_end(i) - arc_start(i); }
    Rat label_length(int j) const;
    int occurrences(int j) const;

    friend bool operator==(const LabeledPartition&, const LabeledPartition&) = default;
};

struct ValidationReport {
    bool valid = true;
    std::string reason;
    int position = -1;  // 1-based arc index of the first violation, -1 if not local
};

// Longest alternating subsequence a,b,a,b,... of the label sequence, over all
// pairs a != b. Constant letters collapse, so this is the number of runs of
// the sequence filtered to {a, b}.
int longest_alternation(const std::vector<int>& labels, int a, int b);

// Cell condition on a label sequence: every label in 1..n occurs, adjacent
// labels differ, and no alternating subsequence has length m + 2.
ValidationReport validate_labels(const std::vector<int>& labels, int n, int m);

ValidationReport validate(const LabeledPartition& p, int m = 2);

// Throws std::invalid_argument with the report's reason when invalid.
void require_valid(const LabeledPartition& p, int m = 2);

// pi_j: S^1 -> S^1, slope 1/L_j on label-j arcs and constant elsewhere,
// based at 0.
geom::PLCircleMap coordinate_map(const LabeledPartition& p, int j);

// Sum over labels of the length of I_j(x) minus I_j(y).
Rat metric_distance(const LabeledPartition& x, const LabeledPartition& y);

// Weighted composition in C': label-i arcs of x, concatenated, are cut by the
// breaks of y scaled by the total length L_i. Labels of y become i..i+l-1.
LabeledPartition weighted_compose(const LabeledPartition& x, int i, const LabeledPartition& y);

// Relabeling j -> sigma^{-1}(j), so that coordinate k of the result is
// coordinate sigma(k) of p.
LabeledPartition relabel(const LabeledPartition& p, const std::vector<int>& new_label_of);

std::string to_string(const LabeledPartition& p);

}  // namespace cacti::kernel

#endif
