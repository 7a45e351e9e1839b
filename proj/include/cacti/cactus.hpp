#ifndef CACTI_CACTUS_HPP
#define CACTI_CACTUS_HPP

#include <string>
#include <vector>

#include "cacti/fms.hpp"
#include "cacti/partition.hpp"

namespace cacti::kernel {

// Breakpoints of the partition with a common image in (S^1)^n.
struct PointClass {
    std::vector<int> breakpoints;  // indices into breaks, 0..N-1 (t_N is t_0)
    std::vector<geom::CirclePoint> image;
    std::vector<int> lobes;  // sorted
    bool intersection = false;
};

struct LobeGeometry {
    std::vector<PointClass> classes;  // ordered by first breakpoint
    int basepoint_class = -1;         // -1 when n = 0
    bool basepoint_is_intersection = false;
};

LobeGeometry lobe_geometry(const FMSElement& e);

// Index of the class containing breakpoint i, or -1.
int class_of_breakpoint(const LobeGeometry& g, int i);

// Rooted planar tree of a cactus: lobe vertices and intersection vertices,
// children in counterclockwise order.
struct CactusTree {
    struct Vertex {
        enum class Kind { Lobe, Intersection };
        Kind kind;
        int lobe = 0;                  // Lobe
        std::vector<int> breakpoints;  // Intersection
        int parent = -1;
        std::vector<int> children;
    };
    std::vector<Vertex> vertices;
    int root = -1;

    int lobe_vertex(int j) const;
    std::string to_dot(const std::string& name = "cactus") const;
    // Nested bracket form, e.g. "1(*(2))" for the sequence (1,2,1).
    std::string to_string() const;
};

// Single left-to-right scan of the label sequence. Throws
// std::invalid_argument unless the partition is valid at m = 2.
CactusTree associated_tree(const LabeledPartition& p);

}  // namespace cacti::kernel

#endif
