#ifndef CACTI_RENDER_HPP
#define CACTI_RENDER_HPP

#include <string>
#include <vector>

#include "cacti/fms.hpp"

namespace cacti::kernel {

// Planar picture of a cactus: lobe j is a circle through the intersection
// point it hangs from on its parent lobe, tangent to the parent when it is
// the only lobe hanging there; siblings at one point fan out. Floating point
// is used here only.
struct LobeCircle {
    int lobe = 0;
    int parent = 0;  // 0 for the root lobe
    double cx = 0, cy = 0, r = 0;
    double px = 0, py = 0;  // point shared with the parent
    // Angle of coordinate 0 of the lobe, counterclockwise from the x axis.
    double zero_angle = 0;
};

struct CactusLayout {
    std::vector<LobeCircle> circles;  // in tree order
    double base_x = 0, base_y = 0;   // the global basepoint
};

// Throws std::invalid_argument for an invalid element.
CactusLayout layout(const FMSElement& e);
std::string render_svg(const FMSElement& e);

}  // namespace cacti::kernel

#endif
