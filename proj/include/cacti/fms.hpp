#ifndef CACTI_FMS_HPP
#define CACTI_FMS_HPP

#include <random>
#include <string>
#include <vector>

#include "cacti/operad.hpp"
#include "cacti/partition.hpp"
#include "cacti/permutation.hpp"
#include "cacti/pl_map.hpp"

namespace cacti::kernel {

// Element of fMS(n): an equal-length partition, a reparametrization and one
// offset per lobe. MS(n) is the subspace with all offsets 0; MS(0) is the
// element with n = 0.
struct FMSElement {
    LabeledPartition partition;
    geom::PLMonotoneMap reparam;
    std::vector<geom::CirclePoint> offsets;

    int arity() const { return partition.n; }
    bool is_spineless() const;

    static FMSElement unit();
    static FMSElement nullary();
    // (0, 1/2, 1; 1, 2) with identity reparametrization.
    static FMSElement multiplication();
    // Spineless element with the given partition and reparametrization.
    static FMSElement spineless(LabeledPartition p, geom::PLMonotoneMap f = {});

    friend bool operator==(const FMSElement&, const FMSElement&) = default;
};

// Throws std::invalid_argument when the element is malformed.
void require_valid(const FMSElement& e, int m = 2);

// Coordinate j is z_j + pi_j o f.
std::vector<geom::PLCircleMap> to_map(const FMSElement& e);

// Inverse of to_map on its image. Throws std::invalid_argument if two
// coordinates vary on a common segment or the special indices contain a
// forbidden alternation of order m.
FMSElement factorize(const std::vector<geom::PLCircleMap>& g, int m = 2);

// Coordinatewise composition in Coend(S^1): (g o_i h)_{i+b-1} = h_b o g_i.
std::vector<geom::PLCircleMap> coend_compose(const std::vector<geom::PLCircleMap>& g, int i,
                                             const std::vector<geom::PLCircleMap>& h);

// e o_i f = factorize(to_map(e) o_i to_map(f)).
FMSElement compose(const FMSElement& e, int i, const FMSElement& f);

// Right action: coordinate k of e.sigma is coordinate sigma(k) of e.
FMSElement symmetric_action(const FMSElement& e, const operad::Permutation& sigma);

std::string to_string(const FMSElement& e);

struct RandomFMSOptions {
    bool framed = false;
    int max_extra_arcs = 3;  // arcs beyond one per lobe
    int max_reparam_breaks = 2;
    int max_denominator = 6;
};

// Random label sequence of a valid F(n) cell, grown by budding new lobes off
// arcs and attaching them at breakpoints.
std::vector<int> random_cell(int n, std::mt19937_64& rng, int max_extra_arcs);
FMSElement random_fms(int n, std::mt19937_64& rng, const RandomFMSOptions& opt = {});

operad::OperadInstance<FMSElement> fms_instance();
operad::Domain<FMSElement> fms_domain(const RandomFMSOptions& opt);

}  // namespace cacti::kernel

#endif
