#ifndef CACTI_SUITES_HPP
#define CACTI_SUITES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "cacti/operad.hpp"

namespace cacti::suites {

struct SuiteOptions {
    std::uint64_t seed = 1;
    int samples = 100;   // random instances per arity pattern
    int max_arity = 3;
};

// operad, symmetric, multiplication, cyclic, cosimplicial, action.
const std::vector<std::string>& names();

// Merged report of every instance the suite covers. Throws
// std::invalid_argument for an unknown name.
operad::CheckReport run(const std::string& name, const SuiteOptions& opt = {});

// factorize(to_map(e)) == e on seeded random elements of arity 0..max_arity.
operad::CheckReport fms_round_trip(const SuiteOptions& opt);

}  // namespace cacti::suites

#endif
