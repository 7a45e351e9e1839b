#ifndef CACTI_IO_HPP
#define CACTI_IO_HPP

#include <string>

#include <json.hpp>

#include "cacti/action.hpp"
#include "cacti/cell_complex.hpp"
#include "cacti/fms.hpp"
#include "cacti/free_term.hpp"
#include "cacti/operad.hpp"

// JSON wire formats. Rationals are strings "p/q" (or "p"); readers throw
// std::invalid_argument on malformed input.
namespace cacti::io {

using json = nlohmann::ordered_json;

json to_json(const geom::Rat& r);
geom::Rat rat_from_json(const json& j);

// {"n":2, "breaks":["0","1/2","1"], "labels":[1,2],
//  "reparam":[["0","0"],["1","1"]], "offsets":["0","0"]}.
// Spineless elements omit "offsets"; the nullary element is {"n":0}.
json to_json(const kernel::FMSElement& e);
// Missing "reparam" means the identity. The result is validated at m = 2.
kernel::FMSElement fms_from_json(const json& j);

// Delta payload: ["x1",...]. Lambda payload: {"offsets":[...],"start":"z"}.
// No payload: null.
json to_json(const operad::Payload& p);
operad::Payload payload_from_json(const json& j);

// {"op":"leaf"}, {"op":"m","arity":p,"children":[...]} or
// {"op":"gen","arity":p,"name":...,"rot":q,"payload":...,"children":[...]}.
json to_json(const operad::FreeTerm& t);
// Not normalized.
operad::FreeTerm term_from_json(const json& j);

// {"n","m","fvector","betti","torsion","euler"}; with `complex`, the cells
// and the boundary matrices as [row, col, value] triplets.
json to_json(const homology::Homology& h, int n, int m, const homology::ChainComplex* complex = nullptr);

json to_json(const operad::CheckReport& r);

json to_json(const action::ActionTree& t);

json parse(const std::string& text);
json read_file(const std::string& path);

}  // namespace cacti::io

#endif
