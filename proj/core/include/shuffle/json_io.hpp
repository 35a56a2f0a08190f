#ifndef SHUFFLE_JSON_IO_HPP
#define SHUFFLE_JSON_IO_HPP

#include <json.hpp>

#include "shuffle/combinatorics.hpp"
#include "shuffle/dyck.hpp"
#include "shuffle/laurent.hpp"
#include "shuffle/symfunc.hpp"
#include "shuffle/vk.hpp"

namespace shuffle {

using Json = nlohmann::json;

// {"vars":["q","t"],"terms":[{"exp":[2,-1],"coeff":"3/2"},...]}, terms in
// graded-lex order, unused variables dropped.
Json laurent_to_json(const LaurentMPoly& p);
LaurentMPoly laurent_from_json(const Json& j);

Json partition_to_json(const Partition& p);
Partition partition_from_json(const Json& j);
Json composition_to_json(const Composition& c);
Composition composition_from_json(const Json& j);

// {"basis":"s","coeffs":[{"partition":[2,1],"value":<laurent>},...]}
Json symfunc_to_json(const SymFunc& f);
SymFunc symfunc_from_json(const Json& j);

// {"k":2,"coeffs":[{"partition":[1],"yexp":[1,0],"value":<laurent>},...]};
// the X-part is written in the Schur basis.
Json vk_to_json(const VkElement& v);
VkElement vk_from_json(const Json& j);

Json path_to_json(const DyckPath& p);  // full stats record
DyckPath path_from_string(const std::string& s);  // NE-word or area sequence "0,0,1"

}  // namespace shuffle

#endif
