#ifndef ORBITLAB_JSON_IO_HPP
#define ORBITLAB_JSON_IO_HPP

#include <string>
#include <vector>

#include "json.hpp"

#include "orbitlab/core.hpp"
#include "orbitlab/cycles.hpp"
#include "orbitlab/group.hpp"
#include "orbitlab/relations.hpp"

namespace orbitlab {

using Json = nlohmann::ordered_json;

// Wire formats:
//   permutation       {"n": N, "images": [...]}
//   partial injection {"n": N, "pairs": [[a,b],...]}   sorted by source
//   partition         {"n": N, "classes": [[...],...]} classes and members sorted
//   graphing          {"n": N, "maps": [<partial injection>...]}
//   pre-p-cycle       same as graphing, order significant
//   permutation list  [<permutation>...] or {"n": N, "generators": [...]}
// Parse failures throw Error("json", ...) naming the offending field.

Json to_json(const Permutation& t);
Json to_json(const PartialInjection& phi);
Json to_json(const Partition& relation);
Json to_json(const Graphing& graphing);
Json to_json(const PrePCycle& cycle);
Json to_json(const GenerationCertificate& cert);
Json to_json(const std::vector<Permutation>& perms);
std::string decimal_string(const Natural& value);

Permutation permutation_from_json(const Json& j);
PartialInjection partial_injection_from_json(const Json& j);
Partition partition_from_json(const Json& j);
Graphing graphing_from_json(const Json& j);
PrePCycle precycle_from_json(const Json& j);
std::vector<Permutation> permutations_from_json(const Json& j);

Json read_json_file(const std::string& path);

}  // namespace orbitlab

#endif  // ORBITLAB_JSON_IO_HPP
