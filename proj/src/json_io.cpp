#include "orbitlab/json_io.hpp"

#include <fstream>
#include <sstream>

namespace orbitlab {

namespace {

constexpr const char* kModule = "json";

[[noreturn]] void fail(const std::string& field, const std::string& problem) {
  throw Error(kModule, "field '" + field + "': " + problem);
}

const Json& field(const Json& j, const std::string& name, const std::string& context) {
  if (!j.is_object()) fail(context, "expected an object");
  auto it = j.find(name);
  if (it == j.end()) fail(context + "." + name, "missing");
  return *it;
}

std::size_t read_size(const Json& j, const std::string& context) {
  const Json& n = field(j, "n", context);
  if (!n.is_number_integer() || n.get<long long>() <= 0) {
    fail(context + ".n", "expected a positive integer");
  }
  return n.get<std::size_t>();
}

Point read_point(const Json& j, const std::string& context) {
  if (!j.is_number_integer() || j.get<long long>() < 0) {
    fail(context, "expected a non-negative integer");
  }
  return j.get<Point>();
}

// Inner-module errors are re-labelled so the message names the field.
template <class Fn>
auto rethrow_at(const std::string& context, Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    if (e.module() == kModule) throw;
    fail(context, e.what());
  }
}

}  // namespace

std::string decimal_string(const Natural& value) {
  std::ostringstream out;
  out << value;
  return out.str();
}

Json to_json(const Permutation& t) {
  Json j;
  j["n"] = t.size();
  j["images"] = std::vector<Point>(t.images().begin(), t.images().end());
  return j;
}

Json to_json(const PartialInjection& phi) {
  Json pairs = Json::array();
  for (const auto& [a, b] : phi.pairs()) pairs.push_back({a, b});
  Json j;
  j["n"] = phi.space_size();
  j["pairs"] = std::move(pairs);
  return j;
}

Json to_json(const Partition& relation) {
  Json j;
  j["n"] = relation.size();
  j["classes"] = relation.classes();
  return j;
}

Json to_json(const Graphing& graphing) {
  Json maps = Json::array();
  for (const auto& phi : graphing.maps()) maps.push_back(to_json(phi));
  Json j;
  j["n"] = graphing.space_size();
  j["maps"] = std::move(maps);
  return j;
}

Json to_json(const PrePCycle& cycle) { return to_json(cycle.as_graphing()); }

Json to_json(const GenerationCertificate& cert) {
  Json j;
  j["in_full_group"] = cert.in_full_group;
  j["generated_order"] = decimal_string(cert.generated_order);
  j["full_group_order"] = decimal_string(cert.full_group_order);
  j["generates"] = cert.generates;
  if (!cert.reason.empty()) j["reason"] = cert.reason;
  return j;
}

Json to_json(const std::vector<Permutation>& perms) {
  Json j = Json::array();
  for (const auto& t : perms) j.push_back(to_json(t));
  return j;
}

namespace {

Permutation parse_permutation(const Json& j, const std::string& ctx) {
  const std::size_t n = read_size(j, ctx);
  const Json& images = field(j, "images", ctx);
  if (!images.is_array() || images.size() != n) {
    fail(ctx + ".images", "expected an array of length " + std::to_string(n));
  }
  std::vector<Point> out;
  for (std::size_t i = 0; i < images.size(); ++i) {
    out.push_back(read_point(images[i], ctx + ".images[" + std::to_string(i) + "]"));
  }
  return rethrow_at(ctx + ".images", [&] { return Permutation::from_images(out); });
}

PartialInjection parse_partial_injection(const Json& j, const std::string& ctx) {
  const std::size_t n = read_size(j, ctx);
  const Json& pairs = field(j, "pairs", ctx);
  if (!pairs.is_array()) fail(ctx + ".pairs", "expected an array");
  std::vector<std::pair<Point, Point>> out;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const std::string where = ctx + ".pairs[" + std::to_string(i) + "]";
    if (!pairs[i].is_array() || pairs[i].size() != 2) fail(where, "expected [source, target]");
    out.emplace_back(read_point(pairs[i][0], where), read_point(pairs[i][1], where));
  }
  return rethrow_at(ctx + ".pairs", [&] { return PartialInjection(n, std::move(out)); });
}

}  // namespace

Permutation permutation_from_json(const Json& j) { return parse_permutation(j, "permutation"); }

PartialInjection partial_injection_from_json(const Json& j) {
  return parse_partial_injection(j, "partial_injection");
}

Partition partition_from_json(const Json& j) {
  const std::size_t n = read_size(j, "partition");
  const Json& classes = field(j, "classes", "partition");
  if (!classes.is_array()) fail("partition.classes", "expected an array of arrays");
  std::vector<PointSet> out;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const std::string where = "partition.classes[" + std::to_string(i) + "]";
    if (!classes[i].is_array()) fail(where, "expected an array");
    PointSet cls;
    for (const Json& x : classes[i]) cls.push_back(read_point(x, where));
    out.push_back(std::move(cls));
  }
  return rethrow_at("partition.classes", [&] { return Partition::from_classes(n, out); });
}

Graphing graphing_from_json(const Json& j) {
  const std::size_t n = read_size(j, "graphing");
  const Json& maps = field(j, "maps", "graphing");
  if (!maps.is_array()) fail("graphing.maps", "expected an array");
  Graphing out(n);
  for (std::size_t i = 0; i < maps.size(); ++i) {
    const std::string where = "graphing.maps[" + std::to_string(i) + "]";
    PartialInjection phi = parse_partial_injection(maps[i], where);
    if (phi.space_size() != n) fail(where + ".n", "differs from graphing.n");
    out.add(std::move(phi));
  }
  return out;
}

PrePCycle precycle_from_json(const Json& j) { return validate_precycle(graphing_from_json(j)); }

std::vector<Permutation> permutations_from_json(const Json& j) {
  const Json* list = &j;
  std::optional<std::size_t> n;
  if (j.is_object()) {
    n = read_size(j, "generators");
    list = &field(j, "generators", "generators");
  }
  if (!list->is_array()) fail("generators", "expected an array of permutations");
  std::vector<Permutation> out;
  for (std::size_t i = 0; i < list->size(); ++i) {
    const std::string where = "generators[" + std::to_string(i) + "]";
    Permutation t = parse_permutation((*list)[i], where);
    if (n && t.size() != *n) fail(where + ".n", "differs from generators.n");
    out.push_back(std::move(t));
  }
  return out;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(kModule, "cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error(kModule, "'" + path + "' is not valid JSON: " + e.what());
  }
}

}  // namespace orbitlab
