#include "resichain/json_io.hpp"

#include "resichain/constructors.hpp"
#include "resichain/error.hpp"

namespace resichain {

Json to_json(const FiniteChain& chain) {
  Json mult = Json::array();
  for (Element x = 0; x < chain.size(); ++x) {
    Json row = Json::array();
    for (Element y = 0; y < chain.size(); ++y) row.push_back(chain.mult(x, y));
    mult.push_back(std::move(row));
  }
  Json j = {{"size", chain.size()}, {"unit", chain.unit()}, {"mult", std::move(mult)}};
  if (!chain.labels().empty()) j["labels"] = chain.labels();
  return j;
}

FiniteChain chain_from_json(const Json& j) {
  if (j.is_string()) return make_from_spec(j.get<std::string>());
  if (!j.is_object() || !j.contains("size") || !j.contains("unit") || !j.contains("mult"))
    throw Error("ParseError", "a chain needs size, unit and mult");
  int const n = j.at("size").get<int>();
  if (n < 1) throw Error("ParseError", "size must be positive");
  auto const& rows = j.at("mult");
  if (!rows.is_array() || rows.size() != static_cast<std::size_t>(n))
    throw Error("ParseError", "mult must have size rows");
  std::vector<Element> mult;
  for (auto const& row : rows) {
    if (!row.is_array() || row.size() != static_cast<std::size_t>(n))
      throw Error("ParseError", "every row of mult must have size entries");
    for (auto const& v : row) mult.push_back(v.get<Element>());
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
  auto result = FiniteChain::validate(n, j.at("unit").get<Element>(), std::move(mult), std::move(labels));
  if (auto* chain = std::get_if<FiniteChain>(&result)) return *chain;
  auto const& violations = std::get<std::vector<Violation>>(result);
  auto const& first = violations.front();
  throw Error(to_string(first.kind), first.detail,
              std::vector<long long>(first.witness.begin(), first.witness.end()));
}

Json to_json(const ChainMap& map) {
  return {{"domain", canonical_signature_hex(map.domain)},
          {"codomain", canonical_signature_hex(map.codomain)},
          {"image", map.image}};
}

ChainMap map_from_json(const Json& j, const FiniteChain& domain, const FiniteChain& codomain) {
  auto const& raw = j.is_array() ? j : j.at("image");
  if (!raw.is_array()) throw Error("ParseError", "map image must be an array");
  std::vector<Element> image;
  for (auto const& v : raw) {
    if (!v.is_string()) {
      image.push_back(v.get<Element>());
      continue;
    }
    // label in the codomain
    auto const at = codomain.find_label(v.get<std::string>());
    if (!at) throw Error("ParseError", "unknown label '" + v.get<std::string>() + "'");
    image.push_back(*at);
  }
  if (image.size() != static_cast<std::size_t>(domain.size()))
    throw Error("ParseError", "image length must equal the domain size");
  for (Element v : image)
    if (v < 0 || v >= codomain.size()) throw Error("ParseError", "image entry out of range", {v});
  return {domain, codomain, std::move(image)};
}

Json to_json(const Span& span) {
  return {{"A", to_json(span.a)}, {"B", to_json(span.b)}, {"C", to_json(span.c)},
          {"iB", span.ib.image}, {"iC", span.ic.image}};
}

Span span_from_json(const Json& j) {
  for (auto key : {"A", "B", "C", "iB", "iC"})
    if (!j.contains(key)) throw Error("ParseError", std::string("span is missing ") + key);
  auto a = chain_from_json(j.at("A"));
  auto b = chain_from_json(j.at("B"));
  auto c = chain_from_json(j.at("C"));
  auto ib = map_from_json(j.at("iB"), a, b);
  auto ic = map_from_json(j.at("iC"), a, c);
  return {a, b, c, ib, ic};
}

Json to_json(const AmalgamResult& result) {
  return {{"D", to_json(result.d)}, {"jB", result.jb.image}, {"jC", result.jc.image}, {"one_sided", result.one_sided}};
}

Json to_json(const PointedChain& chain) {
  auto j = to_json(chain.base);
  j["f"] = chain.f;
  return j;
}

PointedChain pointed_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("f")) throw Error("ParseError", "a pointed chain needs f");
  auto base = j.contains("spec") ? make_from_spec(j.at("spec").get<std::string>()) : chain_from_json(j);
  auto const& f = j.at("f");
  if (f.is_string()) {
    auto idx = base.find_label(f.get<std::string>());
    if (!idx) throw Error("ParseError", "unknown label " + f.get<std::string>());
    return PointedChain::make(base, *idx);
  }
  return PointedChain::make(base, f.get<Element>());
}

std::vector<FiniteChain> chains_from_json(const Json& j) {
  auto const& list = j.is_object() && j.contains("generators") ? j.at("generators") : j;
  if (!list.is_array()) throw Error("ParseError", "expected an array of chains");
  std::vector<FiniteChain> out;
  for (auto const& item : list) out.push_back(chain_from_json(item));
  return out;
}

}  // namespace resichain
