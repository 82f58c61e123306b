#include "zred/column_store.hpp"

#include <stdexcept>

#include "stores/stores.hpp"

namespace zred {

namespace {

constexpr std::pair<BaseRepresentation, std::string_view> kBaseNames[] = {
    {BaseRepresentation::list, "list"},     {BaseRepresentation::vector, "vector"},
    {BaseRepresentation::set, "set"},       {BaseRepresentation::heap, "heap"},
    {BaseRepresentation::bitmap, "bitmap"},
};

}  // namespace

std::string Representation::name() const {
  for (auto [base_id, base_name] : kBaseNames)
    if (base_id == base) return (pivot_cache ? "p-" : "") + std::string(base_name);
  return "?";
}

std::vector<std::string> Representation::valid_names() {
  std::vector<std::string> out;
  for (const auto& rep : all_representations()) out.push_back(rep.name());
  return out;
}

Representation Representation::parse(std::string_view name) {
  Representation rep;
  std::string_view rest = name;
  if (rest.starts_with("p-")) {
    rep.pivot_cache = true;
    rest.remove_prefix(2);
  }
  for (auto [base_id, base_name] : kBaseNames) {
    if (base_name == rest) {
      rep.base = base_id;
      return rep;
    }
  }
  std::string msg = "unknown representation '" + std::string(name) + "'; valid names:";
  for (const auto& n : valid_names()) msg += " " + n;
  throw std::invalid_argument(msg);
}

std::vector<Representation> all_representations() {
  std::vector<Representation> out;
  for (bool cached : {false, true})
    for (auto [base_id, base_name] : kBaseNames) out.push_back({base_id, cached});
  return out;
}

std::unique_ptr<ColumnStore> make_store(const BoundaryMatrix& m, Representation rep) {
  std::unique_ptr<ColumnStore> base;
  switch (rep.base) {
    case BaseRepresentation::list: base = stores::make_list_store(m); break;
    case BaseRepresentation::vector: base = stores::make_vector_store(m); break;
    case BaseRepresentation::set: base = stores::make_set_store(m); break;
    case BaseRepresentation::heap: base = stores::make_heap_store(m); break;
    case BaseRepresentation::bitmap: base = stores::make_bitmap_store(m); break;
  }
  if (rep.pivot_cache) return stores::make_pivot_cache(std::move(base));
  return base;
}

}  // namespace zred
