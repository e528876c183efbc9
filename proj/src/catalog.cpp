#include "riemann/catalog.hpp"

#include <algorithm>
#include <set>

#include "json.hpp"

namespace riemann {

namespace data {
extern const std::string_view catalogs_json;
}

using nlohmann::json;

std::size_t Catalog::components() const {
  std::size_t n = 1;
  for (std::size_t i = 0; i < free.size(); ++i) n *= 4;
  return n;
}

std::vector<std::string> Catalog::labels() const {
  std::vector<std::string> out;
  for (const auto& e : entries) out.push_back(e.label);
  return out;
}

const CatalogEntry* Catalog::find(std::string_view label) const {
  for (const auto& e : entries)
    if (e.label == label) return &e;
  return nullptr;
}

std::string expand_definitions(std::string_view text,
                               const std::map<std::string, std::string, std::less<>>& defs) {
  std::string out(text);
  for (int depth = 0;; ++depth) {
    const auto open = out.find('{');
    if (open == std::string::npos) return out;
    if (depth > 64) throw InputError("definitions nest too deeply in '" + std::string(text) + "'");
    const auto close = out.find('}', open);
    if (close == std::string::npos) throw InputError("unterminated '{' in '" + std::string(text) + "'");
    const std::string name = out.substr(open + 1, close - open - 1);
    const auto it = defs.find(name);
    if (it == defs.end()) throw InputError("unknown definition '{" + name + "}'");
    out.replace(open, close - open + 1, "(" + it->second + ")");
  }
}

std::vector<CatalogEntry> pseudo_entries(const CatalogEntry& entry) {
  std::vector<CatalogEntry> out;
  if (!entry.matrix) return out;
  const auto variants = entry.matrix->pseudo_variants();
  for (std::size_t k = 0; k < variants.size(); ++k) {
    std::string label = entry.label + "~";
    if (variants.size() > 1) label += std::to_string(k + 1);
    out.push_back({label, std::nullopt, variants[k]});
  }
  return out;
}

namespace {

Domain parse_domain(const std::string& s, const std::string& where) {
  if (s == "general") return Domain::general;
  if (s == "einstein") return Domain::einstein;
  throw InputError(where + ": unknown domain '" + s + "'");
}

}  // namespace

std::vector<Catalog> load_catalogs(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    throw InputError(std::string("catalog table: ") + e.what());
  }
  std::map<std::string, std::string, std::less<>> defs;
  const json definitions = doc.value("definitions", json::object());
  for (const auto& [k, v] : definitions.items()) defs[k] = v.get<std::string>();

  std::vector<Catalog> out;
  for (const auto& c : doc.at("catalogs")) {
    Catalog cat;
    cat.name = c.at("name").get<std::string>();
    cat.description = c.value("description", "");
    const std::string where = "catalog '" + cat.name + "'";
    if (c.contains("derive_pseudo")) {
      cat.derived_from = c.at("derive_pseudo").get<std::string>();
      const auto src = std::find_if(out.begin(), out.end(),
                                    [&](const Catalog& x) { return x.name == cat.derived_from; });
      if (src == out.end()) throw InputError(where + ": unknown source '" + cat.derived_from + "'");
      cat.domain = src->domain;
      if (cat.description.empty()) cat.description = "Pseudo variants of " + src->name;
      for (const auto& e : src->entries)
        for (auto& p : pseudo_entries(e)) cat.entries.push_back(std::move(p));
      out.push_back(std::move(cat));
      continue;
    }
    cat.domain = parse_domain(c.value("domain", "general"), where);
    cat.free = c.value("free", std::vector<std::string>{});
    std::set<std::string> seen;
    for (const auto& e : c.at("entries")) {
      CatalogEntry entry;
      entry.label = e.at("label").get<std::string>();
      const std::string at = where + " entry '" + entry.label + "'";
      if (!seen.insert(entry.label).second) throw InputError(at + ": duplicate label");
      try {
        if (e.contains("monomial")) entry.monomial = parse_monomial(e["monomial"].get<std::string>());
        if (e.contains("matrix"))
          entry.matrix = parse_matrix_expr(expand_definitions(e["matrix"].get<std::string>(), defs));
      } catch (const InputError& err) {
        throw InputError(at + ": " + err.what());
      }
      if (!entry.monomial && !entry.matrix) throw InputError(at + ": no monomial or matrix form");
      if (entry.monomial) {
        auto fl = entry.monomial->free_labels();
        auto want = cat.free;
        std::sort(fl.begin(), fl.end());
        std::sort(want.begin(), want.end());
        if (fl != want) throw InputError(at + ": free labels differ from the catalog's");
      }
      if (entry.matrix && !cat.free.empty()) throw InputError(at + ": matrix form on a tensor catalog");
      cat.entries.push_back(std::move(entry));
    }
    out.push_back(std::move(cat));
  }
  return out;
}

const std::vector<Catalog>& catalogs() {
  static const std::vector<Catalog> all = load_catalogs(data::catalogs_json);
  return all;
}

const Catalog& find_catalog(std::string_view name) {
  for (const auto& c : catalogs())
    if (c.name == name) return c;
  throw InputError("unknown catalog '" + std::string(name) + "'");
}

Sample::Sample(FBlocks<Rational> blocks)
    : blocks_(std::move(blocks)), evaluator_(reconstruct(blocks_)) {}

IndexedValue<Rational> evaluate_entry(const CatalogEntry& entry, const Sample& sample, EvalPath path,
                                      const std::vector<std::string>& order) {
  const bool use_tensor = path == EvalPath::tensor || (path == EvalPath::automatic && entry.monomial);
  if (use_tensor) {
    if (!entry.monomial) throw PreconditionError("entry '" + entry.label + "' has no index form");
    return sample.evaluator().evaluate(*entry.monomial, order);
  }
  if (!entry.matrix) throw PreconditionError("entry '" + entry.label + "' has no block form");
  if (!order.empty()) throw PreconditionError("block forms are scalars");
  return {{}, {entry.matrix->evaluate(sample.blocks())}};
}

}  // namespace riemann
