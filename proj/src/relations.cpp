#include "riemann/relations.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

namespace riemann {

namespace data {
extern const std::string_view relations_json;
}

using nlohmann::json;

std::string to_string(RelationKind kind) {
  switch (kind) {
    case RelationKind::scalar: return "scalar";
    case RelationKind::rank2: return "rank2";
    case RelationKind::rank4: return "rank4";
    case RelationKind::pseudo: return "pseudo";
  }
  return "?";
}

std::string to_string(Domain domain) { return domain == Domain::einstein ? "einstein" : "general"; }

std::string RelationTerm::str() const {
  std::string s = to_string(coef);
  if (!ref.empty()) return s + " * <" + ref + ">";
  if (matrix) s += " * [" + matrix->str() + "]";
  if (mono) s += " * " + mono->str();
  return s;
}

namespace {

RelationKind parse_kind(const std::string& s, const std::string& where) {
  if (s == "scalar") return RelationKind::scalar;
  if (s == "rank2") return RelationKind::rank2;
  if (s == "rank4") return RelationKind::rank4;
  if (s == "pseudo") return RelationKind::pseudo;
  throw InputError(where + ": unknown kind '" + s + "'");
}

Domain parse_domain(const std::string& s, const std::string& where) {
  if (s == "general") return Domain::general;
  if (s == "einstein") return Domain::einstein;
  throw InputError(where + ": unknown domain '" + s + "'");
}

bool same_labels(std::vector<std::string> x, std::vector<std::string> y) {
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  return x == y;
}

Relation parse_relation(const json& r, const std::map<std::string, std::string, std::less<>>& defs,
                        const std::vector<Catalog>& cats, bool known_bad) {
  Relation rel;
  rel.name = r.at("name").get<std::string>();
  const std::string where = "relation '" + rel.name + "'";
  rel.anchor = r.value("anchor", "");
  rel.domain = parse_domain(r.value("domain", "general"), where);
  rel.kind = parse_kind(r.value("kind", "scalar"), where);
  rel.order = r.value("order", 0);
  rel.free = r.value("free", std::vector<std::string>{});
  rel.known_bad = known_bad;
  std::size_t k = 0;
  for (const auto& t : r.at("terms")) {
    const std::string at = where + " term " + std::to_string(k++);
    RelationTerm term;
    try {
      term.coef = parse_rational(t.at("coef").get<std::string>());
      if (t.contains("ref")) {
        term.ref = t["ref"].get<std::string>();
        const auto dot = term.ref.find('.');
        if (dot == std::string::npos) throw InputError("reference '" + term.ref + "' lacks a catalog");
        const std::string cname = term.ref.substr(0, dot), label = term.ref.substr(dot + 1);
        const auto c = std::find_if(cats.begin(), cats.end(), [&](const Catalog& x) { return x.name == cname; });
        if (c == cats.end()) throw InputError("unknown catalog '" + cname + "'");
        const CatalogEntry* e = c->find(label);
        if (!e) throw InputError("catalog '" + cname + "' has no entry '" + label + "'");
        if (e->monomial) term.mono = e->monomial;
        else term.matrix = e->matrix;
      } else {
        if (t.contains("matrix"))
          term.matrix = parse_matrix_expr(expand_definitions(t["matrix"].get<std::string>(), defs));
        if (t.contains("mono")) term.mono = parse_monomial(t["mono"].get<std::string>());
      }
    } catch (const InputError& err) {
      throw InputError(at + ": " + err.what());
    }
    if (!term.mono && !term.matrix) throw InputError(at + ": empty term");
    if (term.matrix && term.matrix->is_matrix()) throw InputError(at + ": matrix-valued block form");
    const std::vector<std::string> fl = term.mono ? term.mono->free_labels() : std::vector<std::string>{};
    if (!same_labels(fl, rel.free)) throw InputError(at + ": free labels differ from the relation's");
    rel.terms.push_back(std::move(term));
  }
  if (rel.terms.empty()) throw InputError(where + ": no terms");
  return rel;
}

MetaRelation parse_meta(const json& m) {
  MetaRelation meta;
  meta.name = m.at("name").get<std::string>();
  meta.anchor = m.value("anchor", "");
  meta.check = m.at("kind").get<std::string>();
  if (meta.check == "combination") {
    meta.target = m.at("target").get<std::string>();
    for (const auto& c : m.at("combination"))
      meta.combination.emplace_back(parse_rational(c.at("coef").get<std::string>()),
                                    c.at("relation").get<std::string>());
  } else if (meta.check == "trace_span") {
    meta.traced = m.at("traced").get<std::vector<std::string>>();
    meta.labels = m.at("labels").get<std::vector<std::string>>();
    meta.span_of = m.at("span_of").get<std::vector<std::string>>();
    if (meta.labels.size() != 2) throw InputError("meta '" + meta.name + "': trace needs two labels");
  } else {
    throw InputError("meta '" + meta.name + "': unknown kind '" + meta.check + "'");
  }
  meta.modulo = m.value("modulo", std::vector<std::string>{});
  return meta;
}

}  // namespace

RelationTable load_relations(std::string_view json_text, const std::vector<Catalog>& cats) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    throw InputError(std::string("relation table: ") + e.what());
  }
  std::map<std::string, std::string, std::less<>> defs;
  const json definitions = doc.value("definitions", json::object());
  for (const auto& [k, v] : definitions.items()) defs[k] = v.get<std::string>();
  RelationTable table;
  std::set<std::string> names;
  auto add = [&](std::vector<Relation>& into, const json& r, bool bad) {
    Relation rel = parse_relation(r, defs, cats, bad);
    if (!names.insert(rel.name).second) throw InputError("duplicate relation '" + rel.name + "'");
    into.push_back(std::move(rel));
  };
  for (const auto& r : doc.at("relations")) add(table.relations, r, false);
  for (const auto& r : doc.value("known_bad", json::array())) add(table.known_bad, r, true);
  for (const auto& m : doc.value("meta", json::array())) table.meta.push_back(parse_meta(m));
  return table;
}

const RelationTable& relation_table() {
  static const RelationTable table = load_relations(data::relations_json, catalogs());
  return table;
}

const std::vector<Relation>& relation_catalog() { return relation_table().relations; }

const Relation& find_relation(std::string_view name) {
  for (const auto* list : {&relation_table().relations, &relation_table().known_bad})
    for (const auto& r : *list)
      if (r.name == name) return r;
  throw InputError("unknown relation '" + std::string(name) + "'");
}

IndexedValue<Rational> evaluate_term(const RelationTerm& term, const Relation& rel,
                                     const Sample& sample) {
  Rational s = term.coef;
  if (term.matrix) s *= term.matrix->evaluate(sample.blocks());
  if (!term.mono) return {{}, {s}};
  IndexedValue<Rational> v = sample.evaluator().evaluate(*term.mono, rel.free);
  if (s != 1)
    for (auto& x : v.values) x *= s;
  return v;
}

Residual verify(const Relation& rel, const Sample& sample) {
  if (rel.domain == Domain::einstein && !sample.blocks().is_einstein())
    throw PreconditionError("relation '" + rel.name + "' holds on Einstein spaces only (B = 0)");
  Residual res;
  res.labels = rel.free;
  res.values.assign(std::size_t(1) << (2 * rel.free.size()), Rational(0));
  for (const auto& t : rel.terms) {
    const auto v = evaluate_term(t, rel, sample);
    for (std::size_t i = 0; i < res.values.size(); ++i) res.values[i] += v.values[i];
  }
  res.is_zero = std::all_of(res.values.begin(), res.values.end(), [](const Rational& x) { return x == 0; });
  return res;
}

Residual verify(const Relation& rel, const FBlocks<Rational>& F) { return verify(rel, Sample(F)); }

bool VerificationReport::all_passed() const {
  return std::all_of(relations.begin(), relations.end(), [](const auto& r) { return r.as_expected(); }) &&
         std::all_of(meta.begin(), meta.end(), [](const auto& m) { return m.passed; });
}

bool in_set(const Relation& rel, std::string_view set) {
  if (set == "known_bad") return rel.known_bad;
  if (rel.known_bad) return false;
  if (set == "all") return true;
  if (set == "quadratic") return rel.order <= 2;
  if (set == "cubic") return rel.order == 3;
  if (set == "quartic") return rel.order == 4;
  if (set == "quintic") return rel.order == 5;
  if (set == "einstein") return rel.domain == Domain::einstein;
  if (set == "pseudo") return rel.kind == RelationKind::pseudo;
  throw InputError("unknown relation set '" + std::string(set) + "'");
}

std::vector<Relation> relations_in_set(std::string_view set) {
  std::vector<Relation> out;
  for (const auto* list : {&relation_table().relations, &relation_table().known_bad})
    for (const auto& r : *list)
      if (in_set(r, set)) out.push_back(r);
  return out;
}

VerificationReport verify_all(std::uint64_t seed, std::size_t count, const std::vector<Relation>& relations) {
  VerificationReport rep;
  rep.seed = seed;
  rep.count = count;
  if (count == 0) return rep;
  std::vector<Sample> general, einstein;
  for (auto& F : random_samples({seed, 9, Domain::general}, count)) general.emplace_back(std::move(F));
  for (auto& F : random_samples({seed, 9, Domain::einstein}, count)) einstein.emplace_back(std::move(F));
  for (const auto& rel : relations) {
    RelationOutcome out;
    out.name = rel.name;
    out.domain = rel.domain;
    out.known_bad = rel.known_bad;
    auto run = [&](const std::vector<Sample>& samples) {
      for (const auto& s : samples) {
        if (!out.passed) return;
        ++out.samples;
        Residual r = verify(rel, s);
        if (!r.is_zero) {
          out.passed = false;
          out.counterexample = s.blocks();
          out.residual = std::move(r);
        }
      }
    };
    if (rel.domain == Domain::general) run(general);
    run(einstein);
    rep.relations.push_back(std::move(out));
  }
  return rep;
}

VerificationReport verify_all(std::uint64_t seed, std::size_t count) {
  std::vector<Relation> rels = relation_table().relations;
  rels.insert(rels.end(), relation_table().known_bad.begin(), relation_table().known_bad.end());
  VerificationReport rep = verify_all(seed, count, rels);
  if (count > 0) rep.meta = verify_meta(relation_table());
  return rep;
}

// ---------------------------------------------------------------------------
// Meta checks

namespace {

using ClassVector = std::map<std::string, Rational>;

constexpr std::uint64_t kFingerprintSeed = 0x6d65746143686b31ULL;
constexpr std::size_t kFingerprintSamples = 3;

const std::vector<Sample>& fingerprint_samples() {
  static const std::vector<Sample> samples = [] {
    std::vector<Sample> out;
    for (auto& F : random_samples({kFingerprintSeed, 9, Domain::general}, kFingerprintSamples))
      out.emplace_back(std::move(F));
    return out;
  }();
  return samples;
}

// Scalar relation -> coefficients over classes of proportional terms. A
// class is named by the term's values on the fingerprint samples divided by
// the first nonzero one; identically vanishing terms drop out.
ClassVector class_vector(const Relation& rel) {
  if (!rel.free.empty()) throw PreconditionError("meta checks need scalar relations: " + rel.name);
  ClassVector out;
  for (const auto& t : rel.terms) {
    RelationTerm unit = t;
    unit.coef = 1;
    std::vector<Rational> vals;
    for (const auto& s : fingerprint_samples()) vals.push_back(evaluate_term(unit, rel, s).scalar());
    const auto lead = std::find_if(vals.begin(), vals.end(), [](const Rational& x) { return x != 0; });
    if (lead == vals.end()) continue;
    const Rational scale = *lead;
    std::string key;
    for (const auto& v : vals) key += to_string(v / scale) + ",";
    out[key] += t.coef * scale;
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

Relation traced(const Relation& rel, const std::string& keep, const std::string& drop) {
  Relation out = rel;
  out.free.clear();
  for (auto& t : out.terms) {
    if (!t.mono) throw PreconditionError("cannot trace a scalar term of " + rel.name);
    t.mono = t.mono->renamed(drop, keep);
  }
  return out;
}

std::size_t rank_of(const std::vector<ClassVector>& vecs) {
  std::set<std::string> keys;
  for (const auto& v : vecs)
    for (const auto& [k, _] : v) keys.insert(k);
  const std::vector<std::string> cols(keys.begin(), keys.end());
  std::vector<std::vector<Rational>> m;
  for (const auto& v : vecs) {
    std::vector<Rational> row;
    for (const auto& k : cols) {
      const auto it = v.find(k);
      row.push_back(it == v.end() ? Rational(0) : it->second);
    }
    m.push_back(std::move(row));
  }
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols.size() && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      if (m[i][c] == 0) continue;
      const Rational f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols.size(); ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

const Relation& lookup(const RelationTable& table, const std::string& name) {
  for (const auto& r : table.relations)
    if (r.name == name) return r;
  throw InputError("meta check refers to unknown relation '" + name + "'");
}

std::vector<ClassVector> vectors_of(const RelationTable& table, const std::vector<std::string>& names) {
  std::vector<ClassVector> out;
  for (const auto& n : names) out.push_back(class_vector(lookup(table, n)));
  return out;
}

std::vector<ClassVector> joined(std::vector<ClassVector> a, const std::vector<ClassVector>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

MetaOutcome run_meta(const RelationTable& table, const MetaRelation& meta) {
  MetaOutcome out{meta.name, false, ""};
  const auto mod = vectors_of(table, meta.modulo);
  const std::size_t mod_rank = rank_of(mod);
  if (meta.check == "combination") {
    ClassVector diff = class_vector(lookup(table, meta.target));
    for (const auto& [c, name] : meta.combination)
      for (const auto& [k, v] : class_vector(lookup(table, name))) diff[k] -= c * v;
    for (auto it = diff.begin(); it != diff.end();)
      it = it->second == 0 ? diff.erase(it) : std::next(it);
    out.passed = rank_of(joined(mod, {diff})) == mod_rank;
    out.detail = out.passed ? "combination reproduces " + meta.target
                            : std::to_string(diff.size()) + " monomial classes left over";
    return out;
  }
  std::vector<ClassVector> tr;
  for (const auto& n : meta.traced)
    tr.push_back(class_vector(traced(lookup(table, n), meta.labels[0], meta.labels[1])));
  const auto span = vectors_of(table, meta.span_of);
  const std::size_t rt = rank_of(joined(tr, mod)), rs = rank_of(joined(span, mod));
  const std::size_t rall = rank_of(joined(joined(tr, span), mod));
  out.passed = rt == rs && rs == rall;
  std::ostringstream os;
  os << "rank traced=" << rt << " target=" << rs << " joint=" << rall << " (modulo rank " << mod_rank << ")";
  out.detail = os.str();
  return out;
}

}  // namespace

std::vector<MetaOutcome> verify_meta(const RelationTable& table) {
  std::vector<MetaOutcome> out;
  for (const auto& m : table.meta) {
    try {
      out.push_back(run_meta(table, m));
    } catch (const std::exception& e) {
      out.push_back({m.name, false, e.what()});
    }
  }
  return out;
}

}  // namespace riemann
