#include "riemann/json_io.hpp"

#include <sstream>

namespace riemann::json_io {

namespace {

std::string integer_text(const Integer& z) {
  std::ostringstream os;
  os << z;
  return os.str();
}

json integers(const std::vector<Integer>& v) {
  json out = json::array();
  for (const auto& z : v) {
    if (fits_int64(Rational(z))) out.push_back(static_cast<std::int64_t>(z));
    else out.push_back(integer_text(z));
  }
  return out;
}

std::string str_domain(Domain d) { return d == Domain::einstein ? "einstein" : "general"; }

}  // namespace

json rational(const Rational& q) {
  if (fits_int64(q)) return static_cast<std::int64_t>(numerator(q));
  return to_string(q);
}

Rational rational(const json& j, const std::string& path) {
  if (j.is_number_integer()) return j.is_number_unsigned() ? Rational(j.get<std::uint64_t>()) : Rational(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const InputError& e) {
      throw InputError(path + ": " + e.what());
    }
  }
  throw InputError(path + ": expected an integer or a \"p/q\" string");
}

json matrix(const Mat3<Rational>& m) {
  json out = json::array();
  for (int i = 0; i < 3; ++i) {
    json row = json::array();
    for (int k = 0; k < 3; ++k) row.push_back(rational(m(i, k)));
    out.push_back(std::move(row));
  }
  return out;
}

Mat3<Rational> matrix(const json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 3) throw InputError(path + ": expected a 3x3 array");
  Mat3<Rational> m;
  for (int i = 0; i < 3; ++i) {
    const std::string rp = path + "[" + std::to_string(i) + "]";
    if (!j[i].is_array() || j[i].size() != 3) throw InputError(rp + ": expected a row of 3 entries");
    for (int k = 0; k < 3; ++k) m(i, k) = rational(j[i][k], rp + "[" + std::to_string(k) + "]");
  }
  return m;
}

json fblocks(const FBlocks<Rational>& F) {
  return {{"A_plus", matrix(F.a_plus())}, {"A_minus", matrix(F.a_minus())}, {"B", matrix(F.b())}};
}

bool is_fblocks(const json& j) { return j.is_object() && j.contains("A_plus"); }

FBlocks<Rational> fblocks(const json& j, const std::string& path) {
  if (!j.is_object()) throw InputError(path + ": expected an object with A_plus, A_minus, B");
  for (const char* key : {"A_plus", "A_minus", "B"})
    if (!j.contains(key)) throw InputError(path + ": missing \"" + key + "\"");
  try {
    return FBlocks<Rational>(matrix(j["A_plus"], path + ".A_plus"), matrix(j["A_minus"], path + ".A_minus"),
                             matrix(j["B"], path + ".B"));
  } catch (const InputError& e) {
    const std::string what = e.what();
    if (what.rfind(path, 0) == 0) throw;
    throw InputError(path + ": " + what);
  }
}

json tensor(const Rank4<Rational>& T, bool sparse) {
  if (sparse) {
    json list = json::array();
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        for (int c = 0; c < 4; ++c)
          for (int d = 0; d < 4; ++d)
            if (T(a, b, c, d) != 0)
              list.push_back({{"idx", {a + 1, b + 1, c + 1, d + 1}}, {"val", rational(T(a, b, c, d))}});
    return {{"sparse", std::move(list)}};
  }
  json out = json::array();
  for (int a = 0; a < 4; ++a) {
    json ja = json::array();
    for (int b = 0; b < 4; ++b) {
      json jb = json::array();
      for (int c = 0; c < 4; ++c) {
        json jc = json::array();
        for (int d = 0; d < 4; ++d) jc.push_back(rational(T(a, b, c, d)));
        jb.push_back(std::move(jc));
      }
      ja.push_back(std::move(jb));
    }
    out.push_back(std::move(ja));
  }
  return out;
}

Rank4<Rational> tensor(const json& j, const std::string& path) {
  Rank4<Rational> T;
  auto read_sparse = [&](const json& list, const std::string& lp) {
    for (std::size_t k = 0; k < list.size(); ++k) {
      const std::string ep = lp + "[" + std::to_string(k) + "]";
      const json& rec = list[k];
      if (!rec.is_object() || !rec.contains("idx") || !rec.contains("val"))
        throw InputError(ep + ": expected {\"idx\": [a,b,c,d], \"val\": q}");
      const json& idx = rec["idx"];
      if (!idx.is_array() || idx.size() != 4) throw InputError(ep + ".idx: expected four indices");
      int i[4];
      for (int n = 0; n < 4; ++n) {
        if (!idx[n].is_number_integer() || idx[n].get<int>() < 1 || idx[n].get<int>() > 4)
          throw InputError(ep + ".idx[" + std::to_string(n) + "]: index must be 1..4");
        i[n] = idx[n].get<int>() - 1;
      }
      T(i[0], i[1], i[2], i[3]) = rational(rec["val"], ep + ".val");
    }
  };
  if (j.is_object() && j.contains("sparse")) {
    if (!j["sparse"].is_array()) throw InputError(path + ".sparse: expected an array");
    read_sparse(j["sparse"], path + ".sparse");
    return T;
  }
  if (j.is_array() && !j.empty() && j[0].is_object()) {
    read_sparse(j, path);
    return T;
  }
  if (!j.is_array() || j.size() != 4) throw InputError(path + ": expected a 4x4x4x4 array or sparse records");
  for (int a = 0; a < 4; ++a) {
    const std::string pa = path + "[" + std::to_string(a) + "]";
    if (!j[a].is_array() || j[a].size() != 4) throw InputError(pa + ": expected 4 entries");
    for (int b = 0; b < 4; ++b) {
      const std::string pb = pa + "[" + std::to_string(b) + "]";
      if (!j[a][b].is_array() || j[a][b].size() != 4) throw InputError(pb + ": expected 4 entries");
      for (int c = 0; c < 4; ++c) {
        const std::string pc = pb + "[" + std::to_string(c) + "]";
        if (!j[a][b][c].is_array() || j[a][b][c].size() != 4) throw InputError(pc + ": expected 4 entries");
        for (int d = 0; d < 4; ++d) T(a, b, c, d) = rational(j[a][b][c][d], pc + "[" + std::to_string(d) + "]");
      }
    }
  }
  return T;
}

json samples(const std::vector<FBlocks<Rational>>& s, std::uint64_t seed, int bound, Domain domain) {
  json list = json::array();
  for (const auto& F : s) list.push_back(fblocks(F));
  return {{"schema", kSchema}, {"seed", seed}, {"bound", bound}, {"domain", str_domain(domain)},
          {"samples", std::move(list)}};
}

std::vector<FBlocks<Rational>> samples(const json& j) {
  const json* list = &j;
  std::string path = "$";
  if (j.is_object()) {
    if (!j.contains("samples")) throw InputError("$: missing \"samples\"");
    list = &j["samples"];
    path = "$.samples";
  }
  if (!list->is_array()) throw InputError(path + ": expected an array of FBlocks");
  std::vector<FBlocks<Rational>> out;
  for (std::size_t k = 0; k < list->size(); ++k)
    out.push_back(fblocks((*list)[k], path + "[" + std::to_string(k) + "]"));
  return out;
}

json values(const IndexedValue<Rational>& v) {
  if (v.rank() == 0) return rational(v.scalar());
  json out = json::array();
  for (const auto& x : v.values) out.push_back(rational(x));
  return {{"labels", v.labels}, {"components", std::move(out)}};
}

json report(const thooft::IdentityReport& rep) {
  json checks = json::array();
  for (const auto& c : rep.checks) {
    json jc = {{"name", c.name}, {"passed", c.passed}, {"evaluations", c.evaluations}};
    if (!c.passed) jc["counterexample"] = c.counterexample;
    checks.push_back(std::move(jc));
  }
  return {{"schema", kSchema}, {"all_passed", rep.all_passed()}, {"checks", std::move(checks)}};
}

json report(const VerificationReport& rep) {
  json rels = json::array();
  for (const auto& r : rep.relations) {
    json jr = {{"name", r.name}, {"domain", str_domain(r.domain)}, {"samples", r.samples},
               {"passed", r.passed}};
    if (r.known_bad) {
      jr["known_bad"] = true;
      jr["as_expected"] = r.as_expected();
    }
    if (r.counterexample) {
      jr["counterexample"] = fblocks(*r.counterexample);
      json res = json::array();
      for (const auto& x : r.residual.values) res.push_back(rational(x));
      jr["residual"] = r.residual.labels.empty() ? res[0] : json{{"labels", r.residual.labels}, {"components", res}};
    }
    rels.push_back(std::move(jr));
  }
  json meta = json::array();
  for (const auto& m : rep.meta) meta.push_back({{"name", m.name}, {"passed", m.passed}, {"detail", m.detail}});
  return {{"schema", kSchema}, {"seed", rep.seed}, {"count", rep.count}, {"all_passed", rep.all_passed()},
          {"relations", std::move(rels)}, {"meta", std::move(meta)}};
}

namespace {

json provenance(const SampleMatrix& M) {
  return {{"catalog", M.catalog}, {"seed", M.seed}, {"bound", M.bound}, {"domain", str_domain(M.domain)},
          {"nsamples", M.nsamples}, {"rows", M.rows.size()}, {"columns", M.columns}};
}

}  // namespace

json report(const RankReport& rep, const SampleMatrix& M) {
  json nulls = json::array();
  for (const auto& v : rep.nullspace) nulls.push_back(integers(v));
  return {{"schema", kSchema}, {"provenance", provenance(M)}, {"rank", rep.rank},
          {"pivot_labels", rep.pivot_labels}, {"nullspace", std::move(nulls)},
          {"half_rank", rep.half_rank}, {"stable", rep.stable()}, {"warnings", rep.warnings}};
}

json report(const DiscoveryReport& rep, const SampleMatrix& M) {
  json out = report(rep.rank, M);
  auto list = [](const std::vector<Syzygy>& s) {
    json a = json::array();
    for (const auto& z : s) a.push_back({{"coefficients", integers(z.coefficients)}, {"relation", z.str}});
    return a;
  };
  out["confirm_samples"] = rep.confirm_samples;
  out["confirmed"] = list(rep.confirmed);
  out["rejected"] = list(rep.rejected);
  return out;
}

json parse(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(source + ": malformed JSON (" + e.what() + ")");
  }
}

}  // namespace riemann::json_io
