// Command-line front end: JSON in, JSON (or a plain table) out.
//
// Exit codes: 0 success, 1 verification failure or --expect mismatch,
// 2 usage or input error.

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "riemann/json_io.hpp"

namespace {

using namespace riemann;
using json_io::json;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct Options {
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> samples;
  int bound = 9;
  std::string domain = "general";
  std::string catalog;
  std::string set = "all";
  std::string out;
  std::string format = "json";
  std::string input = "-";
  std::string export_samples;
  std::string import_samples;
  std::string path = "auto";
  std::optional<std::size_t> expect;
  std::size_t confirm = 8;
  bool sparse = false;
};

std::string read_text(const std::string& file) {
  if (file == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(file);
  if (!in) throw InputError("cannot open '" + file + "'");
  return {std::istreambuf_iterator<char>(in), {}};
}

void write_text(const std::string& file, const std::string& text) {
  if (file.empty() || file == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(file);
  if (!out) throw InputError("cannot write '" + file + "'");
  out << text;
}

void emit(const Options& o, const json& doc, const std::string& table) {
  write_text(o.out, o.format == "table" ? table : doc.dump(2) + "\n");
}

Domain parse_domain(const std::string& s) { return s == "einstein" ? Domain::einstein : Domain::general; }

EvalPath parse_path(const std::string& s) {
  if (s == "tensor") return EvalPath::tensor;
  if (s == "matrix") return EvalPath::matrix;
  return EvalPath::automatic;
}

std::uint64_t need_seed(const Options& o) {
  if (!o.seed) throw CLI::RequiredError("--seed");
  return *o.seed;
}

FBlocks<Rational> read_blocks(const std::string& file) {
  const json doc = json_io::parse(read_text(file), file);
  if (json_io::is_fblocks(doc)) return json_io::fblocks(doc);
  const Rank4<Rational> T = json_io::tensor(doc);
  return decompose(T);
}

std::string matrix_rows(const Mat3<Rational>& m) {
  std::ostringstream os;
  for (int i = 0; i < 3; ++i) {
    os << "  ";
    for (int k = 0; k < 3; ++k) os << (k ? " " : "") << to_string(m(i, k));
    os << "\n";
  }
  return os.str();
}

std::string blocks_table(const FBlocks<Rational>& F) {
  return "A_plus\n" + matrix_rows(F.a_plus()) + "A_minus\n" + matrix_rows(F.a_minus()) + "B\n" +
         matrix_rows(F.b());
}

int run_thooft(const Options& o) {
  const auto rep = thooft::verify_identities();
  std::ostringstream t;
  for (const auto& c : rep.checks)
    t << (c.passed ? "pass " : "FAIL ") << c.name << " (" << c.evaluations << ")"
      << (c.passed ? "" : " at " + c.counterexample) << "\n";
  emit(o, json_io::report(rep), t.str());
  return rep.all_passed() ? kOk : kFailed;
}

int run_generate(const Options& o) {
  const GenConfig cfg{need_seed(o), o.bound, parse_domain(o.domain)};
  if (!o.samples) {
    const auto F = random_fblocks(cfg);
    emit(o, json_io::fblocks(F), blocks_table(F));
    return kOk;
  }
  const auto list = random_samples(cfg, *o.samples);
  json arr = json::array();
  std::string table;
  for (std::size_t k = 0; k < list.size(); ++k) {
    arr.push_back(json_io::fblocks(list[k]));
    table += "# sample " + std::to_string(k) + "\n" + blocks_table(list[k]);
  }
  emit(o, arr, table);
  return kOk;
}

int run_decompose(const Options& o) {
  const json doc = json_io::parse(read_text(o.input), o.input);
  const auto F = decompose(json_io::tensor(doc));
  emit(o, json_io::fblocks(F), blocks_table(F));
  return kOk;
}

int run_reconstruct(const Options& o) {
  const json doc = json_io::parse(read_text(o.input), o.input);
  const auto T = reconstruct(json_io::fblocks(doc));
  std::ostringstream t;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d)
          if (T(a, b, c, d) != 0)
            t << "R" << a + 1 << b + 1 << c + 1 << d + 1 << " = " << to_string(T(a, b, c, d)) << "\n";
  emit(o, json_io::tensor(T, o.sparse), t.str());
  return kOk;
}

int run_invariants(const Options& o) {
  const Catalog& cat = find_catalog(o.catalog);
  const Sample s(read_blocks(o.input));
  if (cat.domain == Domain::einstein && !s.blocks().is_einstein())
    throw InputError("catalog '" + cat.name + "' needs an Einstein curvature (B = 0)");
  const EvalPath path = parse_path(o.path);
  json values = json::object();
  std::ostringstream t;
  for (const auto& e : cat.entries) {
    const auto v = evaluate_entry(e, s, path, cat.free);
    values[e.label] = json_io::values(v);
    t << e.label << "\t";
    for (std::size_t k = 0; k < v.values.size(); ++k) t << (k ? " " : "") << to_string(v.values[k]);
    t << "\n";
  }
  emit(o, {{"schema", json_io::kSchema}, {"catalog", cat.name}, {"values", values}}, t.str());
  return kOk;
}

int run_verify(const Options& o) {
  const std::uint64_t seed = need_seed(o);
  const std::size_t count = o.samples.value_or(50);
  const VerificationReport rep =
      o.set == "all" ? verify_all(seed, count) : verify_all(seed, count, relations_in_set(o.set));
  std::ostringstream t;
  for (const auto& r : rep.relations) {
    t << (r.as_expected() ? "pass " : "FAIL ") << r.name << " [" << to_string(r.domain) << ", "
      << r.samples << " samples]";
    if (r.known_bad) t << " known-bad form, " << (r.passed ? "unexpectedly holds" : "rejected");
    t << "\n";
  }
  for (const auto& m : rep.meta) t << (m.passed ? "pass " : "FAIL ") << m.name << ": " << m.detail << "\n";
  emit(o, json_io::report(rep), t.str());
  return rep.all_passed() ? kOk : kFailed;
}

SampleMatrix sample_matrix(const Options& o, const Catalog& cat, std::size_t* nsamples) {
  const EvalPath path = parse_path(o.path);
  if (!o.import_samples.empty()) {
    const json doc = json_io::parse(read_text(o.import_samples), o.import_samples);
    SampleMatrix M = build_sample_matrix(cat, json_io::samples(doc), path);
    if (doc.is_object()) {
      M.seed = doc.value("seed", std::uint64_t{0});
      M.bound = doc.value("bound", 9);
    }
    *nsamples = M.nsamples;
    return M;
  }
  const std::uint64_t seed = need_seed(o);
  *nsamples = o.samples.value_or(default_samples(cat));
  const GenConfig cfg{seed, o.bound, cat.domain};
  const auto list = random_samples(cfg, *nsamples);
  if (!o.export_samples.empty())
    write_text(o.export_samples, json_io::samples(list, seed, o.bound, cat.domain).dump(2) + "\n");
  SampleMatrix M = build_sample_matrix(cat, list, path);
  M.seed = seed;
  M.bound = o.bound;
  return M;
}

std::string rank_table(const RankReport& rep) {
  std::ostringstream t;
  t << "rank " << rep.rank << " of " << rep.columns.size() << (rep.stable() ? "" : " (unstable)") << "\n";
  t << "pivots:";
  for (const auto& p : rep.pivot_labels) t << " " << p;
  t << "\n";
  for (const auto& v : rep.nullspace) t << "null: " << render_combination(v, rep.columns) << " = 0\n";
  for (const auto& w : rep.warnings) t << "warning: " << w << "\n";
  return t.str();
}

int check_expect(const Options& o, std::size_t rank) {
  if (o.expect && *o.expect != rank) {
    std::cerr << "rank " << rank << " differs from the expected " << *o.expect << "\n";
    return kFailed;
  }
  return kOk;
}

int run_rank(const Options& o) {
  const Catalog& cat = find_catalog(o.catalog);
  std::size_t n = 0;
  const SampleMatrix M = sample_matrix(o, cat, &n);
  const RankReport rep = exact_rank(M);
  for (const auto& w : rep.warnings) std::cerr << "warning: " << w << "\n";
  emit(o, json_io::report(rep, M), rank_table(rep));
  return check_expect(o, rep.rank);
}

int run_discover(const Options& o) {
  const Catalog& cat = find_catalog(o.catalog);
  if (!o.import_samples.empty()) throw InputError("discover draws fresh confirmation samples; use rank with --import-samples");
  std::size_t n = 0;
  const SampleMatrix M = sample_matrix(o, cat, &n);
  const DiscoveryReport rep = discover_syzygies(cat, n, M.seed, o.bound, o.confirm, parse_path(o.path));
  for (const auto& w : rep.rank.warnings) std::cerr << "warning: " << w << "\n";
  std::string table = rank_table(rep.rank);
  for (const auto& s : rep.confirmed) table += "confirmed: " + s.str + "\n";
  for (const auto& s : rep.rejected) table += "rejected: " + s.str + "\n";
  emit(o, json_io::report(rep, M), table);
  return check_expect(o, rep.rank.rank);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact curvature-invariant toolkit for four-dimensional Riemann tensors"};
  app.require_subcommand(1);
  Options o;

  auto common_out = [&](CLI::App* sub) {
    sub->add_option("--out", o.out, "Write the report to a file instead of stdout");
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "table"}));
  };
  auto seeded = [&](CLI::App* sub) {
    sub->add_option("--seed", o.seed, "Random seed (required)");
    sub->add_option("--bound", o.bound, "Entries drawn from [-bound, bound]")->check(CLI::Range(1, 1000));
  };

  auto* thooft = app.add_subcommand("thooft-check", "Exhaustively check the 't Hooft symbol identities");
  common_out(thooft);

  auto* generate = app.add_subcommand("generate", "Random integer FBlocks");
  seeded(generate);
  generate->add_option("--samples", o.samples, "Emit an array of this many samples");
  generate->add_option("--domain", o.domain)->check(CLI::IsMember({"general", "einstein"}));
  common_out(generate);

  auto* decomp = app.add_subcommand("decompose", "Riemann tensor JSON to FBlocks");
  decomp->add_option("input", o.input, "Tensor JSON file ('-' for stdin)");
  common_out(decomp);

  auto* recon = app.add_subcommand("reconstruct", "FBlocks JSON to Riemann tensor");
  recon->add_option("input", o.input, "FBlocks JSON file ('-' for stdin)");
  recon->add_flag("--sparse", o.sparse, "Emit nonzero components only");
  common_out(recon);

  auto* inv = app.add_subcommand("invariants", "Evaluate a catalog on one curvature");
  inv->add_option("input", o.input, "FBlocks or tensor JSON file ('-' for stdin)");
  inv->add_option("--catalog", o.catalog)->required();
  inv->add_option("--path", o.path, "Evaluation form")->check(CLI::IsMember({"auto", "tensor", "matrix"}));
  common_out(inv);

  auto* verify = app.add_subcommand("verify", "Check the relation table on random samples");
  verify->add_option("--set", o.set)
      ->check(CLI::IsMember({"all", "quadratic", "cubic", "quartic", "quintic", "einstein", "pseudo", "known_bad"}));
  verify->add_option("--samples", o.samples, "Samples per domain (default 50)");
  verify->add_option("--seed", o.seed, "Random seed (required)");
  common_out(verify);

  auto rank_like = [&](CLI::App* sub) {
    sub->add_option("--catalog", o.catalog)->required();
    sub->add_option("--samples", o.samples, "Number of samples (default 2n + 8)");
    seeded(sub);
    sub->add_option("--expect", o.expect, "Exit 1 unless the rank equals this");
    sub->add_option("--path", o.path, "Evaluation form")->check(CLI::IsMember({"auto", "tensor", "matrix"}));
    sub->add_option("--export-samples", o.export_samples, "Save the drawn samples as JSON");
    common_out(sub);
  };
  auto* rank = app.add_subcommand("rank", "Exact rank and null space of a catalog");
  rank_like(rank);
  rank->add_option("--import-samples", o.import_samples, "Use samples from a JSON file");
  auto* discover = app.add_subcommand("discover", "Null vectors of a catalog, confirmed on fresh samples");
  rank_like(discover);
  discover->add_option("--confirm", o.confirm, "Fresh samples per candidate");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*thooft) return run_thooft(o);
    if (*generate) return run_generate(o);
    if (*decomp) return run_decompose(o);
    if (*recon) return run_reconstruct(o);
    if (*inv) return run_invariants(o);
    if (*verify) return run_verify(o);
    if (*rank) return run_rank(o);
    if (*discover) return run_discover(o);
  } catch (const CLI::RequiredError& e) {
    std::cerr << "error: " << e.what() << " (randomized subcommands take no default seed)\n";
    return kUsage;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
