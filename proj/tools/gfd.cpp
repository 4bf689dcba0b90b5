// gfd: file-driven front end to the workbench.
//
//   gfd homology --in complex.json
//   gfd dims --in complex.json --format table
//   gfd ext --in m.json --in n.json --theory bar --range 0,4
//   gfd les --in ses.json --in n.json --theory gor
//   gfd compare --in m.json --in n.json --range 1,5
//   gfd verify --ring Zmod4 --seed 7 --suite am
//   gfd fixtures --ring Zmod4 --seed 1 --count 5 --out dir/
//
// Exit codes: 0 pass, 1 computational error, 2 validation error, 3 verdict
// failure.

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <regex>
#include <sstream>

#include <CLI11.hpp>

#include "gfd/fixtures.hpp"
#include "gfd/io.hpp"
#include "gfd/suites.hpp"

using namespace gfd;

namespace {

enum Exit { kPass = 0, kComputation = 1, kValidation = 2, kVerdict = 3 };

struct Options {
  std::vector<std::string> in;
  std::string ring;
  std::string range;
  std::string theory;
  std::string policy = "lemma7";
  std::uint64_t seed = 1;
  std::string suite;
  std::string format = "json";
  int count = 5;
  std::string kind = "complex";
  std::string out;
  int tail = 3;
};

json load(const std::string& arg) {
  std::string s = arg;
  auto first = s.find_first_not_of(" \t\n");
  if (first != std::string::npos && s[first] == '{') {
    try {
      return json::parse(s);
    } catch (const json::parse_error& e) {
      throw ParseError(std::string("inline document: ") + e.what());
    }
  }
  return read_json_file(arg);
}

std::pair<int, int> parse_range(const std::string& s, std::pair<int, int> fallback) {
  if (s.empty()) return fallback;
  static const std::regex re(R"(\s*(-?\d+)\s*(?:,|:|\.\.)\s*(-?\d+)\s*)");
  std::smatch m;
  if (!std::regex_match(s, m, re)) throw ParseError("--range: expected lo,hi; got \"" + s + "\"");
  int lo = std::stoi(m[1]), hi = std::stoi(m[2]);
  if (lo > hi) throw ValidationError("--range: lo > hi");
  return {lo, hi};
}

CohomologyOptions cohomology_options(const Options& o) {
  CohomologyOptions c;
  c.policy = precover_policy_from_string(o.policy);
  c.seed = o.seed;
  c.tail_search = o.tail;
  return c;
}

std::vector<OverRing<Complex>> complexes(const Options& o, std::size_t want) {
  if (o.in.size() != want)
    throw ValidationError("expected " + std::to_string(want) + " --in documents, got " +
                          std::to_string(o.in.size()));
  std::vector<OverRing<Complex>> out;
  for (const auto& f : o.in) {
    json j = load(f);
    // a module document is read as the module in degree 0
    if (document_type(j) == "module") {
      auto m = parse_module_document(j);
      OverRing<Complex> c{m.ring, {}};
      for (const auto& p : m.parts) c.parts.push_back(Complex::concentrated(p, 0));
      out.push_back(c);
    } else {
      out.push_back(parse_complex_document(j));
    }
  }
  for (const auto& c : out)
    if (!(c.ring == out[0].ring)) throw ValidationError("RingMismatch: inputs over different rings");
  return out;
}

json header(const std::string& command, const RingHandle& r) {
  return {{"version", kDocumentVersion}, {"command", command}, {"ring", ring_spec_to_json(r.spec())}};
}

json groups_row(const Module& g) {
  json inv = json::array();
  for (Elem a : g.invariants()) inv.push_back(element_to_json(g.ring(), a));
  return inv;
}

// ------------------------------------------------------------------ commands

int cmd_homology(const Options& o, json& report) {
  auto c = complexes(o, 1)[0];
  report = header("homology", c.ring);
  report["components"] = json::array();
  for (const auto& x : c.parts) {
    json degrees = json::array();
    for (int n = x.lo(); n <= x.hi(); ++n)
      degrees.push_back({{"degree", n}, {"group", groups_row(homology_at(x, n).module)}});
    report["components"].push_back({{"factor", x.ring().name()},
                                     {"degrees", degrees},
                                     {"sup_h", ext_int_to_json(sup_h(x))},
                                     {"inf_h", ext_int_to_json(inf_h(x))},
                                     {"exact", is_exact(x)}});
  }
  return kPass;
}

int cmd_dims(const Options& o, json& report) {
  auto c = complexes(o, 1)[0];
  report = header("dims", c.ring);
  report["components"] = json::array();
  std::map<std::string, ExtInt> combined;
  bool ok = true;
  for (const auto& x : c.parts) {
    DimensionSuite s = dimension_report_suite(x, o.seed);
    json reps = json::array(), verdicts = json::array();
    for (const auto& r : s.reports) {
      reps.push_back(dimension_report_to_json(r));
      auto [it, fresh] = combined.emplace(to_string(r.kind), r.value);
      if (!fresh) it->second = std::max(it->second, r.value);
    }
    for (const auto& v : s.verdicts) verdicts.push_back(verdict_to_json(v));
    ok = ok && s.all_hold();
    report["components"].push_back({{"factor", x.ring().name()}, {"reports", reps}, {"verdicts", verdicts}});
  }
  // over a product the dimension is the largest one among the factors
  json all = json::object();
  for (const auto& [k, v] : combined) all[k] = ext_int_to_json(v);
  report["dimensions"] = all;
  report["verdicts_hold"] = ok;
  return ok ? kPass : kVerdict;
}

int cmd_ext(const Options& o, json& report) {
  auto in = complexes(o, 2);
  auto [lo, hi] = parse_range(o.range, {0, 4});
  Theory t = theory_from_string(o.theory.empty() ? "abs" : o.theory);
  report = header("ext", in[0].ring);
  report["components"] = json::array();
  for (std::size_t i = 0; i < in[0].parts.size(); ++i) {
    json tab = table_to_json(ext_groups(in[0].parts[i], in[1].parts[i], lo, hi, t, cohomology_options(o)));
    tab["factor"] = in[0].parts[i].ring().name();
    report["components"].push_back(tab);
  }
  return kPass;
}

int cmd_les(const Options& o, json& report) {
  auto [lo, hi] = parse_range(o.range, {0, 4});
  if (o.in.size() != 2) throw ValidationError("les needs two --in documents");
  json first = load(o.in[0]);
  bool ok = true;
  if (document_type(first) == "ses") {
    auto ses = parse_ses_document(first);
    Options rest = o;
    rest.in = {o.in[1]};
    auto n = complexes(rest, 1)[0];
    if (!(n.ring == ses.ring)) throw ValidationError("RingMismatch: inputs over different rings");
    std::vector<Theory> ts = o.theory.empty() ? std::vector<Theory>{Theory::gor, Theory::bar}
                                              : std::vector<Theory>{theory_from_string(o.theory)};
    report = header("les", ses.ring);
    report["sequence"] = "first-variable";
    report["components"] = json::array();
    for (std::size_t i = 0; i < ses.parts.size(); ++i) {
      json per = json::array();
      for (Theory t : ts) {
        auto r = les_first_variable(ses.parts[i], n.parts[i], lo, hi, t, cohomology_options(o));
        json j = sequence_report_to_json(r);
        j["theory"] = to_string(t);
        j["factor"] = n.parts[i].ring().name();
        ok = ok && r.exact();
        per.push_back(j);
      }
      report["components"].push_back(per);
    }
  } else {
    auto in = complexes(o, 2);
    report = header("les", in[0].ring);
    report["sequence"] = "gorenstein-absolute-tate";
    report["components"] = json::array();
    for (std::size_t i = 0; i < in[0].parts.size(); ++i) {
      auto r = am_sequence(in[0].parts[i], in[1].parts[i], lo, hi, cohomology_options(o));
      json j = sequence_report_to_json(r);
      j["factor"] = in[0].parts[i].ring().name();
      ok = ok && r.exact();
      report["components"].push_back(j);
    }
  }
  report["exact"] = ok;
  return ok ? kPass : kVerdict;
}

int cmd_compare(const Options& o, json& report) {
  auto in = complexes(o, 2);
  report = header("compare", in[0].ring);
  report["components"] = json::array();
  bool ok = true;
  for (std::size_t i = 0; i < in[0].parts.size(); ++i) {
    const Complex& m = in[0].parts[i];
    auto [lo, hi] = parse_range(o.range, {m.hi() + 1, m.hi() + 5});
    json rows = json::array();
    for (const auto& c : compare_bar_tate(m, in[1].parts[i], lo, hi, cohomology_options(o))) {
      rows.push_back({{"degree", c.degree},
                      {"bar", groups_row(c.bar)},
                      {"tate", groups_row(c.tate)},
                      {"isomorphic", c.isomorphic}});
      ok = ok && c.isomorphic;
    }
    report["components"].push_back({{"factor", m.ring().name()}, {"degrees", rows}});
  }
  report["isomorphic"] = ok;
  return ok ? kPass : kVerdict;
}

int cmd_verify(const Options& o, json& report) {
  if (o.suite.empty()) throw ValidationError("verify needs --suite (a suite name or \"all\")");
  std::vector<std::string> names = o.suite == "all" ? suite_names() : std::vector<std::string>{o.suite};
  std::vector<Ring> rings;
  report = {{"version", kDocumentVersion}, {"command", "verify"}, {"seed", o.seed}};
  if (!o.ring.empty()) {
    RingHandle h = make_ring(ring_spec_from_name(o.ring));
    rings = h.factors();
    report["ring"] = ring_spec_to_json(h.spec());
  }
  report["suites"] = json::array();
  bool ok = true;
  for (const auto& name : names) {
    SuiteResult r = run_suite(name, o.seed, rings);
    // no applicable factor: nothing was checked, which is not a failure
    const bool skipped = r.rings.empty() && r.failed == 0;
    report["suites"].push_back({{"suite", r.name},
                                {"claim", r.claim},
                                {"rings", r.rings},
                                {"checked", r.checked},
                                {"failed", r.failed},
                                {"failures", r.failures},
                                {"notes", r.notes},
                                {"skipped", skipped},
                                {"pass", r.passed()}});
    ok = ok && (skipped || r.passed());
  }
  report["pass"] = ok;
  return ok ? kPass : kVerdict;
}

json fixture_document(const RingHandle& h, const std::string& kind, std::uint64_t seed, int index) {
  std::vector<FixtureGenerator> gens;
  for (std::size_t i = 0; i < h.factors().size(); ++i)
    gens.emplace_back(h.factors()[i], seed * 1000003ull + static_cast<std::uint64_t>(index) * 131 + i);
  auto each = [&](auto draw) {
    using T = decltype(draw(gens[0]));
    OverRing<T> x{h, {}};
    for (auto& g : gens) x.parts.push_back(draw(g));
    return x;
  };
  json doc;
  if (kind == "module") {
    doc = module_document(each([](FixtureGenerator& g) { return g.module(); }));
    parse_module_document(doc);
  } else if (kind == "complex" || kind == "exact" || kind == "nonexact") {
    auto c = each([&](FixtureGenerator& g) {
      return kind == "exact" ? g.exact_complex() : kind == "nonexact" ? g.nonexact_complex() : g.complex();
    });
    doc = complex_document(c);
    if (parse_complex_document(doc).parts != c.parts) throw ValidationError("fixture failed to round-trip");
  } else if (kind == "chainmap") {
    doc = chain_map_document(each([](FixtureGenerator& g) {
      Complex x = g.complex(), y = g.complex();
      return g.chain_map(x, y);
    }));
    parse_chain_map_document(doc);
  } else if (kind == "ses") {
    doc = ses_document(each([](FixtureGenerator& g) { return g.split_ses(true); }));
    parse_ses_document(doc);
  } else {
    throw ValidationError("--kind must be module, complex, exact, nonexact, chainmap or ses");
  }
  return doc;
}

int cmd_fixtures(const Options& o, json& report) {
  if (o.ring.empty()) throw ValidationError("fixtures needs --ring");
  if (o.count < 0) throw ValidationError("--count must be nonnegative");
  RingHandle h = make_ring(ring_spec_from_name(o.ring));
  json docs = json::array();
  for (int i = 0; i < o.count; ++i) docs.push_back(fixture_document(h, o.kind, o.seed, i));
  report = header("fixtures", h);
  report["kind"] = o.kind;
  report["seed"] = o.seed;
  if (o.out.empty()) {
    report["documents"] = docs;
    return kPass;
  }
  std::filesystem::create_directories(o.out);
  json files = json::array();
  for (int i = 0; i < o.count; ++i) {
    std::ostringstream name;
    name << o.kind << "_" << std::setw(3) << std::setfill('0') << i << ".json";
    auto path = std::filesystem::path(o.out) / name.str();
    std::ofstream f(path);
    f << docs[static_cast<std::size_t>(i)].dump(2) << "\n";
    if (!f) throw Error("IoError", "cannot write " + path.string());
    files.push_back(path.string());
  }
  report["files"] = files;
  return kPass;
}

// ------------------------------------------------------------------ tables

std::string cell(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    if (v.empty()) return "0";
    std::string s;
    for (const auto& x : v) {
      if (!s.empty()) s += " + ";
      // orders are normalized to p^k or x^k; zero (in either encoding) means free
      int top = -1;
      if (x.is_array())
        for (std::size_t i = 0; i < x.size(); ++i)
          if (x[i] != 0) top = static_cast<int>(i);
      const bool free = x.is_array() ? top < 0 : x == 0;
      s += free ? "R" : "R/" + (x.is_array() ? "x^" + std::to_string(top) : x.dump());
    }
    return s;
  }
  return v.dump();
}

void render_table(const json& r, std::ostream& out) {
  const std::string cmd = r.value("command", "");
  if (r.contains("ring")) out << "ring: " << make_ring(ring_spec_from_json(r["ring"])).name() << "\n";
  if (cmd == "verify") {
    for (const auto& s : r["suites"]) {
      out << std::left << std::setw(10) << s["suite"].get<std::string>() << " "
          << (s["skipped"].get<bool>() ? "SKIP" : s["pass"].get<bool>() ? "PASS" : "FAIL") << "  "
          << s["checked"] << " checks, " << s["failed"] << " failed  (" << s["claim"].get<std::string>() << ")\n";
      for (const auto& n : s["notes"]) out << "    note: " << n.get<std::string>() << "\n";
      for (const auto& f : s["failures"]) out << "    " << f.get<std::string>() << "\n";
    }
    return;
  }
  for (const auto& c : r.value("components", json::array())) {
    if (cmd == "homology") {
      out << c["factor"].get<std::string>() << "  sup H = " << cell(c["sup_h"]) << "\n";
      for (const auto& d : c["degrees"])
        out << "  H_" << std::setw(3) << std::left << d["degree"].get<int>() << " " << cell(d["group"]) << "\n";
    } else if (cmd == "dims") {
      out << c["factor"].get<std::string>() << "\n";
      for (const auto& rep : c["reports"])
        out << "  " << std::setw(4) << std::left << rep["kind"].get<std::string>() << std::setw(6)
            << cell(rep["value"]) << " g = " << cell(rep["g"]) << "\n";
      for (const auto& v : c["verdicts"])
        out << "  [" << (v["holds"].get<bool>() ? "ok" : "FAIL") << "] " << v["name"].get<std::string>() << "\n";
    } else if (cmd == "ext") {
      out << c["factor"].get<std::string>() << "  " << c["theory"].get<std::string>() << "\n";
      int lo = c["range"][0];
      for (std::size_t i = 0; i < c["groups"].size(); ++i)
        out << "  H^" << std::setw(3) << std::left << lo + static_cast<int>(i) << " " << cell(c["groups"][i]) << "\n";
    } else if (cmd == "compare") {
      out << c["factor"].get<std::string>() << "\n  " << std::setw(6) << std::left << "j" << std::setw(16)
          << "bar" << std::setw(16) << "tate" << "\n";
      for (const auto& d : c["degrees"])
        out << "  " << std::setw(6) << d["degree"].get<int>() << std::setw(16) << cell(d["bar"])
            << std::setw(16) << cell(d["tate"]) << (d["isomorphic"].get<bool>() ? "" : "  differ") << "\n";
    } else if (cmd == "les") {
      for (const auto& seq : c.is_array() ? c : json::array({c})) {
        out << seq["factor"].get<std::string>() << "  " << seq.value("theory", "") << "  "
            << seq["checked"] << " positions checked, " << seq["failures"] << " inexact\n";
        for (const auto& p : seq["positions"])
          out << "  " << std::setw(14) << std::left << p["label"].get<std::string>() << std::setw(20)
              << cell(p["group"]) << (p["exact"].is_null() ? "" : p["exact"].get<bool>() ? "exact" : "NOT EXACT")
              << "\n";
      }
    }
  }
  if (cmd == "dims")
    for (const auto& [k, v] : r["dimensions"].items()) out << k << " = " << cell(v) << "\n";
  if (cmd == "fixtures") out << r.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gorenstein homological algebra workbench"};
  app.require_subcommand(1);
  Options o;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--in", o.in, "input document (file path or inline JSON)");
    sub->add_option("--range", o.range, "degree range lo,hi");
    sub->add_option("--theory", o.theory, "abs | gor | bar | tate");
    sub->add_option("--policy", o.policy, "special precover policy: lemma7 | identity")
        ->check(CLI::IsMember({"lemma7", "identity"}));
    sub->add_option("--seed", o.seed, "seed for randomized choices");
    sub->add_option("--format", o.format, "json | table")->check(CLI::IsMember({"json", "table"}));
    sub->add_option("--ring", o.ring, "catalog ring, e.g. Zmod4, Z, TruncPoly(2,3)");
    sub->add_option("--tail", o.tail, "degrees above sup H searched for a complete resolution threshold");
  };
  std::map<std::string, std::function<int(const Options&, json&)>> commands = {
      {"homology", cmd_homology}, {"dims", cmd_dims},       {"ext", cmd_ext},
      {"les", cmd_les},           {"compare", cmd_compare}, {"verify", cmd_verify},
      {"fixtures", cmd_fixtures}};
  const std::map<std::string, std::string> help = {
      {"homology", "homology of a complex"},
      {"dims", "fd, gfd, gpd and gid with the relations between them"},
      {"ext", "a cohomology table"},
      {"les", "long exact sequence of a pair of complexes or of a short exact sequence"},
      {"compare", "generalized Tate vs Tate cohomology degree by degree"},
      {"verify", "run a seeded verification suite"},
      {"fixtures", "emit random documents"}};
  for (const auto& [name, fn] : commands) {
    CLI::App* sub = app.add_subcommand(name, help.at(name));
    add_common(sub);
    if (name == "verify") sub->add_option("--suite", o.suite, "suite name or all");
    if (name == "fixtures") {
      sub->add_option("--count", o.count, "number of documents");
      sub->add_option("--kind", o.kind, "module | complex | exact | nonexact | chainmap | ses");
      sub->add_option("--out", o.out, "output directory (default: print)");
    }
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kPass : kValidation;
  }
  std::string name = app.get_subcommands().front()->get_name();
  json report;
  int code = kPass;
  try {
    code = commands.at(name)(o, report);
  } catch (const Error& e) {
    bool validation = e.name() == "ParseError" || e.name() == "ValidationError";
    json err = {{"error", e.name()}, {"message", e.what()}};
    std::cerr << (o.format == "table" ? e.name() + ": " + e.what() : err.dump()) << "\n";
    return validation ? kValidation : kComputation;
  } catch (const std::exception& e) {
    std::cerr << json{{"error", "InternalError"}, {"message", e.what()}}.dump() << "\n";
    return kComputation;
  }
  if (o.format == "table")
    render_table(report, std::cout);
  else
    std::cout << report.dump(2) << "\n";
  return code;
}
