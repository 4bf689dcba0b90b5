#include "gfd/io.hpp"

#include <fstream>
#include <map>
#include <regex>
#include <set>

namespace gfd {

namespace {

void allow_only(const json& j, std::initializer_list<const char*> keys, const std::string& where) {
  if (!j.is_object()) throw ParseError(where + ": expected an object");
  std::set<std::string> ok(keys.begin(), keys.end());
  for (const auto& [k, v] : j.items())
    if (!ok.count(k)) throw ParseError(where + ": unknown field \"" + k + "\"");
}

const json& need(const json& j, const char* key, const std::string& where) {
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(where + ": missing field \"" + key + "\"");
  return *it;
}

std::int64_t need_int(const json& j, const char* key, const std::string& where) {
  const json& v = need(j, key, where);
  if (!v.is_number_integer()) throw ParseError(where + "." + key + ": expected an integer");
  return v.get<std::int64_t>();
}

const json& need_array(const json& j, const char* key, const std::string& where) {
  const json& v = need(j, key, where);
  if (!v.is_array()) throw ParseError(where + "." + key + ": expected an array");
  return v;
}

std::string at_index(const std::string& where, const char* key, std::size_t i) {
  return where + "." + key + "[" + std::to_string(i) + "]";
}

// A module together with the coordinate change from the generators the
// document speaks about to the reduced generators.
struct Coords {
  Module module;
  Matrix to_reduced, from_reduced, relations;
};

Coords module_body(const Ring& r, const json& j, const std::string& where) {
  if (j.contains("orders")) {
    allow_only(j, {"orders"}, where);
    const json& o = need_array(j, "orders", where);
    Vec d;
    for (std::size_t i = 0; i < o.size(); ++i)
      d.push_back(element_from_json(r, o[i], at_index(where, "orders", i)));
    Matrix a = Matrix::diagonal(r, d);
    Presented p = present_module(a);
    return {p.module, p.to_reduced, p.from_reduced, a};
  }
  allow_only(j, {"presentation"}, where);
  Matrix a = matrix_from_json(r, need(j, "presentation", where), where + ".presentation");
  Presented p = present_module(a);
  return {p.module, p.to_reduced, p.from_reduced, a};
}

// Morphism from a matrix on document generators, checked against the
// document relations before the change of coordinates.
Morphism morphism_from(const Coords& s, const Coords& t, const Matrix& m, const std::string& where) {
  if (m.rows() != t.relations.rows() || m.cols() != s.relations.rows())
    throw ValidationError(where + ": matrix is " + std::to_string(m.rows()) + "x" +
                          std::to_string(m.cols()) + ", expected " +
                          std::to_string(t.relations.rows()) + "x" +
                          std::to_string(s.relations.rows()));
  Matrix img = t.to_reduced * (m * s.relations);
  for (int c = 0; c < img.cols(); ++c)
    if (!t.module.is_zero_element(img.col(c)))
      throw ValidationError(where + ": map does not respect relation " + std::to_string(c));
  return Morphism(s.module, t.module, t.to_reduced * m * s.from_reduced);
}

struct ParsedComplex {
  Complex complex;
  int lo = 0;
  std::vector<Coords> coords;
  Coords at(int n) const {
    int i = n - lo;
    if (i < 0 || i >= static_cast<int>(coords.size())) {
      Module z = Module::zero(complex.ring());
      Matrix e(complex.ring(), 0, 0);
      return {z, e, e, e};
    }
    return coords[static_cast<std::size_t>(i)];
  }
};

ParsedComplex complex_body(const Ring& r, const json& j, const std::string& where) {
  allow_only(j, {"lo", "modules", "differentials"}, where);
  ParsedComplex out;
  out.lo = static_cast<int>(need_int(j, "lo", where));
  const json& mods = need_array(j, "modules", where);
  const json& diffs = need_array(j, "differentials", where);
  std::size_t expect = mods.empty() ? 0 : mods.size() - 1;
  if (diffs.size() != expect)
    throw ParseError(where + ": " + std::to_string(mods.size()) + " modules need " +
                     std::to_string(expect) + " differentials, got " +
                     std::to_string(diffs.size()));
  std::vector<Module> ms;
  std::vector<Morphism> ds;
  for (std::size_t i = 0; i < mods.size(); ++i) {
    out.coords.push_back(module_body(r, mods[i], at_index(where, "modules", i)));
    ms.push_back(out.coords.back().module);
  }
  for (std::size_t i = 0; i < mods.size(); ++i) {
    if (i == 0) {
      ds.push_back(Morphism::zero(ms[0], Module::zero(r)));
      continue;
    }
    std::string w = at_index(where, "differentials", i - 1);
    ds.push_back(morphism_from(out.coords[i], out.coords[i - 1],
                               matrix_from_json(r, diffs[i - 1], w), w));
  }
  try {
    out.complex = Complex(r, out.lo, ms, ds);
  } catch (const NotAComplex& e) {
    throw ValidationError(e.what());
  }
  return out;
}

std::pair<int, std::vector<Morphism>> parts_body(const Ring& r, const ParsedComplex& s,
                                                 const ParsedComplex& t, const json& j,
                                                 const std::string& where) {
  int lo = static_cast<int>(need_int(j, "lo", where));
  const json& ps = need_array(j, "parts", where);
  std::vector<Morphism> parts;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    int n = lo + static_cast<int>(i);
    std::string w = at_index(where, "parts", i);
    parts.push_back(morphism_from(s.at(n), t.at(n), matrix_from_json(r, ps[i], w), w));
  }
  return {lo, parts};
}

json parts_to_json(const ChainMap& f) {
  int lo = std::min(f.source().lo(), f.target().lo());
  int hi = std::max(f.source().hi(), f.target().hi());
  json ps = json::array();
  for (int n = lo; n <= hi; ++n) ps.push_back(matrix_to_json(f.at(n).matrix()));
  return {{"lo", lo}, {"parts", ps}};
}

ChainMap chain_map_body(const Ring& r, const ParsedComplex& s, const ParsedComplex& t,
                        const json& j, const std::string& where) {
  auto [lo, parts] = parts_body(r, s, t, j, where);
  try {
    return ChainMap(s.complex, t.complex, lo, parts);
  } catch (const DimensionMismatch& e) {
    throw ValidationError(where + ": " + e.what());
  }
}

BundleFlavor flavor_from_string(const std::string& s, const std::string& where) {
  for (auto f : {BundleFlavor::projective, BundleFlavor::dg_projective, BundleFlavor::injective_co,
                 BundleFlavor::gp_precover})
    if (to_string(f) == s) return f;
  throw ParseError(where + ": unknown flavor \"" + s + "\"");
}

std::optional<int> optional_int(const json& j, const char* key, const std::string& where) {
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) return std::nullopt;
  if (!it->is_number_integer()) throw ParseError(where + "." + key + ": expected an integer");
  return it->get<int>();
}

json optional_to_json(const std::optional<int>& v) { return v ? json(*v) : json(nullptr); }

// Splits a document body into per-factor bodies.
std::vector<json> component_bodies(const RingHandle& h, const json& body, const std::string& where) {
  std::size_t k = h.factors().size();
  if (body.contains("components")) {
    const json& cs = need_array(body, "components", where);
    if (cs.size() != k)
      throw ValidationError(where + ": " + h.name() + " has " + std::to_string(k) +
                            " local factors, got " + std::to_string(cs.size()) + " components");
    return {cs.begin(), cs.end()};
  }
  if (k > 1 && h.spec().kind == RingSpec::Kind::product)
    throw ParseError(where + ": documents over a product ring need \"components\"");
  // a composite modulus: integer entries reduce into every local factor
  return std::vector<json>(k, body);
}

json strip_header(const json& j, std::initializer_list<const char*> keep) {
  json body = json::object();
  for (const char* k : keep)
    if (j.contains(k)) body[k] = j.at(k);
  return body;
}

template <class T, class F>
OverRing<T> parse_document(const json& j, const char* type,
                           std::initializer_list<const char*> body_keys, F&& per_factor) {
  std::string where = type;
  if (document_type(j) != type)
    throw ParseError(where + ": expected a \"" + where + "\" document, got \"" +
                     j.at("type").get<std::string>() + "\"");
  std::set<std::string> ok = {"version", "type", "ring", "components"};
  ok.insert(body_keys.begin(), body_keys.end());
  for (const auto& [k, v] : j.items())
    if (!ok.count(k)) throw ParseError(where + ": unknown field \"" + k + "\"");
  OverRing<T> out{make_ring(ring_spec_from_json(need(j, "ring", where))), {}};
  json body = strip_header(j, body_keys);
  if (j.contains("components")) {
    if (!body.empty()) throw ParseError(where + ": give either \"components\" or a body, not both");
    body["components"] = j.at("components");
  }
  auto bodies = component_bodies(out.ring, body, where);
  for (std::size_t i = 0; i < bodies.size(); ++i) {
    std::string w = bodies.size() > 1 ? at_index(where, "components", i) : where;
    out.parts.push_back(per_factor(out.ring.factors()[i], bodies[i], w));
  }
  return out;
}

template <class T, class F>
json make_document(const OverRing<T>& x, const char* type, F&& body) {
  json d = {{"version", kDocumentVersion}, {"type", type}, {"ring", ring_spec_to_json(x.ring.spec())}};
  if (x.parts.size() == 1) {
    json b = body(x.parts[0]);
    for (auto& [k, v] : b.items()) d[k] = v;
    return d;
  }
  json cs = json::array();
  for (const T& p : x.parts) cs.push_back(body(p));
  d["components"] = cs;
  return d;
}

}  // namespace

// ---------------------------------------------------------------- rings

RingSpec ring_spec_from_json(const json& j, const std::string& where) {
  if (j.is_string()) return ring_spec_from_name(j.get<std::string>());
  std::string kind = need(j, "kind", where).get<std::string>();
  if (kind == "Z" || kind == "Integers") {
    allow_only(j, {"kind"}, where);
    return RingSpec::integers();
  }
  if (kind == "Zmod") {
    allow_only(j, {"kind", "n"}, where);
    return RingSpec::zmod(need_int(j, "n", where));
  }
  if (kind == "TruncPoly") {
    allow_only(j, {"kind", "p", "n"}, where);
    return RingSpec::trunc_poly(need_int(j, "p", where), need_int(j, "n", where));
  }
  if (kind == "Product") {
    allow_only(j, {"kind", "factors"}, where);
    const json& fs = need_array(j, "factors", where);
    std::vector<RingSpec> out;
    for (std::size_t i = 0; i < fs.size(); ++i)
      out.push_back(ring_spec_from_json(fs[i], at_index(where, "factors", i)));
    return RingSpec::product(out);
  }
  throw ParseError(where + ": unknown ring kind \"" + kind + "\"");
}

json ring_spec_to_json(const RingSpec& s) {
  switch (s.kind) {
    case RingSpec::Kind::integers: return {{"kind", "Z"}};
    case RingSpec::Kind::zmod: return {{"kind", "Zmod"}, {"n", s.n}};
    case RingSpec::Kind::trunc_poly: return {{"kind", "TruncPoly"}, {"p", s.p}, {"n", s.n}};
    case RingSpec::Kind::product: {
      json fs = json::array();
      for (const auto& f : s.factors) fs.push_back(ring_spec_to_json(f));
      return {{"kind", "Product"}, {"factors", fs}};
    }
  }
  return {};
}

RingSpec ring_spec_from_name(const std::string& name) {
  std::string s;
  for (char c : name)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (!s.empty() && s.front() == '{') {
    json j;
    try {
      j = json::parse(s);
    } catch (const json::parse_error& e) {
      throw ParseError(std::string("ring: ") + e.what());
    }
    return ring_spec_from_json(j);
  }
  if (s == "Z" || s == "Integers") return RingSpec::integers();
  std::smatch m;
  static const std::regex zmod(R"(Zmod\(?(\d+)\)?)");
  static const std::regex trunc(R"(TruncPoly\(?(\d+)[,_](\d+)\)?)");
  if (std::regex_match(s, m, zmod)) return RingSpec::zmod(std::stoll(m[1]));
  if (std::regex_match(s, m, trunc)) return RingSpec::trunc_poly(std::stoll(m[1]), std::stoll(m[2]));
  if (s.rfind("Product(", 0) == 0 && s.back() == ')') {
    std::vector<RingSpec> fs;
    int depth = 0;
    std::size_t start = 8;
    for (std::size_t i = 8; i + 1 < s.size(); ++i) {
      if (s[i] == '(') ++depth;
      if (s[i] == ')') --depth;
      if (s[i] == ',' && depth == 0) {
        fs.push_back(ring_spec_from_name(s.substr(start, i - start)));
        start = i + 1;
      }
    }
    fs.push_back(ring_spec_from_name(s.substr(start, s.size() - 1 - start)));
    return RingSpec::product(fs);
  }
  throw ParseError("unknown ring \"" + name + "\"");
}

// ---------------------------------------------------------------- values

json element_to_json(const Ring& r, Elem a) {
  if (r.kind() != RingKind::trunc_poly) return a;
  auto c = r.coefficients(a);
  while (c.size() > 1 && c.back() == 0) c.pop_back();
  return c;
}

Elem element_from_json(const Ring& r, const json& j, const std::string& where) {
  if (j.is_number_integer()) return r.from_integer(j.get<std::int64_t>());
  if (j.is_array() && r.kind() == RingKind::trunc_poly) {
    std::vector<std::int64_t> c;
    for (const auto& x : j) {
      if (!x.is_number_integer()) throw ParseError(where + ": coefficients must be integers");
      c.push_back(x.get<std::int64_t>());
    }
    if (static_cast<int>(c.size()) > r.length())
      throw ParseError(where + ": polynomial has degree >= " + std::to_string(r.length()));
    return r.from_coefficients(c);
  }
  throw ParseError(where + ": expected a ring element of " + r.name());
}

json matrix_to_json(const Matrix& m) {
  json e = json::array();
  for (Elem a : m.data()) e.push_back(element_to_json(m.ring(), a));
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", e}};
}

Matrix matrix_from_json(const Ring& r, const json& j, const std::string& where) {
  allow_only(j, {"rows", "cols", "entries"}, where);
  auto rows = need_int(j, "rows", where), cols = need_int(j, "cols", where);
  if (rows < 0 || cols < 0) throw ParseError(where + ": negative shape");
  const json& e = need_array(j, "entries", where);
  if (static_cast<std::int64_t>(e.size()) != rows * cols)
    throw ParseError(where + ": " + std::to_string(rows) + "x" + std::to_string(cols) +
                     " matrix needs " + std::to_string(rows * cols) + " entries, got " +
                     std::to_string(e.size()));
  Vec v;
  for (std::size_t i = 0; i < e.size(); ++i) v.push_back(element_from_json(r, e[i], at_index(where, "entries", i)));
  return Matrix(r, static_cast<int>(rows), static_cast<int>(cols), v);
}

json ext_int_to_json(ExtInt v) {
  if (v.is_finite()) return v.value();
  return v.to_string();
}

ExtInt ext_int_from_json(const json& j, const std::string& where) {
  if (j.is_number_integer()) return ExtInt(j.get<int>());
  if (j == "inf") return ExtInt::pos_inf();
  if (j == "-inf") return ExtInt::neg_inf();
  throw ParseError(where + ": expected an integer, \"inf\" or \"-inf\"");
}

// ---------------------------------------------------------------- bodies

json module_to_json(const Module& m) {
  json o = json::array();
  for (Elem a : m.orders()) o.push_back(element_to_json(m.ring(), a));
  return {{"orders", o}};
}

json complex_to_json(const Complex& c) {
  json mods = json::array(), diffs = json::array();
  for (int n = c.lo(); n <= c.hi(); ++n) {
    mods.push_back(module_to_json(c.at(n)));
    if (n > c.lo()) diffs.push_back(matrix_to_json(c.d(n).matrix()));
  }
  return {{"lo", c.lo()}, {"modules", mods}, {"differentials", diffs}};
}

json chain_map_to_json(const ChainMap& f) {
  json j = parts_to_json(f);
  j["source"] = complex_to_json(f.source());
  j["target"] = complex_to_json(f.target());
  return j;
}

json bundle_to_json(const ResolutionBundle& b) {
  json kp = json::array();
  for (const auto& [n, v] : b.kernel_profile) kp.push_back({n, ext_int_to_json(v)});
  return {{"flavor", to_string(b.flavor)},
          {"target", complex_to_json(b.target)},
          {"resolution", complex_to_json(b.resolution)},
          {"map", parts_to_json(b.map)},
          {"valid_through", optional_to_json(b.valid_through)},
          {"kernel_profile", kp}};
}

json complete_resolution_to_json(const CompleteResolution& c) {
  json j = bundle_to_json(c.P);
  j["T"] = complex_to_json(c.T);
  j["u"] = parts_to_json(c.u);
  j["threshold"] = ext_int_to_json(c.threshold);
  j["period"] = optional_to_json(c.period);
  j["window"] = {c.window_lo, c.window_hi};
  j["certificate"] = c.certificate;
  return j;
}

Complex complex_from_json(const Ring& r, const json& j, const std::string& where) {
  return complex_body(r, j, where).complex;
}

ChainMap chain_map_from_json(const Ring& r, const json& j, const std::string& where) {
  allow_only(j, {"source", "target", "lo", "parts"}, where);
  ParsedComplex s = complex_body(r, need(j, "source", where), where + ".source");
  ParsedComplex t = complex_body(r, need(j, "target", where), where + ".target");
  return chain_map_body(r, s, t, j, where);
}

ResolutionBundle bundle_from_json(const Ring& r, const json& j, const std::string& where) {
  allow_only(j, {"flavor", "target", "resolution", "map", "valid_through", "kernel_profile"}, where);
  ResolutionBundle b;
  b.flavor = flavor_from_string(need(j, "flavor", where).get<std::string>(), where + ".flavor");
  ParsedComplex t = complex_body(r, need(j, "target", where), where + ".target");
  ParsedComplex p = complex_body(r, need(j, "resolution", where), where + ".resolution");
  const json& m = need(j, "map", where);
  allow_only(m, {"lo", "parts"}, where + ".map");
  b.target = t.complex;
  b.resolution = p.complex;
  b.map = chain_map_body(r, p, t, m, where + ".map");
  b.valid_through = optional_int(j, "valid_through", where);
  if (j.contains("kernel_profile")) {
    const json& kp = need_array(j, "kernel_profile", where);
    for (std::size_t i = 0; i < kp.size(); ++i) {
      std::string w = at_index(where, "kernel_profile", i);
      if (!kp[i].is_array() || kp[i].size() != 2 || !kp[i][0].is_number_integer())
        throw ParseError(w + ": expected [degree, value]");
      b.kernel_profile[kp[i][0].get<int>()] = ext_int_from_json(kp[i][1], w);
    }
  }
  return b;
}

// ---------------------------------------------------------------- documents

std::string document_type(const json& j) {
  if (!j.is_object()) throw ParseError("document: expected an object");
  if (!j.contains("version")) throw ParseError("document: missing field \"version\"");
  if (j.at("version") != kDocumentVersion)
    throw ParseError("document: unsupported version " + j.at("version").dump());
  const json& t = need(j, "type", "document");
  if (!t.is_string()) throw ParseError("document.type: expected a string");
  return t.get<std::string>();
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

json module_document(const OverRing<Module>& m) {
  return make_document(m, "module", module_to_json);
}
json complex_document(const OverRing<Complex>& c) {
  return make_document(c, "complex", complex_to_json);
}
json chain_map_document(const OverRing<ChainMap>& f) {
  return make_document(f, "chainmap", chain_map_to_json);
}
json bundle_document(const OverRing<ResolutionBundle>& b) {
  return make_document(b, "bundle", bundle_to_json);
}
json ses_document(const OverRing<ShortExactSequence>& s) {
  return make_document(s, "ses", [](const ShortExactSequence& x) {
    return json{{"left", complex_to_json(x.i.source())},
                {"middle", complex_to_json(x.i.target())},
                {"right", complex_to_json(x.p.target())},
                {"i", parts_to_json(x.i)},
                {"p", parts_to_json(x.p)}};
  });
}

OverRing<Module> parse_module_document(const json& j) {
  return parse_document<Module>(j, "module", {"orders", "presentation"},
                                [](const Ring& r, const json& b, const std::string& w) {
                                  return module_body(r, b, w).module;
                                });
}

OverRing<Complex> parse_complex_document(const json& j) {
  return parse_document<Complex>(j, "complex", {"lo", "modules", "differentials"},
                                 [](const Ring& r, const json& b, const std::string& w) {
                                   return complex_from_json(r, b, w);
                                 });
}

OverRing<ChainMap> parse_chain_map_document(const json& j) {
  return parse_document<ChainMap>(j, "chainmap", {"source", "target", "lo", "parts"},
                                  [](const Ring& r, const json& b, const std::string& w) {
                                    return chain_map_from_json(r, b, w);
                                  });
}

OverRing<ResolutionBundle> parse_bundle_document(const json& j) {
  return parse_document<ResolutionBundle>(
      j, "bundle", {"flavor", "target", "resolution", "map", "valid_through", "kernel_profile"},
      [](const Ring& r, const json& b, const std::string& w) { return bundle_from_json(r, b, w); });
}

OverRing<ShortExactSequence> parse_ses_document(const json& j) {
  return parse_document<ShortExactSequence>(
      j, "ses", {"left", "middle", "right", "i", "p"},
      [](const Ring& r, const json& b, const std::string& w) {
        allow_only(b, {"left", "middle", "right", "i", "p"}, w);
        ParsedComplex a = complex_body(r, need(b, "left", w), w + ".left");
        ParsedComplex m = complex_body(r, need(b, "middle", w), w + ".middle");
        ParsedComplex c = complex_body(r, need(b, "right", w), w + ".right");
        allow_only(need(b, "i", w), {"lo", "parts"}, w + ".i");
        allow_only(need(b, "p", w), {"lo", "parts"}, w + ".p");
        ShortExactSequence s{chain_map_body(r, a, m, b.at("i"), w + ".i"),
                             chain_map_body(r, m, c, b.at("p"), w + ".p")};
        if (!s.verify()) throw ValidationError(w + ": NotShortExact");
        return s;
      });
}

// ---------------------------------------------------------------- reports

json table_to_json(const CohomologyTable& t) {
  json groups = json::array();
  for (int n = t.lo; n <= t.hi; ++n) {
    json inv = json::array();
    const Module& g = t.at(n);
    for (Elem a : g.invariants()) inv.push_back(element_to_json(g.ring(), a));
    groups.push_back(inv);
  }
  return {{"theory", to_string(t.theory)},
          {"range", {t.lo, t.hi}},
          {"groups", groups},
          {"provenance", t.provenance}};
}

json dimension_report_to_json(const DimensionReport& r) {
  return {{"kind", to_string(r.kind)},
          {"value", ext_int_to_json(r.value)},
          {"g", optional_to_json(r.g)},
          {"certificates", r.certificates},
          {"cross_check", ext_int_to_json(r.cross_check)}};
}

json verdict_to_json(const Verdict& v) {
  return {{"name", v.name}, {"holds", v.holds}, {"detail", v.detail}};
}

json sequence_report_to_json(const LongExactSequenceReport& r) {
  json tables = json::array(), positions = json::array(), maps = json::array();
  for (const auto& t : r.tables) tables.push_back(table_to_json(t));
  const SequenceReport& s = r.sequence;
  for (std::size_t k = 0; k < s.objects.size(); ++k) {
    json inv = json::array();
    for (Elem a : s.objects[k].invariants()) inv.push_back(element_to_json(s.objects[k].ring(), a));
    json ex = s.exact[k] ? json(*s.exact[k]) : json(nullptr);
    positions.push_back({{"label", k < s.labels.size() ? s.labels[k] : ""}, {"group", inv}, {"exact", ex}});
  }
  for (const auto& m : s.maps) maps.push_back(matrix_to_json(m.matrix()));
  return {{"range", {r.lo, r.hi}},
          {"tables", tables},
          {"positions", positions},
          {"maps", maps},
          {"checked", r.checked()},
          {"failures", r.failures()},
          {"exact", r.exact()}};
}

}  // namespace gfd
