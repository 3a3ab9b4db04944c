#include "ecag/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace ecag {

namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kCodeFormat = "ecag-code/1";

[[noreturn]] void malformed(const std::string& why) { throw Error(ErrorKind::InvalidInput, why); }

Json parse(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    malformed(std::string("not valid JSON: ") + e.what());
  }
}

const Json& field(const Json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) malformed(std::string("missing field '") + key + "'");
  return obj.at(key);
}

BigInt big(const Json& v, const std::string& what) {
  if (!v.is_string()) malformed(what + " must be a decimal string");
  try {
    return parse_bigint(v.get<std::string>());
  } catch (const Error&) {
    malformed(what + " is not a decimal integer: '" + v.get<std::string>() + "'");
  }
}

std::size_t count(const Json& v, const std::string& what) {
  if (!v.is_number_unsigned()) malformed(what + " must be a non-negative integer");
  return v.get<std::size_t>();
}

Json point_json(const CurvePoint& pt) {
  if (pt.is_infinity()) return "O";
  return Json{{"x", to_string(pt.x())}, {"y", to_string(pt.y())}};
}

CurvePoint point_from(const Json& v, const FieldPtr& f, const std::string& what) {
  if (v.is_string() && v.get<std::string>() == "O") return CurvePoint::infinity();
  if (!v.is_object()) malformed(what + " must be \"O\" or {\"x\", \"y\"}");
  return CurvePoint::affine(FieldElement(f, big(field(v, "x"), what + ".x")),
                            FieldElement(f, big(field(v, "y"), what + ".y")));
}

BigInt residue(const Json& v, const BigInt& p, const std::string& what) {
  BigInt x = big(v, what);
  if (x < 0 || x >= p) malformed(what + " = " + to_string(x) + " is not in [0, p)");
  return x;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string write_instance_file(const InstanceFile& file) {
  Json j;
  if (file.q) j["q"] = to_string(*file.q);
  Json a = Json::array();
  for (const auto& v : file.a) a.push_back(to_string(v));
  j["a"] = std::move(a);
  j["b"] = to_string(file.b);
  j["k"] = file.k;
  return dump(j);
}

InstanceFile read_instance_file(std::string_view text) {
  const Json j = parse(text);
  InstanceFile file;
  if (j.is_object() && j.contains("q")) file.q = big(j.at("q"), "q");
  const Json& a = field(j, "a");
  if (!a.is_array()) malformed("'a' must be a list of decimal strings");
  for (std::size_t i = 0; i < a.size(); ++i) file.a.push_back(big(a[i], "a[" + std::to_string(i) + "]"));
  file.b = big(field(j, "b"), "b");
  file.k = count(field(j, "k"), "k");
  return file;
}

SubsetSumInstance to_instance(const InstanceFile& file, Rng& rng, bool admissible) {
  if (!file.q) return lift_plain_subset_sum(file.a, file.b, file.k, rng, admissible);
  SubsetSumInstance inst{*file.q, file.a, file.b, file.k};
  return admissible ? normalize(std::move(inst)) : reduce_mod_q(std::move(inst));
}

InstanceFile from_instance(const SubsetSumInstance& inst) { return InstanceFile{inst.q, inst.a, inst.b, inst.k}; }

std::string write_code_file(const CodeFile& file) {
  const CodeInstance& code = file.code;
  Json j;
  j["format"] = kCodeFormat;
  j["p"] = to_string(code.p());
  j["n"] = code.n();
  j["k"] = code.k();
  Json rows = Json::array();
  for (std::size_t r = 0; r < code.k(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < code.n(); ++c) row.push_back(to_string(code.gen.value(r, c)));
    rows.push_back(std::move(row));
  }
  j["generator_matrix"] = std::move(rows);
  if (file.received) {
    Json rec = Json::array();
    for (const auto& e : *file.received) rec.push_back(to_string(e));
    j["received"] = std::move(rec);
  }
  if (file.claim) j["claim"] = Json{{"yes_distance", file.claim->yes_distance}, {"no_distance", file.claim->no_distance}};

  const Provenance& prov = code.provenance;
  Json pj = Json::object();
  if (!prov.variant.empty()) pj["variant"] = prov.variant;
  if (!prov.divisor.empty()) pj["divisor"] = prov.divisor;
  if (prov.q) pj["q"] = to_string(*prov.q);
  if (prov.curve_a && prov.curve_b) pj["curve"] = Json{{"a", to_string(*prov.curve_a)}, {"b", to_string(*prov.curve_b)}};
  if (prov.generator) pj["G"] = point_json(*prov.generator);
  if (prov.pole) pj["Q"] = point_json(*prov.pole);
  if (!prov.points.empty()) {
    Json pts = Json::array();
    for (const auto& pt : prov.points) pts.push_back(point_json(pt));
    pj["points"] = std::move(pts);
  }
  if (prov.seed) pj["seed"] = std::to_string(*prov.seed);
  j["provenance"] = std::move(pj);
  return dump(j);
}

CodeFile read_code_file(std::string_view text) {
  const Json j = parse(text);
  if (j.is_object() && j.contains("format") && j.at("format") != kCodeFormat) {
    malformed("unsupported code file format " + j.at("format").dump());
  }
  const BigInt p = big(field(j, "p"), "p");
  FieldPtr f;
  try {
    f = make_field(p);
  } catch (const Error& e) {
    malformed(std::string("p: ") + e.what());
  }
  const std::size_t n = count(field(j, "n"), "n");
  const std::size_t k = count(field(j, "k"), "k");

  const Json& rows = field(j, "generator_matrix");
  if (!rows.is_array() || rows.size() != k) malformed("generator_matrix must have k = " + std::to_string(k) + " rows");
  std::vector<BigInt> values;
  values.reserve(k * n);
  for (std::size_t r = 0; r < k; ++r) {
    if (!rows[r].is_array() || rows[r].size() != n) {
      malformed("generator_matrix row " + std::to_string(r) + " must have n = " + std::to_string(n) + " entries");
    }
    for (std::size_t c = 0; c < n; ++c) {
      values.push_back(residue(rows[r][c], p, "generator_matrix[" + std::to_string(r) + "][" + std::to_string(c) + "]"));
    }
  }

  CodeFile file{CodeInstance{Matrix(f, k, n, std::move(values)), {}}, std::nullopt, std::nullopt};

  if (j.contains("received")) {
    const Json& rec = j.at("received");
    if (!rec.is_array() || rec.size() != n) malformed("received must have n = " + std::to_string(n) + " entries");
    Vector v;
    for (std::size_t c = 0; c < n; ++c) v.emplace_back(f, residue(rec[c], p, "received[" + std::to_string(c) + "]"));
    file.received = std::move(v);
  }
  if (j.contains("claim")) {
    const Json& cl = j.at("claim");
    file.claim = Claim{count(field(cl, "yes_distance"), "claim.yes_distance"),
                       count(field(cl, "no_distance"), "claim.no_distance")};
  }
  if (j.contains("provenance")) {
    const Json& pj = j.at("provenance");
    if (!pj.is_object()) malformed("provenance must be an object");
    Provenance& prov = file.code.provenance;
    if (pj.contains("variant")) prov.variant = pj.at("variant").get<std::string>();
    if (pj.contains("divisor")) prov.divisor = pj.at("divisor").get<std::string>();
    if (pj.contains("q")) prov.q = big(pj.at("q"), "provenance.q");
    if (pj.contains("curve")) {
      prov.curve_a = big(field(pj.at("curve"), "a"), "provenance.curve.a");
      prov.curve_b = big(field(pj.at("curve"), "b"), "provenance.curve.b");
    }
    if (pj.contains("G")) prov.generator = point_from(pj.at("G"), f, "provenance.G");
    if (pj.contains("Q")) prov.pole = point_from(pj.at("Q"), f, "provenance.Q");
    if (pj.contains("points")) {
      const Json& pts = pj.at("points");
      if (!pts.is_array()) malformed("provenance.points must be a list");
      for (std::size_t i = 0; i < pts.size(); ++i) {
        prov.points.push_back(point_from(pts[i], f, "provenance.points[" + std::to_string(i) + "]"));
      }
    }
    if (pj.contains("seed")) {
      const BigInt seed = big(pj.at("seed"), "provenance.seed");
      if (seed < 0 || seed > BigInt(static_cast<unsigned long>(UINT64_MAX))) malformed("provenance.seed out of range");
      prov.seed = seed.get_ui();
    }
  }
  return file;
}

CodeFile to_code_file(const ReductionOutput& out) { return CodeFile{out.code, out.received, out.claim}; }

std::string write_group_params(const GroupParams& params) {
  Json j;
  j["q"] = to_string(params.q);
  j["p"] = to_string(params.p);
  j["curve"] = Json{{"a", to_string(params.curve.a())}, {"b", to_string(params.curve.b())}};
  j["G"] = point_json(params.generator);
  return dump(j);
}

GroupParams read_group_params(std::string_view text) {
  const Json j = parse(text);
  const BigInt q = big(field(j, "q"), "q");
  const BigInt p = big(field(j, "p"), "p");
  const Json& cj = field(j, "curve");
  try {
    Curve curve(p, big(field(cj, "a"), "curve.a"), big(field(cj, "b"), "curve.b"));
    CurvePoint g = point_from(field(j, "G"), curve.field(), "G");
    if (!curve.contains(g)) malformed("G is not on the curve");
    return GroupParams{q, p, std::move(curve), std::move(g)};
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::InvalidInput) throw;
    malformed(e.what());
  }
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::InvalidInput, "cannot write '" + path + "'");
  out << text;
}

}  // namespace ecag
