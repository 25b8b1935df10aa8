#include "grm/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace grm {

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::string as_string(const Json& j, const char* what) {
  if (!j.is_string()) fail(std::string(what) + " must be a string");
  return j.get<std::string>();
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  fail("expected a rational string or an integer, got " + j.dump());
}

int int_from_json(const Json& j, const char* what) {
  if (!j.is_number_integer()) fail(std::string(what) + " must be an integer");
  return j.get<int>();
}

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (int r = 0; r < m.rows; ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.cols; ++c) row.push_back(m.at(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const Json& j, int rows, int cols, const PrimeField& f) {
  if (!j.is_array() || static_cast<int>(j.size()) != rows) fail("matrix has the wrong number of rows");
  Matrix m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    const auto& row = j[r];
    if (!row.is_array() || static_cast<int>(row.size()) != cols) fail("matrix row has the wrong length");
    for (int c = 0; c < cols; ++c) {
      int v = int_from_json(row[c], "matrix entry");
      m.at(r, c) = static_cast<std::uint8_t>(((v % f.p()) + f.p()) % f.p());
    }
  }
  return m;
}

Json ids_to_json(const Poset& p, const std::vector<std::size_t>& idx) {
  Json out = Json::array();
  for (auto i : idx) out.push_back(p.id(i));
  return out;
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str());
}

Json to_json(const Poset& p) {
  Json rel = Json::array();
  for (auto [lo, hi] : p.covers()) rel.push_back({p.id(lo), p.id(hi)});
  return {{"elements", p.elements()}, {"relations", rel}};
}

Poset poset_from_json(const Json& j) {
  const auto& el = field(j, "elements");
  if (!el.is_array()) fail("\"elements\" must be an array");
  std::vector<ElementId> ids;
  for (const auto& e : el) ids.push_back(as_string(e, "element id"));
  std::vector<std::pair<ElementId, ElementId>> pairs;
  if (j.contains("relations")) {
    const auto& rel = j.at("relations");
    if (!rel.is_array()) fail("\"relations\" must be an array");
    for (const auto& r : rel) {
      if (!r.is_array() || r.size() != 2) fail("each relation must be a pair");
      pairs.emplace_back(as_string(r[0], "relation endpoint"), as_string(r[1], "relation endpoint"));
    }
  }
  return Poset::from_relations(std::move(ids), pairs);
}

Json to_json(const Chain& c, const Poset& p) { return ids_to_json(p, c.members()); }

Chain chain_from_json(const Json& j, const Poset& p) {
  if (!j.is_array()) fail("a chain must be an array of element ids");
  std::vector<ElementId> ids;
  for (const auto& e : j) ids.push_back(as_string(e, "element id"));
  return Chain::from_ids(p, ids);
}

Json to_json(const ChainValue& v) {
  if (v.is_scalar()) return format_rational(v.as_scalar());
  Json out = Json::array();
  for (const auto& e : v.entries()) out.push_back(to_json(e));
  return out;
}

ChainValue chain_value_from_json(const Json& j) {
  if (!j.is_array()) return ChainValue::scalar(rational_from_json(j));
  std::vector<ChainValue> entries;
  for (const auto& e : j) entries.push_back(chain_value_from_json(e));
  return ChainValue::chain(std::move(entries));
}

Json to_json(const LengthFunction& f) {
  Json values = Json::object();
  for (std::size_t i = 0; i < f.size(); ++i) values[f.poset().id(i)] = to_json(f.value(i));
  return {{"poset", to_json(f.poset())}, {"values", values}};
}

LengthFunction length_function_from_json(const Json& j) {
  Poset p = poset_from_json(field(j, "poset"));
  const auto& vals = field(j, "values");
  if (!vals.is_object()) fail("\"values\" must map element ids to values");
  std::vector<std::optional<ChainValue>> slots(p.size());
  for (const auto& [key, value] : vals.items()) slots[p.index_of(key)] = chain_value_from_json(value);
  std::vector<ChainValue> values;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!slots[i]) fail("no value for element '" + p.id(i) + "'");
    values.push_back(std::move(*slots[i]));
  }
  return LengthFunction::make(std::move(p), std::move(values));
}

ValueOrder order_by_value(const std::vector<ChainValue>& values) {
  ValueOrder out;
  out.order.resize(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) out.order[i] = i;
  std::stable_sort(out.order.begin(), out.order.end(),
                   [&](std::size_t a, std::size_t b) { return ValueLess{}(values[a], values[b]); });
  for (std::size_t i = 0; i < out.order.size();) {
    std::size_t k = i + 1;
    while (k < out.order.size() && values[out.order[k]] == values[out.order[i]]) ++k;
    if (k - i > 1) out.ties.emplace_back(out.order.begin() + i, out.order.begin() + k);
    i = k;
  }
  return out;
}

Json measure_to_json(const Measure& m) {
  Json out = to_json(m.as_length_function());
  auto vo = order_by_value(m.values());
  out["order"] = ids_to_json(m.poset(), vo.order);
  Json ties = Json::array();
  for (const auto& t : vo.ties) ties.push_back(ids_to_json(m.poset(), t));
  out["ties"] = ties;
  return out;
}

QuiverInput quiver_input_from_json(const Json& j) {
  const auto& vs = field(j, "vertices");
  if (!vs.is_array()) fail("\"vertices\" must be an array");
  std::vector<std::string> vertices;
  for (const auto& v : vs) vertices.push_back(as_string(v, "vertex id"));
  std::vector<std::pair<std::string, std::string>> arrows;
  if (j.contains("arrows")) {
    for (const auto& a : j.at("arrows")) {
      if (!a.is_array() || a.size() != 2) fail("each arrow must be a [source, target] pair");
      arrows.emplace_back(as_string(a[0], "arrow endpoint"), as_string(a[1], "arrow endpoint"));
    }
  }
  QuiverInput s{Quiver::make(std::move(vertices), arrows), PrimeField(2), 5, {}};
  if (j.contains("p")) s.field = PrimeField(int_from_json(j.at("p"), "\"p\""));
  if (j.contains("maxLen")) s.max_len = int_from_json(j.at("maxLen"), "\"maxLen\"");
  s.lengths = CategoryLengthFunction::ones(s.quiver.vertex_count());
  if (j.contains("simpleLengths")) {
    const auto& sl = j.at("simpleLengths");
    if (!sl.is_object()) fail("\"simpleLengths\" must map vertex ids to values");
    for (const auto& [key, value] : sl.items()) s.lengths.simple_values[s.quiver.vertex_index(key)] = rational_from_json(value);
    s.lengths = CategoryLengthFunction::make(s.lengths.simple_values);
  }
  return s;
}

Json to_json(const QuiverInput& s) {
  Json arrows = Json::array();
  for (const auto& a : s.quiver.arrows()) arrows.push_back({s.quiver.vertices()[a.source], s.quiver.vertices()[a.target]});
  Json out = {{"vertices", s.quiver.vertices()}, {"arrows", arrows}, {"p", s.field.p()}, {"maxLen", s.max_len}};
  out["simpleLengths"] = to_json(s.lengths, s.quiver)["simpleLengths"];
  return out;
}

Json to_json(const Representation& r) {
  Json maps = Json::array();
  for (const auto& m : r.maps()) maps.push_back(matrix_to_json(m));
  return {{"dims", r.dims()}, {"maps", maps}};
}

Representation representation_from_json(const Json& j, std::shared_ptr<const Quiver> q, const PrimeField& f) {
  const auto& d = field(j, "dims");
  if (!d.is_array() || d.size() != q->vertex_count()) fail("\"dims\" must list one dimension per vertex");
  std::vector<int> dims;
  for (const auto& x : d) dims.push_back(int_from_json(x, "dimension"));
  const auto& m = field(j, "maps");
  if (!m.is_array() || m.size() != q->arrows().size()) fail("\"maps\" must list one matrix per arrow");
  std::vector<Matrix> maps;
  for (std::size_t a = 0; a < m.size(); ++a) {
    const auto& arrow = q->arrows()[a];
    if (dims[arrow.source] < 0 || dims[arrow.target] < 0) fail("negative dimension");
    maps.push_back(matrix_from_json(m[a], dims[arrow.target], dims[arrow.source], f));
  }
  return Representation(std::move(q), f, std::move(dims), std::move(maps));
}

Json to_json(const IndPoset& ip, const CategoryLengthFunction& l) {
  Json out = to_json(ip.poset());
  QuiverInput input{ip.quiver(), ip.field(), ip.max_len(), l};
  out["quiver"] = to_json(input);
  out["p"] = ip.field().p();
  out["maxLen"] = ip.max_len();
  out["complete"] = ip.complete();
  Json lengths = Json::object(), dims = Json::object(), labels = Json::object(), families = Json::object(),
       canonical = Json::object(), maps = Json::object();
  for (const auto& c : ip.classes()) {
    lengths[c.label] = format_rational(module_length(c.rep, l));
    dims[c.label] = c.rep.dims();
    labels[c.label] = c.label;
    families[c.label] = c.family;
    canonical[c.label] = c.canonical;
    maps[c.label] = to_json(c.rep)["maps"];
  }
  out["lengths"] = lengths;
  out["dims"] = dims;
  out["labels"] = labels;
  out["families"] = families;
  out["canonical"] = canonical;
  out["maps"] = maps;
  return out;
}

IndPoset ind_poset_from_json(const Json& j) {
  QuiverInput input = quiver_input_from_json(field(j, "quiver"));
  auto q = std::make_shared<const Quiver>(input.quiver);
  Poset p = poset_from_json(j);
  std::vector<IndClass> classes;
  for (const auto& id : p.elements()) {
    Json rep = {{"dims", field(field(j, "dims"), id.c_str())}, {"maps", field(field(j, "maps"), id.c_str())}};
    IndClass c{representation_from_json(rep, q, input.field), id, "M", 0};
    if (j.contains("labels") && j.at("labels").contains(id)) c.label = as_string(j.at("labels").at(id), "label");
    if (j.contains("families") && j.at("families").contains(id)) c.family = as_string(j.at("families").at(id), "family");
    if (j.contains("canonical") && j.at("canonical").contains(id)) c.canonical = j.at("canonical").at(id).get<std::uint64_t>();
    classes.push_back(std::move(c));
  }
  IndPoset ip = IndPoset::from_classes(q, input.field, input.max_len, std::move(classes));
  if (!(ip.poset() == p)) throw Error(ErrorCode::PosetMismatch, "relations do not match the subobject order of the classes");
  return ip;
}

Json to_json(const CategoryLengthFunction& l, const Quiver& q) {
  Json values = Json::object();
  for (std::size_t v = 0; v < q.vertex_count(); ++v) values[q.vertices()[v]] = format_rational(l.simple_values.at(v));
  return {{"simpleLengths", values}};
}

Json to_json(const AxiomReport& r) {
  Json violations = Json::array();
  for (const auto& v : r.violations) violations.push_back({{"axiom", v.axiom}, {"witness", v.witness}});
  return {{"ok", r.ok()}, {"count", r.violations.size()}, {"violations", violations}};
}

Json to_json(const MainPropertyReport& r) {
  Json violations = Json::array();
  for (const auto& v : r.violations)
    violations.push_back({{"x", v.x}, {"ys", v.ys}, {"kind", std::string(to_string(v.kind))}});
  return {{"ok", r.ok()}, {"checkedTriples", r.checked_triples}, {"violations", violations}};
}

Json to_json(const DetectionResult& r, const Quiver& q) {
  Json witnesses = Json::object();
  for (const auto& [label, l] : r.witnesses) witnesses[label] = to_json(l, q);
  return {{"detected", r.detected}, {"advisory", r.advisory}, {"witnessLengthFunctions", witnesses}};
}

}  // namespace grm
