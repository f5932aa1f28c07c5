#include "grbraid/json_io.hpp"

namespace grbraid {

namespace {

[[noreturn]] void fail(const std::string& what) { throw JsonFormatError(what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) fail(std::string("expected an object with key '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) fail(std::string("missing key '") + key + "'");
  return *it;
}

int as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) fail(std::string(what) + " must be an integer");
  return j.get<int>();
}

const Json& as_array(const Json& j, const char* what) {
  if (!j.is_array()) fail(std::string(what) + " must be an array");
  return j;
}

std::vector<int> int_list(const Json& j, const char* what) {
  std::vector<int> out;
  for (const auto& x : as_array(j, what)) out.push_back(as_int(x, what));
  return out;
}

Json segment_list(const Multisegment& m) {
  Json out = Json::array();
  for (const Segment& s : m.segments()) out.push_back({s.start, s.end});
  return out;
}

std::vector<Segment> parse_segments(const Json& j) {
  std::vector<Segment> out;
  for (const auto& s : as_array(j, "segments")) {
    const auto pair = int_list(s, "segment");
    if (pair.size() != 2) fail("segment must be [a,b]");
    out.push_back({pair[0], pair[1]});
  }
  return out;
}

template <class F>
auto wrap(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const JsonFormatError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    fail(e.what());
  } catch (const std::out_of_range& e) {
    fail(e.what());
  }
}

std::string role_name(VertexRole r) {
  switch (r) {
    case VertexRole::frozen: return "frozen";
    case VertexRole::boundary: return "boundary";
    case VertexRole::mutable_: return "mutable";
  }
  return "?";
}

Vertex parse_vertex(const Json& j) {
  const auto ab = int_list(j, "vertex");
  if (ab.size() != 2) fail("vertex must be [a,b]");
  return {ab[0], ab[1]};
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail(std::string("invalid JSON: ") + e.what());
  }
}

Json to_json(const Multisegment& m) { return {{"rank", m.rank()}, {"segments", segment_list(m)}}; }

Multisegment multisegment_from_json(const Json& j) {
  return wrap([&] { return Multisegment(as_int(field(j, "rank"), "rank"), parse_segments(field(j, "segments"))); });
}

Json to_json(const ExtElement& b) {
  Json entries = Json::array();
  for (const auto& [k, m] : b.entries()) entries.push_back({{"k", k}, {"segments", segment_list(m)}});
  return {{"rank", b.rank()}, {"entries", entries}};
}

ExtElement ext_element_from_json(const Json& j) {
  return wrap([&] {
    const int rank = as_int(field(j, "rank"), "rank");
    std::map<int, std::vector<Segment>> grades;
    for (const auto& e : as_array(field(j, "entries"), "entries")) {
      const int k = as_int(field(e, "k"), "k");
      if (grades.count(k)) fail("grade " + std::to_string(k) + " listed twice");
      grades[k] = parse_segments(field(e, "segments"));
    }
    std::map<int, Multisegment> entries;
    for (const auto& [k, segs] : grades) entries.emplace(k, Multisegment(rank, segs));
    return ExtElement(rank, std::move(entries));
  });
}

Json to_json(const PlueckerPoly& p) {
  Json terms = Json::array();
  for (const auto& [mono, c] : p.terms()) {
    Json vars = Json::array();
    for (const auto& v : mono) vars.push_back(Json(std::vector<int>(v.entries().begin(), v.entries().end())));
    terms.push_back({{"coeff", signed_decimal(c)}, {"vars", vars}});
  }
  return {{"m", p.width()}, {"terms", terms}};
}

PlueckerPoly pluecker_from_json(const Json& j) {
  return wrap([&] {
    const int m = as_int(field(j, "m"), "m");
    PlueckerPoly out(m);
    for (const auto& t : as_array(field(j, "terms"), "terms")) {
      const Json& c = field(t, "coeff");
      BigInt coeff;
      if (c.is_string()) coeff = parse_bigint(c.get<std::string>());
      else if (c.is_number_integer()) coeff = c.get<long long>();
      else fail("coeff must be a string of digits");
      PlueckerPoly term = PlueckerPoly::constant(m, coeff);
      for (const auto& v : as_array(field(t, "vars"), "vars")) term = term * PlueckerPoly::variable(m, int_list(v, "index"));
      out += term;
    }
    return out;
  });
}

Json to_json(const KMonomial& mono) {
  Json out = Json::array();
  for (const auto& [f, e] : mono) out.push_back({{"i", f.i}, {"a", f.a}, {"exp", e}});
  return out;
}

KMonomial kmonomial_from_json(const Json& j, int n) {
  return wrap([&] {
    KMonomial out;
    for (const auto& y : as_array(j, "monomial")) {
      const FundIndex f{as_int(field(y, "i"), "i"), as_int(field(y, "a"), "a")};
      check_fund(n, f);
      const int e = as_int(field(y, "exp"), "exp");
      if (e <= 0) fail("exponents must be positive");
      out[f] += e;
    }
    return out;
  });
}

Json to_json(const KPoly& p) {
  Json out = Json::array();
  for (const auto& [mono, c] : p.terms()) out.push_back({{"coeff", signed_decimal(c)}, {"monomial", to_json(mono)}});
  return out;
}

KPoly kpoly_from_json(const Json& j, int n) {
  return wrap([&] {
    KPoly out(n);
    for (const auto& t : as_array(j, "polynomial")) {
      const Json& c = field(t, "coeff");
      BigInt coeff;
      if (c.is_string()) coeff = parse_bigint(c.get<std::string>());
      else if (c.is_number_integer()) coeff = c.get<long long>();
      else fail("coeff must be a string of digits");
      out += KPoly::monomial(n, kmonomial_from_json(field(t, "monomial"), n)) * KPoly::constant(n, coeff);
    }
    return out;
  });
}

Json to_json(const CrystalStats& st) {
  return {{"eps", st.eps}, {"eps_star", st.eps_star}, {"phi", st.phi}, {"phi_star", st.phi_star}, {"wt_i", st.wt_i}};
}

Json to_json(const RationalFn& f) {
  if (f.expanded()) return to_json(f.num);
  return {{"num", to_json(f.num)}, {"den", to_json(f.den)}};
}

RationalFn rational_from_json(const Json& j) {
  if (j.is_object() && j.contains("num")) {
    return RationalFn(pluecker_from_json(field(j, "num")), pluecker_from_json(field(j, "den")));
  }
  return RationalFn(pluecker_from_json(j));
}

Json to_json(const Seed& s) {
  Json vertices = Json::array();
  for (Vertex v : s.quiver().vertices()) {
    const MinorIndex& label = s.labels().at(v);
    vertices.push_back({{"vertex", {v.a, v.b}},
                        {"role", role_name(s.role(v))},
                        {"label", std::vector<int>(label.entries().begin(), label.entries().end())},
                        {"var", to_json(s.var(v))}});
  }
  Json arrows = Json::array();
  for (const auto& [edge, c] : s.quiver().arrows()) {
    arrows.push_back({{"from", {edge.first.a, edge.first.b}}, {"to", {edge.second.a, edge.second.b}}, {"count", c}});
  }
  return {{"m", s.width()}, {"N", s.columns()}, {"vertices", vertices}, {"arrows", arrows}};
}

Seed seed_from_json(const Json& j) {
  return wrap([&] {
    const int m = as_int(field(j, "m"), "m");
    const int N = as_int(field(j, "N"), "N");
    Quiver q;
    std::map<Vertex, RationalFn> vars;
    std::map<Vertex, MinorIndex> labels;
    for (const auto& v : as_array(field(j, "vertices"), "vertices")) {
      const Vertex x = parse_vertex(field(v, "vertex"));
      q.add_vertex(x);
      labels.emplace(x, MinorIndex(int_list(field(v, "label"), "label")));
      vars.emplace(x, rational_from_json(field(v, "var")));
    }
    for (const auto& a : as_array(field(j, "arrows"), "arrows")) {
      q.add_arrow(parse_vertex(field(a, "from")), parse_vertex(field(a, "to")), as_int(field(a, "count"), "count"));
    }
    return Seed(m, N, std::move(q), std::move(vars), std::move(labels));
  });
}

Json to_json(const EqModWitness& w) {
  return {{"seed", w.seed}, {"trial", w.trial}, {"lo", w.lo}, {"hi", w.hi},
          {"field", w.field}, {"lhs_value", w.lhs}, {"rhs_value", w.rhs}};
}

Json to_json(const CheckReport& r) {
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    Json x = {{"case", e.name}, {"lhs", e.lhs}, {"rhs", e.rhs}, {"equal", e.equal}};
    if (e.witness) x["witness"] = to_json(*e.witness);
    entries.push_back(std::move(x));
  }
  Json out = {{"kind", r.kind}, {"n", r.n}, {"word", r.word}};
  if (r.kind == "commute") out["window"] = {r.window.first, r.window.second};
  out["trials"] = r.options.trials;
  out["prime"] = r.options.prime;
  out["seed"] = r.options.seed;
  out["field"] = r.options.field == FieldKind::rational ? "Q" : "F_p";
  out["entries"] = std::move(entries);
  out["failures"] = r.failures();
  return out;
}

}  // namespace grbraid
