#include "symtrace/json_io.hpp"

#include <cstdio>
#include <sstream>

#include "symtrace/errors.hpp"

namespace symtrace::json_io {

namespace {

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw InvalidInput(std::string("missing field '") + name + "'");
  return j.at(name);
}

std::size_t count(const json& j, const char* name) {
  const json& v = field(j, name);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
    throw InvalidInput(std::string("field '") + name + "' must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

const json& array(const json& j, const char* what) {
  if (!j.is_array()) throw InvalidInput(std::string(what) + " must be an array");
  return j;
}

std::string index_key(const MultiIndex& alpha) {
  std::string key = "[";
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (i > 0) key += ",";
    key += std::to_string(alpha[i]);
  }
  return key + "]";
}

MultiIndex parse_index_key(const std::string& key) {
  json parsed;
  try {
    parsed = json::parse(key);
  } catch (const json::exception&) {
    throw InvalidInput("malformed multi-index key '" + key + "'");
  }
  if (!parsed.is_array()) throw InvalidInput("multi-index key must be an array: '" + key + "'");
  MultiIndex alpha;
  for (const auto& e : parsed) {
    if (!e.is_number_integer() || e.get<long long>() < 0) throw InvalidInput("bad exponent in key '" + key + "'");
    alpha.push_back(e.get<unsigned>());
  }
  return alpha;
}

}  // namespace

json encode(const Rational& q) { return to_string(q); }

json encode(const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (const auto& e : m.row(r)) row.push_back(encode(e));
    rows.push_back(std::move(row));
  }
  return rows;
}

json encode(const SymTensor& s) {
  json coeffs = json::object();
  const auto basis = monomials(s.dim(), s.degree());
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (sgn(s[k]) != 0) coeffs[index_key(basis[k])] = encode(s[k]);
  }
  return {{"dim", s.dim()}, {"degree", s.degree()}, {"coeffs", std::move(coeffs)}};
}

json encode(const OperatorWord& w) {
  json factors = json::array();
  for (const auto& f : w.factors()) {
    factors.push_back({{"kind", f.kind == FactorKind::multiply ? "M" : "I"}, {"tensor", encode(f.tensor)}});
  }
  return {{"r", w.r()}, {"factors", std::move(factors)}};
}

json encode(const UGraph& g) { return {{"m", g.m()}, {"r", g.r()}, {"mult", g.rows()}}; }

json encode(const FiberInstance& inst) {
  json a = json::array(), b = json::array();
  for (const auto& s : inst.A) a.push_back(encode(s));
  for (const auto& s : inst.B) b.push_back(encode(s));
  return {{"dimV", inst.dim_v}, {"dimW", inst.dim_w}, {"r", inst.r}, {"A", std::move(a)}, {"B", std::move(b)},
          {"u", encode(inst.u)}};
}

json encode(const Certificate& c) {
  return {{"m", c.m}, {"aIdx", c.a_idx}, {"bIdx", c.b_idx}, {"graph", encode(c.graph)}, {"value", encode(c.value)}};
}

json encode(const TraceReport& report) {
  json terms = json::array();
  for (const auto& t : report.per_graph) {
    terms.push_back({{"graph", encode(t.graph)},
                     {"rho", t.rho},
                     {"symmetryOrder", t.symmetry_order.get_str()},
                     {"coefficient", encode(t.coefficient)},
                     {"value", encode(t.value)}});
  }
  return {{"word", encode(report.word)},       {"dim", report.dim},
          {"N", report.N},                     {"directTrace", encode(report.direct_trace)},
          {"graphSum", encode(report.graph_sum)}, {"perGraph", std::move(terms)},
          {"match", report.match}};
}

json encode(const PhiCheck& check) {
  return {{"lhs", encode(check.lhs)}, {"rhs", encode(check.rhs)}, {"graph", encode(check.graph)},
          {"match", check.match}};
}

json encode(const TensorPow& t) {
  json coords = json::array();
  for (const auto& c : t.coords()) coords.push_back(encode(c));
  return {{"dim", t.dim()}, {"order", t.order()}, {"coords", std::move(coords)}};
}

json encode_permutation(const Permutation& sigma) {
  json out = json::array();
  for (auto s : sigma) out.push_back(s + 1);
  return out;
}

Rational decode_rational(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(BigInt(std::to_string(j.get<long long>())));
  throw InvalidInput("rational must be a string \"p/q\" or an integer");
}

RationalVector decode_vector(const json& j) {
  RationalVector v;
  for (const auto& e : array(j, "vector")) v.push_back(decode_rational(e));
  return v;
}

Matrix decode_matrix(const json& j) {
  std::vector<RationalVector> rows;
  for (const auto& row : array(j, "matrix")) rows.push_back(decode_vector(row));
  return Matrix::from_rows(rows);
}

SymTensor decode_sym_tensor(const json& j) {
  const std::size_t dim = count(j, "dim");
  const std::size_t degree = count(j, "degree");
  if (dim < 1) throw InvalidInput("SymTensor dim must be >= 1");
  SymTensor s(dim, degree);
  const json& coeffs = field(j, "coeffs");
  if (!coeffs.is_object()) throw InvalidInput("SymTensor coeffs must be an object");
  for (const auto& [key, value] : coeffs.items()) {
    const MultiIndex alpha = parse_index_key(key);
    s.set_coeff(alpha, decode_rational(value));
  }
  return s;
}

OperatorWord decode_word(const json& j) {
  const std::size_t r = count(j, "r");
  std::vector<Factor> factors;
  for (const auto& f : array(field(j, "factors"), "factors")) {
    const std::string kind = field(f, "kind").get<std::string>();
    if (kind != "M" && kind != "I") throw InvalidInput("factor kind must be \"M\" or \"I\"");
    factors.push_back({kind == "M" ? FactorKind::multiply : FactorKind::contract, decode_sym_tensor(field(f, "tensor"))});
  }
  return OperatorWord(r, std::move(factors));
}

UGraph decode_graph(const json& j) {
  const std::size_t m = count(j, "m");
  const std::size_t r = count(j, "r");
  std::vector<std::vector<unsigned>> rows;
  for (const auto& row : array(field(j, "mult"), "mult")) {
    std::vector<unsigned> out;
    for (const auto& e : array(row, "mult row")) {
      if (!e.is_number_integer() || e.get<long long>() < 0) throw InvalidInput("multiplicities must be non-negative");
      out.push_back(e.get<unsigned>());
    }
    rows.push_back(std::move(out));
  }
  if (rows.size() != m) throw InvalidInput("UGraph: mult has the wrong number of rows");
  if (m == 0) return UGraph(0, r, {});
  return UGraph::from_rows(r, rows);
}

FiberInstance decode_instance(const json& j) {
  FiberInstance inst;
  inst.dim_v = count(j, "dimV");
  inst.dim_w = count(j, "dimW");
  inst.r = count(j, "r");
  for (const auto& a : array(field(j, "A"), "A")) inst.A.push_back(decode_sym_tensor(a));
  for (const auto& b : array(field(j, "B"), "B")) inst.B.push_back(decode_sym_tensor(b));
  inst.u = decode_matrix(field(j, "u"));
  inst.validate();
  return inst;
}

Certificate decode_certificate(const json& j) {
  Certificate c;
  c.m = count(j, "m");
  c.a_idx = field(j, "aIdx").get<std::vector<std::size_t>>();
  c.b_idx = field(j, "bIdx").get<std::vector<std::size_t>>();
  c.graph = decode_graph(field(j, "graph"));
  c.value = decode_rational(field(j, "value"));
  return c;
}

Permutation decode_permutation(const json& j) {
  Permutation sigma;
  for (const auto& e : array(j, "permutation")) {
    if (!e.is_number_integer() || e.get<long long>() < 1) throw InvalidInput("permutation images are 1-based");
    sigma.push_back(e.get<std::size_t>() - 1);
  }
  return sigma;
}

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput(std::string("JSON parse error: ") + e.what());
  }
}

std::string content_hash(const json& j) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : j.dump()) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace symtrace::json_io
