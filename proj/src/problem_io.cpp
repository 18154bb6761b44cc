#include "eqgb/problem_io.hpp"

#include <fstream>
#include <sstream>

namespace eqgb {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& message) {
  throw ProblemError((path.empty() ? std::string("<root>") : path) + ": " + message);
}

std::string child(const std::string& path, std::string_view key) {
  return path.empty() ? std::string(key) : path + "." + std::string(key);
}

std::string item(const std::string& path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

void expect_object(const Json& j, const std::string& path,
                   std::initializer_list<std::string_view> allowed) {
  if (!j.is_object()) fail(path, "expected an object");
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (auto a : allowed) known = known || key == a;
    if (!known) fail(child(path, key), "unknown field");
  }
}

const Json& require(const Json& j, std::string_view key, const std::string& path) {
  auto it = j.find(key);
  if (it == j.end()) fail(child(path, key), "missing field");
  return *it;
}

const Json& expect_array(const Json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  return j;
}

std::uint64_t as_u64(const Json& j, const std::string& path) {
  if (!j.is_number_integer() || (j.is_number_integer() && !j.is_number_unsigned() && j.get<long long>() < 0))
    fail(path, "expected a non-negative integer");
  return j.get<std::uint64_t>();
}

std::uint32_t as_u32(const Json& j, const std::string& path) {
  auto v = as_u64(j, path);
  if (v > 0xffffffffu) fail(path, "integer out of range");
  return static_cast<std::uint32_t>(v);
}

std::vector<std::uint32_t> as_u32_list(const Json& j, const std::string& path) {
  expect_array(j, path);
  std::vector<std::uint32_t> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(as_u32(j[i], item(path, i)));
  return out;
}

std::string as_string(const Json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  return j.get<std::string>();
}

bool as_bool(const Json& j, const std::string& path) {
  if (!j.is_boolean()) fail(path, "expected true or false");
  return j.get<bool>();
}

std::optional<std::size_t> optional_bound(const Json& j, std::string_view key,
                                          const std::string& path) {
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) return std::nullopt;
  auto v = as_u64(*it, child(path, key));
  if (v == 0) fail(child(path, key), "bound must be positive");
  return static_cast<std::size_t>(v);
}

Grading parse_grading(const Json& j, const std::string& path) {
  auto s = as_string(j, path);
  if (s == "none") return Grading::none;
  if (s == "total-degree") return Grading::total_degree;
  fail(path, "grading must be \"none\" or \"total-degree\", got \"" + s + "\"");
}

OrderChoice parse_order(const Json& j, const std::string& path) {
  OrderChoice c;
  if (j.is_string()) {
    c.preset = j.get<std::string>();
    if (c.preset != "rowlex" && c.preset != "elim-onefactor")
      fail(path, "unknown order preset \"" + c.preset + "\"");
    return c;
  }
  expect_object(j, path, {"precedence", "grading"});
  const auto ppath = child(path, "precedence");
  const auto& prec = expect_array(require(j, "precedence", path), ppath);
  for (std::size_t i = 0; i < prec.size(); ++i) c.precedence.push_back(as_string(prec[i], item(ppath, i)));
  if (auto it = j.find("grading"); it != j.end()) c.grading = parse_grading(*it, child(path, "grading"));
  return c;
}

Json order_to_json(const OrderChoice& c) {
  if (!c.preset.empty()) return c.preset;
  Json j = Json::object();
  j["precedence"] = c.precedence;
  j["grading"] = c.grading == Grading::total_degree ? "total-degree" : "none";
  return j;
}

EngineConfig parse_config(const Json& j, const std::string& path) {
  expect_object(j, path, {"max_steps", "max_width", "max_degree", "use_product_criterion", "threads"});
  EngineConfig c;
  c.max_steps = optional_bound(j, "max_steps", path);
  c.max_width = optional_bound(j, "max_width", path);
  c.max_degree = optional_bound(j, "max_degree", path);
  if (auto it = j.find("use_product_criterion"); it != j.end())
    c.use_product_criterion = as_bool(*it, child(path, "use_product_criterion"));
  if (auto it = j.find("threads"); it != j.end()) {
    c.threads = as_u32(*it, child(path, "threads"));
    if (c.threads == 0) fail(child(path, "threads"), "must be positive");
  }
  return c;
}

Json config_to_json(const EngineConfig& c) {
  Json j = Json::object();
  auto bound = [](const std::optional<std::size_t>& b) { return b ? Json(*b) : Json(nullptr); };
  j["max_steps"] = bound(c.max_steps);
  j["max_width"] = bound(c.max_width);
  j["max_degree"] = bound(c.max_degree);
  j["use_product_criterion"] = c.use_product_criterion;
  j["threads"] = c.threads;
  return j;
}

std::vector<Polynomial> parse_polynomial_list(const Json& j, const Ring& ring, const std::string& path,
                                              bool allow_zero) {
  expect_array(j, path);
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    auto f = polynomial_from_json(j[i], ring, item(path, i));
    if (f.is_zero() && !allow_zero) fail(item(path, i), "zero polynomial is not allowed here");
    out.push_back(std::move(f));
  }
  return out;
}

// Human-readable rendering of a term as written in the input, for messages.
std::string describe_term(const Json& term) {
  std::string out;
  if (auto c = term.find("coefficient"); c != term.end()) out += c->is_string() ? c->get<std::string>() : c->dump();
  if (auto fs = term.find("factors"); fs != term.end() && fs->is_array()) {
    for (const auto& f : *fs) {
      if (!out.empty()) out += '*';
      out += f.value("symbol", std::string("?"));
      std::string idx;
      for (const char* key : {"fixed", "free"})
        if (auto it = f.find(key); it != f.end() && it->is_array())
          for (const auto& i : *it) idx += (idx.empty() ? "" : ",") + i.dump();
      if (!idx.empty()) out += "[" + idx + "]";
      if (auto e = f.find("exponent"); e != f.end()) out += "^" + e->dump();
    }
  }
  return out;
}

}  // namespace

OrderSpec OrderChoice::resolve(const Ring& ring) const {
  if (!preset.empty()) {
    auto spec = OrderSpec::preset(preset, ring);
    if (!spec) throw ProblemError("order: unknown preset \"" + preset + "\"");
    return *spec;
  }
  std::vector<std::uint16_t> ids;
  for (const auto& name : precedence) {
    auto id = ring.symbol_id(name);
    if (!id) throw ProblemError("order.precedence: unknown symbol \"" + name + "\"");
    ids.push_back(*id);
  }
  return OrderSpec(ring, std::move(ids), grading);
}

bool ProblemFile::operator==(const ProblemFile& o) const {
  return *ring == *o.ring && order == o.order && generators == o.generators && basis == o.basis &&
         target == o.target && config == o.config;
}

Json parse_json_text(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    // Recover line and column from the byte offset.
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') ++line, column = 1;
      else ++column;
    }
    throw ProblemError("line " + std::to_string(line) + ", column " + std::to_string(column) +
                       ": invalid JSON");
  }
}

Json load_json(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ProblemError(path.string() + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_json_text(buf.str());
  } catch (const ProblemError& e) {
    throw ProblemError(path.string() + ": " + e.what());
  }
}

Field parse_field(const Json& j, const std::string& path) {
  if (j.is_string()) {
    if (j.get<std::string>() == "rational") return Field::rational();
    fail(path, "expected \"rational\" or {\"kind\": \"prime\", \"p\": ...}");
  }
  expect_object(j, path, {"kind", "p"});
  auto kind = as_string(require(j, "kind", path), child(path, "kind"));
  if (kind == "rational") {
    if (j.contains("p")) fail(child(path, "p"), "only prime fields take a modulus");
    return Field::rational();
  }
  if (kind != "prime") fail(child(path, "kind"), "expected \"rational\" or \"prime\"");
  auto p = as_u64(require(j, "p", path), child(path, "p"));
  try {
    return Field::prime(p);
  } catch (const std::invalid_argument& e) {
    fail(child(path, "p"), e.what());
  }
}

Json field_to_json(const Field& field) {
  Json j = Json::object();
  if (field.is_rational()) {
    j["kind"] = "rational";
  } else {
    j["kind"] = "prime";
    j["p"] = field.modulus();
  }
  return j;
}

std::vector<SymbolSchema> parse_ring(const Json& j, const std::string& path) {
  expect_array(j, path);
  if (j.empty()) fail(path, "ring needs at least one symbol");
  std::vector<SymbolSchema> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const auto p = item(path, i);
    const auto& s = j[i];
    expect_object(s, p, {"name", "fixed", "free_arity", "constraint"});
    SymbolSchema schema;
    schema.name = as_string(require(s, "name", p), child(p, "name"));
    if (auto it = s.find("fixed"); it != s.end()) schema.fixed_bounds = as_u32_list(*it, child(p, "fixed"));
    schema.free_arity = as_u32(require(s, "free_arity", p), child(p, "free_arity"));
    if (auto it = s.find("constraint"); it != s.end()) {
      auto text = as_string(*it, child(p, "constraint"));
      auto c = parse_constraint(text);
      if (!c) fail(child(p, "constraint"), "unknown constraint \"" + text + "\"");
      schema.constraint = *c;
    }
    out.push_back(std::move(schema));
  }
  return out;
}

Json ring_to_json(const Ring& ring) {
  Json out = Json::array();
  for (const auto& s : ring.symbols()) {
    Json j = Json::object();
    j["name"] = s.name;
    j["fixed"] = s.fixed_bounds;
    j["free_arity"] = s.free_arity;
    j["constraint"] = to_string(s.constraint);
    out.push_back(std::move(j));
  }
  return out;
}

Monomial monomial_from_json(const Json& j, const Ring& ring, const std::string& path) {
  expect_array(j, path);
  std::vector<Monomial::Term> terms;
  for (std::size_t k = 0; k < j.size(); ++k) {
    const auto fp = item(path, k);
    const auto& f = j[k];
    expect_object(f, fp, {"symbol", "fixed", "free", "exponent"});
    auto name = as_string(require(f, "symbol", fp), child(fp, "symbol"));
    if (!ring.symbol_id(name)) fail(child(fp, "symbol"), "unknown symbol \"" + name + "\"");
    std::vector<std::uint32_t> fixed, free;
    if (auto it = f.find("fixed"); it != f.end()) fixed = as_u32_list(*it, child(fp, "fixed"));
    if (auto it = f.find("free"); it != f.end()) free = as_u32_list(*it, child(fp, "free"));
    std::uint32_t exponent = 1;
    if (auto it = f.find("exponent"); it != f.end()) {
      exponent = as_u32(*it, child(fp, "exponent"));
      if (exponent == 0) fail(child(fp, "exponent"), "exponent must be positive");
    }
    try {
      terms.emplace_back(ring.variable(name, fixed, free), exponent);
    } catch (const InvalidVariable& e) {
      fail(fp, e.what());
    }
  }
  return Monomial::from_terms(std::move(terms));
}

Polynomial polynomial_from_json(const Json& j, const Ring& ring, const std::string& path) {
  expect_array(j, path);
  std::vector<Term> terms;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const auto tp = item(path, i);
    const auto& t = j[i];
    expect_object(t, tp, {"coefficient", "factors"});
    const auto& cj = require(t, "coefficient", tp);
    Coefficient c = Coefficient::zero(ring.field());
    try {
      if (cj.is_string())
        c = Coefficient::parse(ring.field(), cj.get<std::string>());
      else if (cj.is_number_integer())
        c = Coefficient::parse(ring.field(), cj.dump());
      else
        fail(child(tp, "coefficient"), "expected an integer or a string such as \"-3/2\"");
    } catch (const std::invalid_argument& e) {
      fail(child(tp, "coefficient"), e.what());
    } catch (const std::domain_error& e) {
      fail(child(tp, "coefficient"), e.what());
    }
    Monomial m;
    try {
      m = monomial_from_json(require(t, "factors", tp), ring, child(tp, "factors"));
    } catch (const ProblemError& e) {
      throw ProblemError(std::string(e.what()) + " (in term " + describe_term(t) + ")");
    }
    terms.push_back({std::move(m), std::move(c)});
  }
  return Polynomial::from_terms(ring.field(), std::move(terms));
}

Json monomial_to_json(const Monomial& m, const Ring& ring, const OrderSpec& order) {
  std::vector<Monomial::Term> factors(m.terms().begin(), m.terms().end());
  std::sort(factors.begin(), factors.end(), [&](const auto& a, const auto& b) {
    return compare_variables(order, a.first, b.first) > 0;
  });
  Json out = Json::array();
  for (const auto& [v, e] : factors) {
    Json f = Json::object();
    f["symbol"] = ring.symbol(v.symbol).name;
    if (v.fixed_count) f["fixed"] = std::vector<std::uint32_t>(v.fixed().begin(), v.fixed().end());
    f["free"] = std::vector<std::uint32_t>(v.free().begin(), v.free().end());
    if (e != 1) f["exponent"] = e;
    out.push_back(std::move(f));
  }
  return out;
}

Json polynomial_to_json(const Polynomial& f, const Ring& ring, const OrderSpec& order) {
  Json out = Json::array();
  for (const auto& t : sorted_terms(order, f)) {
    Json term = Json::object();
    term["coefficient"] = t.coefficient.to_string();
    term["factors"] = monomial_to_json(t.monomial, ring, order);
    out.push_back(std::move(term));
  }
  return out;
}

Json witness_to_json(const IncWitness& pi) {
  Json out = Json::array();
  for (const auto& [s, t] : pi.mapping()) out.push_back(Json::array({s, t}));
  return out;
}

ProblemFile parse_problem(const Json& doc) {
  expect_object(doc, "", {"ring", "field", "order", "generators", "basis", "target", "config"});
  ProblemFile p;
  auto symbols = parse_ring(require(doc, "ring", ""), "ring");
  Field field = Field::rational();
  if (auto it = doc.find("field"); it != doc.end()) field = parse_field(*it, "field");
  try {
    p.ring = std::make_shared<const Ring>(std::move(symbols), field);
  } catch (const std::invalid_argument& e) {
    fail("ring", e.what());
  }
  if (auto it = doc.find("order"); it != doc.end())
    p.order = parse_order(*it, "order");
  else
    p.order.preset = "rowlex";
  try {
    (void)p.order.resolve(*p.ring);
  } catch (const ProblemError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    fail("order", e.what());
  }
  p.generators = parse_polynomial_list(require(doc, "generators", ""), *p.ring, "generators", false);
  if (auto it = doc.find("basis"); it != doc.end())
    p.basis = parse_polynomial_list(*it, *p.ring, "basis", false);
  if (auto it = doc.find("target"); it != doc.end())
    p.target = polynomial_from_json(*it, *p.ring, "target");
  if (auto it = doc.find("config"); it != doc.end()) p.config = parse_config(*it, "config");
  return p;
}

Json print_problem(const ProblemFile& p) {
  const auto order = p.order_spec();
  auto list = [&](const std::vector<Polynomial>& fs) {
    Json out = Json::array();
    for (const auto& f : fs) out.push_back(polynomial_to_json(f, *p.ring, order));
    return out;
  };
  Json doc = Json::object();
  doc["ring"] = ring_to_json(*p.ring);
  doc["field"] = field_to_json(p.ring->field());
  doc["order"] = order_to_json(p.order);
  doc["generators"] = list(p.generators);
  if (p.basis) doc["basis"] = list(*p.basis);
  if (p.target) doc["target"] = polynomial_to_json(*p.target, *p.ring, order);
  doc["config"] = config_to_json(p.config);
  return doc;
}

PosetTable parse_poset(const Json& j, const std::string& path) {
  expect_object(j, path, {"chain", "antichain", "leq"});
  if (j.size() != 1) fail(path, "give exactly one of chain, antichain, leq");
  if (auto it = j.find("chain"); it != j.end()) return PosetTable::chain(as_u32(*it, child(path, "chain")));
  if (auto it = j.find("antichain"); it != j.end())
    return PosetTable::antichain(as_u32(*it, child(path, "antichain")));
  const auto lp = child(path, "leq");
  const auto& rows = expect_array(j["leq"], lp);
  std::vector<std::vector<bool>> table;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& row = expect_array(rows[i], item(lp, i));
    std::vector<bool> r;
    for (std::size_t k = 0; k < row.size(); ++k) r.push_back(as_bool(row[k], item(item(lp, i), k)));
    table.push_back(std::move(r));
  }
  try {
    return PosetTable(std::move(table));
  } catch (const std::invalid_argument& e) {
    fail(lp, e.what());
  }
}

LabelledTree parse_tree(const Json& j, const std::string& path) {
  expect_object(j, path, {"label", "children"});
  LabelledTree t;
  t.label = as_u32(require(j, "label", path), child(path, "label"));
  if (auto it = j.find("children"); it != j.end()) {
    const auto cp = child(path, "children");
    expect_array(*it, cp);
    for (std::size_t i = 0; i < it->size(); ++i) t.children.push_back(parse_tree((*it)[i], item(cp, i)));
  }
  return t;
}

}  // namespace eqgb
