#include "eqgb/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <sstream>

#include "eqgb/engine.hpp"
#include "eqgb/finite_oracle.hpp"
#include "eqgb/problem_io.hpp"
#include "eqgb/wpo.hpp"

namespace eqgb {

namespace {

struct Options {
  std::string input;
  std::string wpo_kind;
  std::string order;
  std::string field;
  std::size_t max_steps = 0, max_width = 0, max_degree = 0, threads = 0;
  std::uint32_t width = 0;
  bool no_product_criterion = false;
  bool pretty = false;
  std::string output;
};

struct Flags {
  CLI::Option *order = nullptr, *field = nullptr, *max_steps = nullptr, *max_width = nullptr,
              *max_degree = nullptr, *threads = nullptr, *width = nullptr;
};

// Everything a subcommand hands back: a JSON document, its --pretty text and
// the exit code.
struct Outcome {
  Json doc;
  std::string text;
  int code = kExitOk;
};

Json field_flag_to_json(const std::string& flag) {
  if (flag == "rational") return "rational";
  const std::string prefix = "prime:";
  if (flag.rfind(prefix, 0) == 0) {
    Json j = Json::object();
    j["kind"] = "prime";
    try {
      j["p"] = std::stoull(flag.substr(prefix.size()));
    } catch (const std::exception&) {
      throw ProblemError("--field: expected rational or prime:<p>, got \"" + flag + "\"");
    }
    return j;
  }
  throw ProblemError("--field: expected rational or prime:<p>, got \"" + flag + "\"");
}

// --order takes a preset name or a comma-separated precedence, largest first.
Json order_flag_to_json(const std::string& flag) {
  if (flag.find(',') == std::string::npos && (flag == "rowlex" || flag == "elim-onefactor"))
    return flag;
  Json j = Json::object();
  j["precedence"] = Json::array();
  std::stringstream in(flag);
  for (std::string name; std::getline(in, name, ',');) j["precedence"].push_back(name);
  j["grading"] = "none";
  return j;
}

ProblemFile load_problem(const Options& o, const Flags& f) {
  Json doc = load_json(o.input);
  if (!doc.is_object()) throw ProblemError(o.input + ": <root>: expected an object");
  if (f.field->count()) doc["field"] = field_flag_to_json(o.field);
  if (f.order->count()) doc["order"] = order_flag_to_json(o.order);
  ProblemFile p = parse_problem(doc);
  if (f.max_steps->count()) p.config.max_steps = o.max_steps;
  if (f.max_width->count()) p.config.max_width = o.max_width;
  if (f.max_degree->count()) p.config.max_degree = o.max_degree;
  if (f.threads->count()) p.config.threads = o.threads;
  if (o.no_product_criterion) p.config.use_product_criterion = false;
  p.config.validate();
  return p;
}

Json poly_entry(const Polynomial& g, const Ring& ring, const OrderSpec& order) {
  Json e = Json::object();
  e["text"] = format_polynomial(order, ring, g);
  e["terms"] = polynomial_to_json(g, ring, order);
  return e;
}

Json poly_list(std::span<const Polynomial> fs, const Ring& ring, const OrderSpec& order) {
  Json out = Json::array();
  for (const auto& g : fs) out.push_back(poly_entry(g, ring, order));
  return out;
}

std::string text_list(std::span<const Polynomial> fs, const Ring& ring, const OrderSpec& order) {
  std::string out;
  for (const auto& g : fs) out += "  " + format_polynomial(order, ring, g) + "\n";
  return out;
}

Json stats_json(const GBStats& s, std::size_t raw) {
  Json j = Json::object();
  j["pairs_processed"] = s.pairs_processed;
  j["spolys_formed"] = s.spolys_formed;
  j["product_criterion_skips"] = s.product_criterion_skips;
  j["zero_reductions"] = s.zero_reductions;
  j["reduction_steps"] = s.reduction_steps;
  j["max_width"] = s.max_width;
  j["raw_basis_size"] = raw;
  return j;
}

std::string stats_text(const Json& stats) {
  std::string out = "stats:";
  for (const auto& [k, v] : stats.items()) out += " " + k + "=" + v.dump();
  return out + "\n";
}

// The basis a command works with: the one in the file, or a computed and
// interreduced equivariant Groebner basis.
struct WorkingBasis {
  Basis basis;
  std::optional<GBStatus> status;  // set when computed
};

WorkingBasis working_basis(const ProblemFile& p) {
  const auto order = p.order_spec();
  if (p.basis) return {Basis(p.ring, order, *p.basis), std::nullopt};
  auto result = equivariant_buchberger(p.ring, p.generators, order, p.config);
  return {interreduce(result.basis), result.status};
}

int status_code(const WorkingBasis& w) {
  return w.status == GBStatus::budget_exhausted ? kExitBudgetExhausted : kExitOk;
}

void note_status(Json& doc, const WorkingBasis& w) {
  doc["basis_source"] = w.status ? "computed" : "input";
  if (w.status) doc["status"] = to_string(*w.status);
}

Outcome cmd_gb(const ProblemFile& p) {
  const auto order = p.order_spec();
  auto result = equivariant_buchberger(p.ring, p.generators, order, p.config);
  Basis basis = interreduce(result.basis);
  Outcome o;
  o.doc["command"] = "gb";
  o.doc["status"] = to_string(result.status);
  o.doc["basis"] = poly_list(basis.elements(), *p.ring, order);
  o.doc["stats"] = stats_json(result.stats, result.basis.size());
  o.text = "status: " + to_string(result.status) + "\nbasis (" + std::to_string(basis.size()) +
           "):\n" + text_list(basis.elements(), *p.ring, order) + stats_text(o.doc["stats"]);
  o.code = result.status == GBStatus::complete ? kExitOk : kExitBudgetExhausted;
  return o;
}

const Polynomial& require_target(const ProblemFile& p) {
  if (!p.target) throw ProblemError("target: missing field");
  return *p.target;
}

Outcome cmd_reduce(const ProblemFile& p, bool membership) {
  const auto& target = require_target(p);
  const auto order = p.order_spec();
  auto w = working_basis(p);
  auto r = reduce(target, w.basis);
  const bool member = r.remainder.is_zero();
  Outcome o;
  o.doc["command"] = membership ? "member" : "reduce";
  note_status(o.doc, w);
  if (membership) o.doc["result"] = member;
  o.doc["target"] = poly_entry(target, *p.ring, order);
  o.doc["remainder"] = poly_entry(r.remainder, *p.ring, order);
  if (!membership) {
    o.doc["basis"] = poly_list(w.basis.elements(), *p.ring, order);
    Json cert = Json::array();
    for (const auto& step : r.certificate) {
      Json s = Json::object();
      s["basis_index"] = step.basis_index;
      s["witness"] = witness_to_json(step.witness);
      s["multiplier"] = format_monomial(order, *p.ring, step.multiplier);
      s["coefficient"] = step.coefficient.to_string();
      cert.push_back(std::move(s));
    }
    o.doc["certificate"] = std::move(cert);
  }
  const auto remainder = format_polynomial(order, *p.ring, r.remainder);
  if (membership)
    o.text = std::string(member ? "true" : "false") + "\nremainder: " + remainder + "\n";
  else
    o.text = "remainder: " + remainder + "\ncertificate steps: " +
             std::to_string(r.certificate.size()) + "\n";
  o.code = status_code(w);
  if (o.code == kExitOk && membership && !member) o.code = kExitFalse;
  return o;
}

std::uint32_t require_width(const Options& opt, const Flags& f) {
  if (!f.width->count()) throw ProblemError("--width is required");
  if (opt.width == 0) throw ProblemError("--width must be positive");
  return opt.width;
}

Outcome cmd_expand(const ProblemFile& p, std::uint32_t n) {
  const auto order = p.order_spec();
  auto w = working_basis(p);
  auto images = orbit_expand(w.basis, n, WiderElements::skip);
  Outcome o;
  o.doc["command"] = "expand";
  note_status(o.doc, w);
  o.doc["width"] = n;
  o.doc["count"] = images.size();
  o.doc["polynomials"] = poly_list(images, *p.ring, order);
  o.text = std::to_string(images.size()) + " polynomials at width " + std::to_string(n) + ":\n" +
           text_list(images, *p.ring, order);
  o.code = status_code(w);
  return o;
}

Outcome cmd_verify(const ProblemFile& p, std::uint32_t n) {
  const auto order = p.order_spec();
  auto w = working_basis(p);
  TruncatedRing tr(p.ring, n);
  auto expanded_basis = orbit_expand(w.basis, n, WiderElements::skip);
  auto expanded_gens = orbit_expand(p.generators, n, WiderElements::skip);
  const bool same = same_ideal(expanded_basis, expanded_gens, tr, order);
  const bool groebner = finite_is_groebner(expanded_basis, tr, order);
  Outcome o;
  o.doc["command"] = "verify";
  note_status(o.doc, w);
  o.doc["width"] = n;
  o.doc["basis_size"] = w.basis.size();
  o.doc["expanded_basis"] = expanded_basis.size();
  o.doc["expanded_generators"] = expanded_gens.size();
  o.doc["same_ideal"] = same;
  o.doc["expanded_basis_is_groebner"] = groebner;
  o.text = std::string(same ? "true" : "false") + "\nwidth " + std::to_string(n) + ": " +
           std::to_string(expanded_basis.size()) + " basis images, " +
           std::to_string(expanded_gens.size()) + " generator images, ordinary Groebner basis: " +
           (groebner ? "yes" : "no") + "\n";
  o.code = status_code(w);
  if (o.code == kExitOk && !same) o.code = kExitFalse;
  return o;
}

// ---------------------------------------------------------------------------
// wpo

std::vector<std::uint32_t> labels(const Json& j, const std::string& path) {
  if (!j.is_array()) throw ProblemError(path + ": expected an array of labels");
  std::vector<std::uint32_t> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number_unsigned())
      throw ProblemError(path + "[" + std::to_string(i) + "]: expected a non-negative integer");
    out.push_back(j[i].get<std::uint32_t>());
  }
  return out;
}

std::vector<std::uint64_t> vector_u64(const Json& j, const std::string& path) {
  if (!j.is_array()) throw ProblemError(path + ": expected an array of integers");
  std::vector<std::uint64_t> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number_unsigned())
      throw ProblemError(path + "[" + std::to_string(i) + "]: expected a non-negative integer");
    out.push_back(j[i].get<std::uint64_t>());
  }
  return out;
}

std::uint32_t max_tree_label(const LabelledTree& t) {
  std::uint32_t m = t.label;
  for (const auto& c : t.children) m = std::max(m, max_tree_label(c));
  return m;
}

// The file's poset, or the chain 0 < 1 < ... covering every label used.
PosetTable poset_or_chain(const Json& doc, std::uint32_t max_label) {
  if (auto it = doc.find("poset"); it != doc.end()) return parse_poset(*it, "poset");
  return PosetTable::chain(max_label + 1);
}

const Json& field_of(const Json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) throw ProblemError(std::string(key) + ": missing field");
  return *it;
}

Outcome cmd_wpo_pi(const Json& doc) {
  if (!doc.contains("ring")) throw ProblemError("ring: missing field");
  auto ring = std::make_shared<const Ring>(parse_ring(doc["ring"], "ring"), Field::rational());
  const auto order = OrderSpec::rowlex(*ring);
  Outcome o;
  o.doc["command"] = "wpo";
  o.doc["kind"] = "pi-divides";
  if (auto it = doc.find("items"); it != doc.end()) {
    if (!it->is_array()) throw ProblemError("items: expected an array of monomials");
    std::vector<Monomial> items;
    for (std::size_t i = 0; i < it->size(); ++i)
      items.push_back(monomial_from_json((*it)[i], *ring, "items[" + std::to_string(i) + "]"));
    Json pairs = Json::array();
    for (std::size_t i = 0; i < items.size(); ++i) {
      for (std::size_t k = 0; k < items.size(); ++k) {
        auto w = pi_divides(*ring, items[i], items[k]);
        Json e = Json::object();
        e["left"] = i;
        e["right"] = k;
        e["result"] = w.has_value();
        if (w) e["witness"] = witness_to_json(*w);
        pairs.push_back(std::move(e));
        o.text += format_monomial(order, *ring, items[i]) + " | " +
                  format_monomial(order, *ring, items[k]) + ": " + (w ? "true" : "false") + "\n";
      }
    }
    o.doc["pairs"] = std::move(pairs);
    return o;
  }
  auto u = monomial_from_json(field_of(doc, "left"), *ring, "left");
  auto v = monomial_from_json(field_of(doc, "right"), *ring, "right");
  auto w = pi_divides(*ring, u, v);
  o.doc["result"] = w.has_value();
  if (w) o.doc["witness"] = witness_to_json(*w);
  o.text = std::string(w ? "true" : "false") + "\n";
  o.code = w ? kExitOk : kExitFalse;
  return o;
}

Outcome cmd_wpo(const std::string& kind, const std::string& path) {
  Json doc = load_json(path);
  if (!doc.is_object()) throw ProblemError(path + ": <root>: expected an object");
  if (kind == "pi-divides") return cmd_wpo_pi(doc);
  bool result = false;
  if (kind == "dickson") {
    auto a = vector_u64(field_of(doc, "left"), "left");
    auto b = vector_u64(field_of(doc, "right"), "right");
    if (a.size() != b.size()) throw ProblemError("right: length differs from left");
    result = dickson_leq(a, b);
  } else if (kind == "multiset" || kind == "higman") {
    const auto& left = field_of(doc, "left");
    const auto& right = field_of(doc, "right");
    const bool vectors = kind == "higman" && !doc.contains("poset") &&
                         ((!left.empty() && left[0].is_array()) || (!right.empty() && right[0].is_array()));
    if (vectors) {
      auto seq = [](const Json& j, const std::string& p) {
        if (!j.is_array()) throw ProblemError(p + ": expected an array");
        std::vector<std::vector<std::uint64_t>> out;
        for (std::size_t i = 0; i < j.size(); ++i)
          out.push_back(vector_u64(j[i], p + "[" + std::to_string(i) + "]"));
        return out;
      };
      auto s = seq(left, "left"), t = seq(right, "right");
      for (const auto* side : {&s, &t})
        for (const auto& x : *side)
          if (!s.empty() && x.size() != s.front().size())
            throw ProblemError("vectors in left and right must share one length");
      result = higman_leq(std::span<const std::vector<std::uint64_t>>(s),
                          std::span<const std::vector<std::uint64_t>>(t));
    } else {
      auto a = labels(left, "left"), b = labels(right, "right");
      std::uint32_t top = 0;
      for (auto x : a) top = std::max(top, x);
      for (auto x : b) top = std::max(top, x);
      auto poset = poset_or_chain(doc, top);
      result = kind == "multiset" ? multiset_leq(a, b, poset) : higman_leq(a, b, poset);
    }
  } else if (kind == "kruskal") {
    auto s = parse_tree(field_of(doc, "left"), "left");
    auto t = parse_tree(field_of(doc, "right"), "right");
    auto poset = poset_or_chain(doc, std::max(max_tree_label(s), max_tree_label(t)));
    result = kruskal_leq(s, t, poset);
  } else {
    throw ProblemError("unknown wpo kind \"" + kind + "\"");
  }
  Outcome o;
  o.doc["command"] = "wpo";
  o.doc["kind"] = kind;
  o.doc["result"] = result;
  o.text = std::string(result ? "true" : "false") + "\n";
  o.code = result ? kExitOk : kExitFalse;
  return o;
}

Flags add_problem_flags(CLI::App* cmd, Options& o) {
  Flags f;
  cmd->add_option("input", o.input, "problem file (JSON)")->required();
  f.order = cmd->add_option("--order", o.order,
                            "rowlex, elim-onefactor, or symbols largest first, e.g. x,y");
  f.field = cmd->add_option("--field", o.field, "rational or prime:<p>");
  f.max_steps = cmd->add_option("--max-steps", o.max_steps, "budget: pairs processed");
  f.max_width = cmd->add_option("--max-width", o.max_width, "budget: S-polynomial width");
  f.max_degree = cmd->add_option("--max-degree", o.max_degree, "budget: remainder degree");
  f.threads = cmd->add_option("--threads", o.threads, "reduction threads per pair");
  cmd->add_flag("--no-product-criterion", o.no_product_criterion, "disable the coprime shortcut");
  cmd->add_flag("--pretty", o.pretty, "human-readable text instead of JSON");
  cmd->add_option("--output", o.output, "write the document to this file");
  return f;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Equivariant Groebner bases for ideals stable under increasing maps"};
  app.require_subcommand(1);
  app.add_flag("--pretty", opt.pretty, "human-readable text instead of JSON");
  app.add_option("--output", opt.output, "write the document to this file");

  auto* gb = app.add_subcommand("gb", "compute an equivariant Groebner basis");
  auto* red = app.add_subcommand("reduce", "reduce the file's target modulo the basis");
  auto* mem = app.add_subcommand("member", "decide membership of the file's target");
  auto* exp = app.add_subcommand("expand", "all images of the basis within a width");
  auto* ver = app.add_subcommand("verify", "compare truncations of basis and generators");
  auto* wpo = app.add_subcommand("wpo", "well-partial-order oracles");
  std::vector<std::pair<CLI::App*, Flags>> problem_commands;
  for (auto* cmd : {gb, red, mem, exp, ver}) problem_commands.emplace_back(cmd, add_problem_flags(cmd, opt));
  problem_commands[3].second.width = exp->add_option("--width", opt.width, "truncation width n");
  problem_commands[4].second.width = ver->add_option("--width", opt.width, "truncation width n");
  wpo->add_option("kind", opt.wpo_kind, "dickson, multiset, higman, kruskal or pi-divides")
      ->required()
      ->check(CLI::IsMember({"dickson", "multiset", "higman", "kruskal", "pi-divides"}));
  wpo->add_option("input", opt.input, "subject file (JSON)")->required();
  wpo->add_flag("--pretty", opt.pretty, "plain true/false instead of JSON");
  wpo->add_option("--output", opt.output, "write the document to this file");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitInvalidInput;
  }

  Outcome result;
  try {
    if (wpo->parsed()) {
      result = cmd_wpo(opt.wpo_kind, opt.input);
    } else {
      Flags flags;
      for (const auto& [cmd, f] : problem_commands)
        if (cmd->parsed()) flags = f;
      if (exp->parsed() || ver->parsed()) (void)require_width(opt, flags);
      ProblemFile p = load_problem(opt, flags);
      if (gb->parsed()) result = cmd_gb(p);
      if (red->parsed()) result = cmd_reduce(p, false);
      if (mem->parsed()) result = cmd_reduce(p, true);
      if (exp->parsed()) result = cmd_expand(p, opt.width);
      if (ver->parsed()) result = cmd_verify(p, opt.width);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }

  const std::string body = opt.pretty ? result.text : result.doc.dump(2) + "\n";
  if (!opt.output.empty()) {
    std::ofstream file(opt.output, std::ios::binary);
    if (!file) {
      err << "error: cannot write " << opt.output << "\n";
      return kExitInvalidInput;
    }
    file << body;
  } else {
    out << body;
  }
  return result.code;
}

}  // namespace eqgb
