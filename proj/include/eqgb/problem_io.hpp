#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "eqgb/engine.hpp"
#include "eqgb/orders.hpp"
#include "eqgb/ring.hpp"
#include "eqgb/wpo.hpp"

namespace eqgb {

using Json = nlohmann::ordered_json;

/// Malformed input. The message starts with a field path such as
/// "generators[1][0].factors[0].free" or, for syntax errors, a line and column.
class ProblemError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// The order as written in a problem file: a preset name, or an explicit
/// precedence (symbol names, largest first) with a grading.
struct OrderChoice {
  std::string preset;
  std::vector<std::string> precedence;
  Grading grading = Grading::none;

  OrderSpec resolve(const Ring& ring) const;
  bool operator==(const OrderChoice&) const = default;
};

struct ProblemFile {
  RingPtr ring;
  OrderChoice order;
  std::vector<Polynomial> generators;
  std::optional<std::vector<Polynomial>> basis;
  std::optional<Polynomial> target;
  EngineConfig config;

  OrderSpec order_spec() const { return order.resolve(*ring); }
  bool operator==(const ProblemFile& o) const;
};

ProblemFile parse_problem(const Json& doc);
/// Parses JSON text first; syntax errors carry line and column.
Json parse_json_text(std::string_view text);
Json load_json(const std::filesystem::path& path);
Json print_problem(const ProblemFile& problem);

Field parse_field(const Json& j, const std::string& path);
Json field_to_json(const Field& field);

/// Term list with terms in descending order and factors largest first.
Json polynomial_to_json(const Polynomial& f, const Ring& ring, const OrderSpec& order);
Polynomial polynomial_from_json(const Json& j, const Ring& ring, const std::string& path);
Json monomial_to_json(const Monomial& m, const Ring& ring, const OrderSpec& order);
Monomial monomial_from_json(const Json& j, const Ring& ring, const std::string& path);
/// [[source, target], ...]
Json witness_to_json(const IncWitness& pi);

std::vector<SymbolSchema> parse_ring(const Json& j, const std::string& path);
Json ring_to_json(const Ring& ring);

/// {"chain": n}, {"antichain": n} or {"leq": [[bool, ...], ...]}.
PosetTable parse_poset(const Json& j, const std::string& path);
/// {"label": a, "children": [...]}; children may be omitted.
LabelledTree parse_tree(const Json& j, const std::string& path);

}  // namespace eqgb
