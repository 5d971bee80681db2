// Domain types for hierarchical system models, the model-language parser,
// structural validation, and hierarchy flattening.
#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace repairc {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::string msg, int line, int column)
      : std::runtime_error("line " + std::to_string(line) + ":" +
                           std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// A discrete variable: named, with an ordered list of state labels.
// Declaration order of states is canonical; all tables index by it.
struct StateSpace {
  std::string name;
  std::vector<std::string> states;  // size >= 2, labels unique

  int card() const { return static_cast<int>(states.size()); }
  int state_index(std::string_view label) const;
};

struct CostPair {
  double replace = 0.0;
  std::optional<double> inspect;  // absent for atomic leaf components
};

// Conditional behavior table P(output | mode, inputs), stored dense.
// Row layout: (mode * tuple_count + input_tuple) * out_card + out_state.
struct Cpt {
  int mode_card = 0;
  std::int64_t tuple_count = 0;
  int out_card = 0;
  std::vector<double> p;
  std::vector<std::uint8_t> row_present;  // coverage, per (mode, tuple)

  std::span<const double> row(int mode, std::int64_t tuple) const {
    return {p.data() + (mode * tuple_count + tuple) * out_card,
            static_cast<std::size_t>(out_card)};
  }
  std::span<double> row(int mode, std::int64_t tuple) {
    return {p.data() + (mode * tuple_count + tuple) * out_card,
            static_cast<std::size_t>(out_card)};
  }
  void resize(int modes, std::int64_t tuples, int outs) {
    mode_card = modes;
    tuple_count = tuples;
    out_card = outs;
    p.assign(static_cast<std::size_t>(modes) * tuples * outs, 0.0);
    row_present.assign(static_cast<std::size_t>(modes) * tuples, 0);
  }
};

struct SystemModel;

// One component: atomic (behavior given by a Cpt) or hierarchical
// (behavior given by a nested submodel over the same interface).
struct ComponentSpec {
  std::string name;
  bool hierarchical = false;
  std::vector<int> inputs;  // declared input variables (scope-local ids)
  int output = -1;
  std::vector<std::string> modes;  // "ok" always first
  std::vector<double> prior;       // atomic only; hierarchical is compiled
  CostPair costs;
  Cpt cpt;                               // atomic only
  std::unique_ptr<SystemModel> submodel;  // hierarchical only
  std::vector<int> wiring;  // resolved source variable per input slot

  int mode_card() const { return static_cast<int>(modes.size()); }
};

struct SystemModel {
  std::string name;  // empty for nested submodels
  std::vector<StateSpace> variables;
  std::vector<ComponentSpec> components;
  std::vector<int> system_inputs;
  int system_output = -1;

  int var_index(std::string_view name) const;
  int component_index(std::string_view name) const;
  const StateSpace& var(int id) const { return variables[id]; }
};

// ---- parsing & serialization ----

// Parses a model-language document. Throws ParseError on syntax errors,
// unknown references, and duplicate names. Structural/numeric invariants
// beyond name resolution are left to validate_model.
SystemModel parse_model(std::string_view text);

// Canonical text form; parse_model(serialize_model(m)) reproduces m exactly.
std::string serialize_model(const SystemModel& model);

// Canonical-form equality.
bool models_equal(const SystemModel& a, const SystemModel& b);

// FNV-1a over the canonical serialization; used to pin plans to models.
std::uint64_t model_digest(const SystemModel& model);
std::string digest_hex(std::uint64_t digest);

// ---- validation ----

struct Violation {
  std::string where;  // component path or variable name
  std::string what;
};

// Structural and numeric checks; an empty report means the model is valid.
std::vector<Violation> validate_model(const SystemModel& model);

// ---- flattening ----

// Bookkeeping produced while flattening: where each original component
// ended up in the flat variable/component spaces.
struct FlatComponentInfo {
  std::string path;          // e.g. "G/N1"; top-level names stay bare
  bool leaf = false;
  int level = 0;             // top-level components are level 1
  std::vector<int> inputs;   // flat variable ids of the interface
  int output = -1;           // flat variable id
  int flat_component = -1;   // index into the flat model (leaves only)
};

struct FlattenIndex {
  std::vector<FlatComponentInfo> components;  // hierarchy DFS order
  int find(std::string_view path) const;
};

// Replaces every hierarchical component by its leaf descendants, composing
// wiring through the hierarchy. Component and internal-variable names are
// prefixed by path. The joint distribution over (system inputs, leaf modes,
// system output) is preserved.
SystemModel flatten(const SystemModel& model);
SystemModel flatten_indexed(const SystemModel& model, FlattenIndex& index);

// Shared numeric tolerance for normalization checks.
inline constexpr double kNormTolerance = 1e-9;

}  // namespace repairc
