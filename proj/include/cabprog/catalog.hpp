// Copyright 2026 The cabprog Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Primitive catalog: model ids, display names, drawing roles and typed
// model-specific parameter schemas. Catalogs are plain data files (see
// docs/FORMATS.md); a six-primitive catalog ships built in.

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include "cabprog/common.hpp"
#include "cabprog/constants.hpp"
#include "cabprog/model.hpp"
#include "cabprog/text.hpp"
#include "cabprog/yaml_lite.hpp"

namespace cabprog {

enum class ParamKind { kInteger, kLengthMm, kEnumeration, kText };

// Role drives drawing symbols and the synthetic generator; it carries no
// meaning for parsing or evaluation.
enum class PrimitiveRole {
  kGeneric,
  kBaseBox,
  kDoor,
  kDrawer,
  kFixedShelf,
  kAdjustableShelf,
  kSidePanel,
};

inline std::string_view to_string(ParamKind k) {
  switch (k) {
    case ParamKind::kInteger: return "integer";
    case ParamKind::kLengthMm: return "length_mm";
    case ParamKind::kEnumeration: return "enumeration";
    case ParamKind::kText: return "text";
  }
  return "?";
}

inline std::optional<ParamKind> parse_param_kind(std::string_view s) {
  if (s == "integer") return ParamKind::kInteger;
  if (s == "length_mm") return ParamKind::kLengthMm;
  if (s == "enumeration") return ParamKind::kEnumeration;
  if (s == "text") return ParamKind::kText;
  return std::nullopt;
}

inline std::string_view to_string(PrimitiveRole r) {
  switch (r) {
    case PrimitiveRole::kGeneric: return "generic";
    case PrimitiveRole::kBaseBox: return "base_box";
    case PrimitiveRole::kDoor: return "door";
    case PrimitiveRole::kDrawer: return "drawer";
    case PrimitiveRole::kFixedShelf: return "fixed_shelf";
    case PrimitiveRole::kAdjustableShelf: return "adjustable_shelf";
    case PrimitiveRole::kSidePanel: return "side_panel";
  }
  return "?";
}

inline std::optional<PrimitiveRole> parse_role(std::string_view s) {
  for (auto r : {PrimitiveRole::kGeneric, PrimitiveRole::kBaseBox,
                 PrimitiveRole::kDoor, PrimitiveRole::kDrawer,
                 PrimitiveRole::kFixedShelf, PrimitiveRole::kAdjustableShelf,
                 PrimitiveRole::kSidePanel}) {
    if (to_string(r) == s) return r;
  }
  return std::nullopt;
}

struct ParamSchema {
  std::string key;
  ParamKind kind = ParamKind::kInteger;
  std::optional<double> min;         // integer / length_mm
  std::optional<double> max;         // integer / length_mm
  std::vector<std::string> members;  // enumeration
  ParamValue default_value;
  // Key of an integer parameter that fixes how many members of this series
  // are present (N governs NKA, NKB, ...). Empty when not part of a series.
  std::string counted_by;
  std::string description;
};

struct PrimitiveSchema {
  std::string model_id;
  std::string name;
  PrimitiveRole role = PrimitiveRole::kGeneric;
  std::vector<ParamSchema> params;

  const ParamSchema* find(std::string_view key) const {
    for (const auto& p : params) {
      if (p.key == key) return &p;
    }
    return nullptr;
  }
};

class PrimitiveCatalog {
 public:
  PrimitiveCatalog() = default;

  const std::string& version() const { return version_; }
  double divider_thickness_mm() const { return divider_thickness_mm_; }
  const std::vector<PrimitiveSchema>& schemas() const { return schemas_; }
  std::size_t size() const { return schemas_.size(); }

  const PrimitiveSchema* find(std::string_view model_id) const {
    auto it = index_.find(std::string(model_id));
    return it == index_.end() ? nullptr : &schemas_[it->second];
  }

  // Position of a model id in declaration order; used as the codec slot.
  std::optional<std::size_t> slot_of(std::string_view model_id) const {
    auto it = index_.find(std::string(model_id));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  const PrimitiveSchema& at(std::size_t slot) const { return schemas_.at(slot); }

  std::vector<const PrimitiveSchema*> with_role(PrimitiveRole role) const {
    std::vector<const PrimitiveSchema*> out;
    for (const auto& s : schemas_) {
      if (s.role == role) out.push_back(&s);
    }
    return out;
  }

  friend Result<PrimitiveCatalog> make_catalog(std::string version,
                                               double divider_thickness_mm,
                                               std::vector<PrimitiveSchema>);

 private:
  std::string version_;
  double divider_thickness_mm_ = 18.0;
  std::vector<PrimitiveSchema> schemas_;
  std::unordered_map<std::string, std::size_t> index_;
};

// ---------------------------------------------------------------------------
// Parameter values

inline std::string format_param_value(const ParamValue& v) {
  struct Visitor {
    std::string operator()(std::int64_t i) const { return std::to_string(i); }
    std::string operator()(double d) const { return text::format_number(d); }
    std::string operator()(const EnumToken& e) const { return e.token; }
    std::string operator()(const std::string& s) const { return text::quote(s); }
  };
  return std::visit(Visitor{}, v);
}

// A literal as written in program text, before schema typing.
struct Literal {
  enum class Kind { kInt, kReal, kString };
  Kind kind = Kind::kString;
  std::string text;  // lexeme for numbers, decoded content for strings
};

// Untyped interpretation: numbers by lexeme shape, strings as text.
inline std::optional<ParamValue> literal_value(const Literal& lit) {
  switch (lit.kind) {
    case Literal::Kind::kInt:
      if (auto v = text::parse_int(lit.text)) return ParamValue{*v};
      return std::nullopt;
    case Literal::Kind::kReal:
      if (auto v = text::parse_double(lit.text)) return ParamValue{*v};
      return std::nullopt;
    case Literal::Kind::kString:
      return ParamValue{lit.text};
  }
  return std::nullopt;
}

inline bool enum_is_integer_coded(const ParamSchema& schema) {
  if (schema.members.empty()) return false;
  for (const auto& m : schema.members) {
    if (!text::is_int_literal(m)) return false;
  }
  return true;
}

// Canonical enumeration token for an integer code ("01" -> "1").
inline std::string canonical_int_token(std::int64_t v) {
  return std::to_string(v);
}

// Schema-typed interpretation; nullopt on a type mismatch.
inline std::optional<ParamValue> coerce_literal(const ParamSchema& schema,
                                                const Literal& lit) {
  switch (schema.kind) {
    case ParamKind::kInteger:
      if (lit.kind != Literal::Kind::kInt) return std::nullopt;
      if (auto v = text::parse_int(lit.text)) return ParamValue{*v};
      return std::nullopt;
    case ParamKind::kLengthMm:
      if (lit.kind == Literal::Kind::kString) return std::nullopt;
      if (auto v = text::parse_double(lit.text)) return ParamValue{*v};
      return std::nullopt;
    case ParamKind::kEnumeration:
      if (lit.kind == Literal::Kind::kInt) {
        if (auto v = text::parse_int(lit.text)) {
          return ParamValue{EnumToken{canonical_int_token(*v)}};
        }
        return std::nullopt;
      }
      if (lit.kind == Literal::Kind::kString && !enum_is_integer_coded(schema)) {
        return ParamValue{EnumToken{lit.text}};
      }
      return std::nullopt;
    case ParamKind::kText:
      if (lit.kind != Literal::Kind::kString) return std::nullopt;
      return ParamValue{lit.text};
  }
  return std::nullopt;
}

// Same value in the schema's canonical representation, if one exists
// (integer 1 -> EnumToken "1" for enumerations, integer -> real for lengths).
inline ParamValue canonicalize(const ParamSchema& schema, const ParamValue& v) {
  switch (schema.kind) {
    case ParamKind::kLengthMm:
      if (auto* i = std::get_if<std::int64_t>(&v)) {
        return static_cast<double>(*i);
      }
      return v;
    case ParamKind::kEnumeration:
      if (auto* i = std::get_if<std::int64_t>(&v)) {
        return EnumToken{canonical_int_token(*i)};
      }
      if (auto* s = std::get_if<std::string>(&v);
          s != nullptr && !enum_is_integer_coded(schema)) {
        return EnumToken{*s};
      }
      return v;
    default:
      return v;
  }
}

// ---------------------------------------------------------------------------
// Parameter validation

namespace detail {

inline void check_range(const ParamSchema& schema, double v,
                        const std::string& shown, DiagnosticList& out) {
  if ((schema.min && v < *schema.min) || (schema.max && v > *schema.max)) {
    std::string range = "[" +
                        (schema.min ? text::format_number(*schema.min) : "-inf") +
                        ", " +
                        (schema.max ? text::format_number(*schema.max) : "inf") +
                        "]";
    out.push_back(make_error("param-domain", schema.key + "=" + shown +
                                                 " outside " + range));
  }
}

inline void check_value(const ParamSchema& schema, const ParamValue& v,
                        DiagnosticList& out) {
  const std::string shown = format_param_value(v);
  auto type_error = [&] {
    out.push_back(make_error("param-type",
                             schema.key + "=" + shown + " is not a valid " +
                                 std::string(to_string(schema.kind)) +
                                 " value"));
  };
  switch (schema.kind) {
    case ParamKind::kInteger:
      if (auto* i = std::get_if<std::int64_t>(&v)) {
        check_range(schema, static_cast<double>(*i), shown, out);
      } else {
        type_error();
      }
      return;
    case ParamKind::kLengthMm: {
      double d = 0.0;
      if (auto* i = std::get_if<std::int64_t>(&v)) {
        d = static_cast<double>(*i);
      } else if (auto* r = std::get_if<double>(&v)) {
        d = *r;
      } else {
        type_error();
        return;
      }
      if (!std::isfinite(d)) {
        type_error();
        return;
      }
      check_range(schema, d, shown, out);
      return;
    }
    case ParamKind::kEnumeration: {
      std::string token;
      if (auto* e = std::get_if<EnumToken>(&v)) {
        token = e->token;
      } else if (auto* i = std::get_if<std::int64_t>(&v)) {
        token = canonical_int_token(*i);
      } else if (auto* s = std::get_if<std::string>(&v);
                 s != nullptr && !enum_is_integer_coded(schema)) {
        token = *s;
      } else {
        type_error();
        return;
      }
      for (const auto& m : schema.members) {
        if (m == token) return;
      }
      std::string domain;
      for (const auto& m : schema.members) {
        domain += (domain.empty() ? "" : ", ") + m;
      }
      out.push_back(make_error("param-domain", schema.key + "=" + token +
                                                   " not in {" + domain + "}"));
      return;
    }
    case ParamKind::kText:
      if (!std::holds_alternative<std::string>(v)) type_error();
      return;
  }
}

}  // namespace detail

// Reports unknown keys, type and domain violations, and series arity (the
// number of keys counted by an integer parameter must equal its value).
inline DiagnosticList validate_params(const PrimitiveSchema& schema,
                                      const ParamMap& params) {
  DiagnosticList out;
  for (const auto& [key, value] : params) {
    const ParamSchema* ps = schema.find(key);
    if (ps == nullptr) {
      out.push_back(make_error("param-unknown", "unknown parameter '" + key +
                                                    "' for " + schema.model_id));
      continue;
    }
    detail::check_value(*ps, value, out);
  }

  for (const auto& counter : schema.params) {
    std::vector<const ParamSchema*> series;
    for (const auto& p : schema.params) {
      if (p.counted_by == counter.key) series.push_back(&p);
    }
    if (series.empty()) continue;

    std::int64_t n = 0;
    const ParamValue* given = params.find(counter.key);
    const ParamValue& count_value = given ? *given : counter.default_value;
    if (auto* i = std::get_if<std::int64_t>(&count_value)) {
      n = *i;
    } else {
      continue;  // already reported as a type error
    }
    for (std::size_t i = 0; i < series.size(); ++i) {
      bool present = params.contains(series[i]->key);
      auto idx = static_cast<std::int64_t>(i);
      if (idx < n && !present) {
        out.push_back(make_error(
            "param-missing", "missing " + series[i]->key + " (" + counter.key +
                                 "=" + std::to_string(n) + " requires " +
                                 std::to_string(n) + " values)"));
      } else if (idx >= n && present) {
        out.push_back(make_error(
            "param-count", series[i]->key + " given but " + counter.key + "=" +
                               std::to_string(n)));
      }
    }
    if (n > static_cast<std::int64_t>(series.size())) {
      out.push_back(make_error(
          "param-count", counter.key + "=" + std::to_string(n) + " exceeds the " +
                             std::to_string(series.size()) +
                             " available series keys"));
    }
  }
  return out;
}

// The default parameter map: every non-series key at its default, plus the
// first n series keys where n is the default of the counting key.
inline ParamMap default_params(const PrimitiveSchema& schema) {
  ParamMap out;
  std::unordered_map<std::string, std::int64_t> seen_in_series;
  for (const auto& p : schema.params) {
    if (!p.counted_by.empty()) {
      const ParamSchema* counter = schema.find(p.counted_by);
      std::int64_t n = 0;
      if (counter != nullptr) {
        if (auto* i = std::get_if<std::int64_t>(&counter->default_value)) n = *i;
      }
      if (seen_in_series[p.counted_by]++ >= n) continue;
    }
    out.insert(p.key, p.default_value);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Catalog construction and file format

inline bool is_param_key(std::string_view key) {
  if (key.empty() || !(key[0] >= 'A' && key[0] <= 'Z')) return false;
  for (char c : key) {
    if (!((c >= 'A' && c <= 'Z') || text::is_digit(c))) return false;
  }
  return true;
}

// Validates schemas and builds the lookup index.
inline Result<PrimitiveCatalog> make_catalog(
    std::string version, double divider_thickness_mm,
    std::vector<PrimitiveSchema> schemas) {
  DiagnosticList diags;
  if (schemas.empty()) {
    diags.push_back(make_error("catalog-empty", "catalog has no primitives"));
  }
  if (!(divider_thickness_mm >= 0.0) || !std::isfinite(divider_thickness_mm)) {
    diags.push_back(make_error("catalog-value",
                               "divider_thickness must be a finite value >= 0"));
  }
  PrimitiveCatalog cat;
  for (std::size_t i = 0; i < schemas.size(); ++i) {
    const auto& s = schemas[i];
    const std::string where = "primitive '" + s.model_id + "'";
    if (s.model_id.empty()) {
      diags.push_back(make_error("catalog-value", "empty model id"));
    }
    if (!cat.index_.emplace(s.model_id, i).second) {
      diags.push_back(
          make_error("duplicate-id", "duplicate model id '" + s.model_id + "'"));
    }
    if (s.params.size() > static_cast<std::size_t>(kMaxParamsPerPrimitive)) {
      diags.push_back(make_error(
          "param-limit", where + " declares " + std::to_string(s.params.size()) +
                             " parameters; at most " +
                             std::to_string(kMaxParamsPerPrimitive) +
                             " are allowed"));
    }
    for (std::size_t j = 0; j < s.params.size(); ++j) {
      const auto& p = s.params[j];
      if (!is_param_key(p.key)) {
        diags.push_back(make_error("catalog-key", where + ": parameter key '" +
                                                      p.key +
                                                      "' must match [A-Z][A-Z0-9]*"));
      }
      for (std::size_t k = 0; k < j; ++k) {
        if (s.params[k].key == p.key) {
          diags.push_back(make_error(
              "duplicate-key", where + ": duplicate parameter '" + p.key + "'"));
        }
      }
      if (p.min && p.max && *p.min > *p.max) {
        diags.push_back(
            make_error("catalog-value", where + ": " + p.key + " has min > max"));
      }
      if (p.kind == ParamKind::kEnumeration && p.members.empty()) {
        diags.push_back(make_error(
            "catalog-value", where + ": enumeration " + p.key + " has no members"));
      }
      if (!p.counted_by.empty()) {
        const ParamSchema* c = s.find(p.counted_by);
        if (c == nullptr || c->kind != ParamKind::kInteger || c == &p) {
          diags.push_back(make_error(
              "catalog-value", where + ": " + p.key +
                                   " counted_by must name another integer "
                                   "parameter"));
        }
      }
    }
    for (auto& d : validate_params(s, default_params(s))) {
      d.code = "default-out-of-domain";
      d.message = where + ": default " + d.message;
      diags.push_back(std::move(d));
    }
  }
  if (has_errors(diags)) return Result<PrimitiveCatalog>::failure(diags);
  cat.version_ = std::move(version);
  cat.divider_thickness_mm_ = divider_thickness_mm;
  cat.schemas_ = std::move(schemas);
  return Result<PrimitiveCatalog>(std::move(cat), std::move(diags));
}

namespace detail {

inline Literal scalar_literal(const yaml::Node& n) {
  if (!n.quoted && text::is_int_literal(n.scalar)) {
    return {Literal::Kind::kInt, n.scalar};
  }
  if (!n.quoted && text::is_decimal_literal(n.scalar)) {
    return {Literal::Kind::kReal, n.scalar};
  }
  return {Literal::Kind::kString, n.scalar};
}

class CatalogReader {
 public:
  Result<PrimitiveCatalog> read(std::string_view text) {
    auto doc = yaml::parse(text);
    if (!doc) return Result<PrimitiveCatalog>::failure(doc.diagnostics());
    const yaml::Node& root = doc.value();
    if (!root.is_mapping()) {
      return fail_at(root, "catalog-syntax", "top level must be a mapping");
    }
    std::string version;
    double thickness = 18.0;
    const yaml::Node* list = nullptr;
    for (const auto& e : root.entries) {
      if (e.key == "version") {
        if (!e.value.is_scalar()) error(e.value, "version must be a scalar");
        version = e.value.scalar;
      } else if (e.key == "divider_thickness") {
        thickness = number(e.value, "divider_thickness").value_or(thickness);
      } else if (e.key == "catalog") {
        list = &e.value;
      } else {
        diags_.push_back(make_error("catalog-syntax",
                                    "unknown top-level key '" + e.key + "'",
                                    e.key_span));
      }
    }
    if (list == nullptr || !list->is_sequence()) {
      return fail_at(root, "catalog-syntax",
                     "missing 'catalog:' sequence of primitives");
    }
    std::vector<PrimitiveSchema> schemas;
    for (const auto& item : list->items) {
      if (auto s = primitive(item)) schemas.push_back(std::move(*s));
    }
    if (has_errors(diags_)) return Result<PrimitiveCatalog>::failure(diags_);
    auto cat = make_catalog(std::move(version), thickness, std::move(schemas));
    if (!cat) {
      // Catalog-level errors have no span; point at the list.
      for (auto& d : cat.diagnostics()) {
        if (!d.span) d.span = list->span;
      }
    }
    return cat;
  }

 private:
  Result<PrimitiveCatalog> fail_at(const yaml::Node& n, std::string code,
                                   std::string message) {
    diags_.push_back(make_error(std::move(code), std::move(message), n.span));
    return Result<PrimitiveCatalog>::failure(diags_);
  }

  void error(const yaml::Node& n, std::string message) {
    diags_.push_back(make_error("catalog-syntax", std::move(message), n.span));
  }

  std::optional<double> number(const yaml::Node& n, std::string_view what) {
    if (n.is_scalar() && !n.quoted &&
        (text::is_int_literal(n.scalar) || text::is_decimal_literal(n.scalar))) {
      return text::parse_double(n.scalar);
    }
    error(n, std::string(what) + " must be a number");
    return std::nullopt;
  }

  std::string string_field(const yaml::Node& n, std::string_view what) {
    if (!n.is_scalar()) {
      error(n, std::string(what) + " must be a scalar");
      return {};
    }
    return n.scalar;
  }

  std::optional<PrimitiveSchema> primitive(const yaml::Node& item) {
    if (!item.is_mapping()) {
      error(item, "catalog entries must be mappings");
      return std::nullopt;
    }
    PrimitiveSchema s;
    bool has_id = false;
    for (const auto& e : item.entries) {
      if (e.key == "id") {
        s.model_id = string_field(e.value, "id");
        has_id = true;
      } else if (e.key == "name") {
        s.name = string_field(e.value, "name");
      } else if (e.key == "role") {
        auto r = parse_role(string_field(e.value, "role"));
        if (!r) {
          error(e.value, "unknown role '" + e.value.scalar + "'");
        } else {
          s.role = *r;
        }
      } else if (e.key == "params") {
        if (e.value.is_null()) continue;
        if (!e.value.is_sequence()) {
          error(e.value, "params must be a sequence");
          continue;
        }
        for (const auto& p : e.value.items) {
          if (auto ps = param(p)) s.params.push_back(std::move(*ps));
        }
      } else {
        diags_.push_back(make_error("catalog-syntax",
                                    "unknown primitive key '" + e.key + "'",
                                    e.key_span));
      }
    }
    if (!has_id) {
      error(item, "primitive entry without 'id'");
      return std::nullopt;
    }
    return s;
  }

  std::optional<ParamSchema> param(const yaml::Node& n) {
    if (!n.is_mapping()) {
      error(n, "parameter entries must be mappings");
      return std::nullopt;
    }
    ParamSchema p;
    const yaml::Node* kind = n.find("kind");
    const yaml::Node* key = n.find("key");
    const yaml::Node* def = n.find("default");
    if (key == nullptr || kind == nullptr || def == nullptr) {
      error(n, "parameter entries need 'key', 'kind' and 'default'");
      return std::nullopt;
    }
    p.key = string_field(*key, "key");
    auto k = parse_param_kind(string_field(*kind, "kind"));
    if (!k) {
      error(*kind, "unknown parameter kind '" + kind->scalar + "'");
      return std::nullopt;
    }
    p.kind = *k;
    for (const auto& e : n.entries) {
      if (e.key == "key" || e.key == "kind" || e.key == "default") continue;
      if (e.key == "min") {
        p.min = number(e.value, "min");
      } else if (e.key == "max") {
        p.max = number(e.value, "max");
      } else if (e.key == "members") {
        if (!e.value.is_sequence()) {
          error(e.value, "members must be a sequence");
          continue;
        }
        for (const auto& m : e.value.items) {
          if (!m.is_scalar()) {
            error(m, "enumeration members must be scalars");
            continue;
          }
          std::string tok = m.scalar;
          if (!m.quoted && text::is_int_literal(tok)) {
            if (auto v = text::parse_int(tok)) tok = canonical_int_token(*v);
          }
          p.members.push_back(std::move(tok));
        }
      } else if (e.key == "counted_by") {
        p.counted_by = string_field(e.value, "counted_by");
      } else if (e.key == "description") {
        p.description = string_field(e.value, "description");
      } else {
        diags_.push_back(make_error("catalog-syntax",
                                    "unknown parameter key '" + e.key + "'",
                                    e.key_span));
      }
    }
    if (!def->is_scalar()) {
      error(*def, "default must be a scalar");
      return std::nullopt;
    }
    auto v = coerce_literal(p, scalar_literal(*def));
    if (!v) {
      diags_.push_back(make_error("default-out-of-domain",
                                  "default for " + p.key + " is not a valid " +
                                      std::string(to_string(p.kind)) + " value",
                                  def->span));
      return std::nullopt;
    }
    p.default_value = std::move(*v);
    return p;
  }

  DiagnosticList diags_;
};

}  // namespace detail

inline Result<PrimitiveCatalog> load_catalog(std::string_view text) {
  return detail::CatalogReader().read(text);
}

// Canonical catalog text; load_catalog(save_catalog(c)) reproduces c.
inline std::string save_catalog(const PrimitiveCatalog& catalog) {
  std::string out;
  out += "version: " + yaml::plain_or_quoted(catalog.version()) + "\n";
  out += "divider_thickness: " +
         text::format_number(catalog.divider_thickness_mm()) + "\n";
  out += "catalog:\n";
  for (const auto& s : catalog.schemas()) {
    out += "  - id: " + yaml::plain_or_quoted(s.model_id) + "\n";
    out += "    name: " + yaml::plain_or_quoted(s.name) + "\n";
    out += "    role: " + std::string(to_string(s.role)) + "\n";
    if (s.params.empty()) continue;
    out += "    params:\n";
    for (const auto& p : s.params) {
      out += "      - key: " + p.key + "\n";
      out += "        kind: " + std::string(to_string(p.kind)) + "\n";
      if (p.min) out += "        min: " + text::format_number(*p.min) + "\n";
      if (p.max) out += "        max: " + text::format_number(*p.max) + "\n";
      if (!p.members.empty()) {
        out += "        members: [";
        for (std::size_t i = 0; i < p.members.size(); ++i) {
          if (i) out += ", ";
          out += text::is_int_literal(p.members[i]) ? p.members[i]
                                                    : text::quote(p.members[i]);
        }
        out += "]\n";
      }
      std::string def;
      if (auto* e = std::get_if<EnumToken>(&p.default_value)) {
        def = text::is_int_literal(e->token) ? e->token : text::quote(e->token);
      } else {
        def = format_param_value(p.default_value);
      }
      out += "        default: " + def + "\n";
      if (!p.counted_by.empty()) out += "        counted_by: " + p.counted_by + "\n";
      if (!p.description.empty()) {
        out += "        description: " + yaml::plain_or_quoted(p.description) +
               "\n";
      }
    }
  }
  return out;
}

// Text of the shipped mini-catalog (identical to data/mini_catalog.yaml).
inline constexpr std::string_view kBuiltinCatalogText = R"(version: mini-1
divider_thickness: 18
catalog:
  - id: M-BB01
    name: Base box
    role: base_box
    params:
      - key: N
        kind: integer
        min: 1
        max: 6
        default: 1
        description: Number of vertically divided spaces
      - key: NKA
        kind: length_mm
        min: 0
        max: 4500
        default: 0
        counted_by: N
        description: Width of divided space 1
      - key: NKB
        kind: length_mm
        min: 0
        max: 4500
        default: 0
        counted_by: N
        description: Width of divided space 2
      - key: NKC
        kind: length_mm
        min: 0
        max: 4500
        default: 0
        counted_by: N
        description: Width of divided space 3
      - key: NKD
        kind: length_mm
        min: 0
        max: 4500
        default: 0
        counted_by: N
        description: Width of divided space 4
      - key: NKE
        kind: length_mm
        min: 0
        max: 4500
        default: 0
        counted_by: N
        description: Width of divided space 5
      - key: NKF
        kind: length_mm
        min: 0
        max: 4500
        default: 0
        counted_by: N
        description: Width of divided space 6
      - key: DBXX
        kind: enumeration
        members: [1, 2, 3]
        default: 1
        description: "Frame position: 1 no frame, 2 lower frame, 3 upper frame"
  - id: M-DOOR
    name: Door
    role: door
  - id: M-DRAWER
    name: Drawer
    role: drawer
    params:
      - key: SLD
        kind: enumeration
        members: [1, 2]
        default: 1
        description: "Slide type: 1 ball bearing, 2 undermount"
      - key: HDL
        kind: text
        default: "bar"
        description: Handle style
  - id: M-FSHELF
    name: Fixed shelf
    role: fixed_shelf
  - id: M-ASHELF
    name: Adjustable shelf
    role: adjustable_shelf
  - id: M-PANEL
    name: Side panel
    role: side_panel
)";

inline const PrimitiveCatalog& builtin_catalog() {
  static const PrimitiveCatalog catalog = [] {
    auto r = load_catalog(kBuiltinCatalogText);
    if (!r) throw std::logic_error("built-in catalog failed to load");
    return std::move(r).value();
  }();
  return catalog;
}

}  // namespace cabprog
