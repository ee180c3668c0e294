#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "septool/field.hpp"

namespace septool {

/// Recognized parameter families. Components may be omitted when a family is given.
enum class Family { None, Ya, Xa, Xi, Center, SaddleNode };
std::string family_name(Family f);

struct FieldDocument {
  std::string name;
  std::vector<std::string> vars;
  int trunc = kDefaultOrder;
  bool trunc_declared = false;
  std::map<std::string, Series1> series;  // named parameters
  std::vector<std::string> series_order;  // declaration order
  Family family = Family::None;
  std::string family_param;  // series name, empty if none
  std::variant<std::monostate, PlanarField, Field3> field;
  std::map<std::string, std::variant<Series2, Series3>> integrals;

  bool planar() const { return std::holds_alternative<PlanarField>(field); }
  const PlanarField& planar_field() const;  // ParseError unless two variables
  const Field3& field3() const;             // ParseError unless three variables
  const Series1& family_series() const;     // zero series when the family has no parameter
};

/// Parses a document. `trunc_override` > 0 replaces the declared working order.
/// Syntax errors raise ParseError with "line L, column C"; failed exact divisions
/// raise NotDivisible naming the expression.
FieldDocument parse_document(const std::string& source, int trunc_override = 0);

/// Parses a univariate series expression in the given variable (e.g. "z^2 + z^3 + O(10)").
Series1 parse_series(const std::string& text, const std::string& var);

/// Canonical text for a parsed document; parse_document(render_document(d)) reproduces d.
std::string render_document(const FieldDocument& doc);

/// Checks the family hypothesis and, when components are given, that they match the family builder.
void check_family(const FieldDocument& doc);

}  // namespace septool
