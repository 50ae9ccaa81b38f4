#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "tsv/symplectic.hpp"

namespace tsv {

/// Name lookup failed or a command argument is malformed.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A catalog of named tori, homomorphisms and block maps sharing one quadratic
/// extension tag. Everything in it has passed its type invariants.
struct Session {
  std::int64_t extension_d = 1;
  std::vector<ComplexTorus> tori;
  std::vector<std::pair<std::string, TorusHom>> morphisms;
  std::vector<std::pair<std::string, BlockIso>> block_isos;

  /// "X" or "X^" for the dual of X. Throws UsageError.
  ComplexTorus torus(const std::string& name) const;
  const TorusHom& morphism(const std::string& name) const;
  const BlockIso& block_iso(const std::string& name) const;

  friend bool operator==(const Session& lhs, const Session& rhs);
};

/// Parses and validates a session document. ParseError carries line and
/// column for syntax errors and for values that fail validation.
Session parse_session(const std::string& text);
Session load_session(const std::string& path);

/// Inverse of parse_session up to whitespace.
std::string serialize_session(const Session& session);

/// {"tsv": 1, "basis": [[...], ...]}, one basis vector per row. Returned as
/// written (rows are vectors).
IntMatrix parse_basis(const std::string& text);
IntMatrix load_basis(const std::string& path);

std::string read_file(const std::string& path);

}  // namespace tsv
