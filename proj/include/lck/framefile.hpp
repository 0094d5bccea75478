#ifndef LCK_FRAMEFILE_HPP
#define LCK_FRAMEFILE_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "lck/catalog.hpp"

namespace lck {

/// Parse failure with 1-based line/column into the offending document.
struct ParseError : std::runtime_error {
  ParseError(std::string msg, std::size_t line_, std::size_t col_)
      : std::runtime_error(msg + " (line " + std::to_string(line_) + ", column " +
                           std::to_string(col_) + ")"),
        line(line_),
        column(col_) {}
  std::size_t line;
  std::size_t column;
};

enum class RingKind { Constants, Sphere };

struct BracketRecord {
  std::size_t i, j, k;  // 1-based frame indices as written in the file
  std::string coeff;    // polynomial expression text
};

/// In-memory form of a frame-algebra description document.
struct FrameDescription {
  std::string name;  // optional; defaults to the file stem on load
  std::size_t dimension = 0;
  RingKind ring = RingKind::Constants;
  std::vector<BracketRecord> brackets;
  std::vector<std::vector<std::string>> metric;  // m x m rational entries
  std::vector<std::vector<std::string>> J;
  std::optional<std::vector<std::string>> theta;  // coefficients of the Lee form
};

/// Polynomial expression grammar (used for bracket coefficients and theta):
///   expr   := term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := '-'* atom ('^' uint)?
///   atom   := rational | variable | '(' expr ')'
///   rational := uint ('/' uint)?     variable := 'x' uint (1-based)
/// Variables are only allowed with ring = sphere and index <= dimension.
SpherePoly parse_poly_expression(const std::string& text, std::size_t m);

/// Reads a JSON document against the documented grammar. Throws ParseError
/// with line/column on malformed input.
FrameDescription parse_frame_description(const std::string& text);

std::string serialize_frame_description(const FrameDescription& desc);

/// Description of a catalog entry in the interchange format (round-trip
/// support). The declared theta is always included.
FrameDescription describe(const CatalogEntry<Rational>& entry);
FrameDescription describe(const CatalogEntry<SpherePoly>& entry);

/// Materialized custom entry: constants-ring descriptions load as rational
/// frame algebras, sphere descriptions as sphere-polynomial ones (rational
/// coefficient tables embed into the polynomial ring).
using LoadedEntry = std::variant<CatalogEntry<Rational>, CatalogEntry<SpherePoly>>;

/// Builds the entry from a parsed description. Bracket antisymmetry is
/// mirrored for pairs given in only one order and left as-is otherwise, so
/// defective tables surface in the structure checks rather than here.
/// Lee data: uses the declared theta when present; otherwise solves for it
/// (constants ring) or leaves it empty (sphere ring).
LoadedEntry instantiate(const FrameDescription& desc);

}  // namespace lck

#endif
