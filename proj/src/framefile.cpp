#include "lck/framefile.hpp"

#include <cctype>
#include <sstream>

#include "json.hpp"

namespace lck {

namespace {

using json = nlohmann::ordered_json;

struct ExprParser {
  const std::string& s;
  std::size_t pos = 0;
  std::size_t m;

  void skip_ws() {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
  }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, 1, pos + 1); }

  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  unsigned long parse_uint() {
    skip_ws();
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
      fail("expected an integer");
    unsigned long v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      v = v * 10 + static_cast<unsigned long>(s[pos] - '0');
      ++pos;
    }
    return v;
  }

  SpherePoly parse_atom() {
    skip_ws();
    if (eat('(')) {
      SpherePoly e = parse_expr();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    if (pos < s.size() && (s[pos] == 'x' || s[pos] == 'X')) {
      ++pos;
      unsigned long var = parse_uint();
      if (var == 0) fail("variable indices are 1-based");
      if (m == 0) fail("variables are not allowed over the constants ring");
      if (var > m) fail("variable index exceeds the frame dimension");
      return SpherePoly::variable(var - 1, m);
    }
    if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      unsigned long num = parse_uint();
      if (eat('/')) {
        unsigned long den = parse_uint();
        if (den == 0) fail("zero denominator");
        return SpherePoly(Rational(static_cast<long>(num), static_cast<long>(den)));
      }
      return SpherePoly(Rational(static_cast<long>(num)));
    }
    fail("expected a number, a variable or '('");
  }

  SpherePoly parse_factor() {
    skip_ws();
    bool neg = false;
    while (eat('-')) neg = !neg;
    SpherePoly base = parse_atom();
    if (eat('^')) {
      unsigned long e = parse_uint();
      SpherePoly acc(Rational(1));
      for (unsigned long t = 0; t < e; ++t) acc *= base;
      base = std::move(acc);
    }
    return neg ? -base : base;
  }

  SpherePoly parse_term() {
    SpherePoly acc = parse_factor();
    while (eat('*')) acc *= parse_factor();
    return acc;
  }

  SpherePoly parse_expr() {
    SpherePoly acc = parse_term();
    while (true) {
      skip_ws();
      if (eat('+'))
        acc += parse_term();
      else if (eat('-'))
        acc -= parse_term();
      else
        break;
    }
    return acc;
  }

  SpherePoly run() {
    SpherePoly e = parse_expr();
    skip_ws();
    if (pos != s.size()) fail("unexpected trailing input");
    return e;
  }
};

std::pair<std::size_t, std::size_t> line_col_of(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t t = 0; t < byte && t < text.size(); ++t) {
    if (text[t] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

std::vector<std::vector<std::string>> read_matrix(const json& j, const std::string& field,
                                                  std::size_t m) {
  if (!j.contains(field)) throw ParseError("missing field '" + field + "'", 1, 1);
  const json& mat = j.at(field);
  if (!mat.is_array() || mat.size() != m)
    throw ParseError("field '" + field + "' must be a " + std::to_string(m) + "-row matrix", 1, 1);
  std::vector<std::vector<std::string>> out;
  for (const auto& row : mat) {
    if (!row.is_array() || row.size() != m)
      throw ParseError("field '" + field + "' must be square of size " + std::to_string(m), 1, 1);
    std::vector<std::string> r;
    for (const auto& cell : row) {
      if (cell.is_string())
        r.push_back(cell.get<std::string>());
      else if (cell.is_number_integer())
        r.push_back(std::to_string(cell.get<long long>()));
      else
        throw ParseError("matrix entries must be rational strings or integers", 1, 1);
    }
    out.push_back(std::move(r));
  }
  return out;
}

RatMat to_rat_matrix(const std::vector<std::vector<std::string>>& src) {
  RatMat out(src.size(), src.empty() ? 0 : src[0].size());
  for (std::size_t i = 0; i < src.size(); ++i)
    for (std::size_t j = 0; j < src[i].size(); ++j) out(i, j) = Rational::parse(src[i][j]);
  return out;
}

}  // namespace

SpherePoly parse_poly_expression(const std::string& text, std::size_t m) {
  ExprParser p{text, 0, m};
  return p.run();
}

FrameDescription parse_frame_description(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& err) {
    auto [line, col] = line_col_of(text, err.byte > 0 ? err.byte - 1 : 0);
    throw ParseError(err.what(), line, col);
  }
  if (!doc.is_object()) throw ParseError("document must be a JSON object", 1, 1);

  FrameDescription desc;
  if (doc.contains("name")) desc.name = doc.at("name").get<std::string>();
  if (!doc.contains("dimension") || !doc.at("dimension").is_number_integer())
    throw ParseError("missing integer field 'dimension'", 1, 1);
  long dim = doc.at("dimension").get<long>();
  if (dim < 1) throw ParseError("'dimension' must be positive", 1, 1);
  desc.dimension = static_cast<std::size_t>(dim);

  if (!doc.contains("ring") || !doc.at("ring").is_string())
    throw ParseError("missing string field 'ring'", 1, 1);
  std::string ring = doc.at("ring").get<std::string>();
  if (ring == "constants")
    desc.ring = RingKind::Constants;
  else if (ring == "sphere")
    desc.ring = RingKind::Sphere;
  else
    throw ParseError("'ring' must be \"constants\" or \"sphere\"", 1, 1);

  if (!doc.contains("brackets") || !doc.at("brackets").is_array())
    throw ParseError("missing array field 'brackets'", 1, 1);
  for (const auto& rec : doc.at("brackets")) {
    if (!rec.is_object() || !rec.contains("i") || !rec.contains("j") || !rec.contains("k") ||
        !rec.contains("coeff"))
      throw ParseError("bracket records need fields i, j, k, coeff", 1, 1);
    BracketRecord br;
    br.i = rec.at("i").get<std::size_t>();
    br.j = rec.at("j").get<std::size_t>();
    br.k = rec.at("k").get<std::size_t>();
    if (rec.at("coeff").is_string())
      br.coeff = rec.at("coeff").get<std::string>();
    else if (rec.at("coeff").is_number_integer())
      br.coeff = std::to_string(rec.at("coeff").get<long long>());
    else
      throw ParseError("bracket coefficients must be expression strings or integers", 1, 1);
    if (br.i == 0 || br.j == 0 || br.k == 0 || br.i > desc.dimension || br.j > desc.dimension ||
        br.k > desc.dimension)
      throw ParseError("bracket indices must lie in 1.." + std::to_string(desc.dimension), 1, 1);
    desc.brackets.push_back(std::move(br));
  }

  desc.metric = read_matrix(doc, "metric", desc.dimension);
  desc.J = read_matrix(doc, "J", desc.dimension);

  if (doc.contains("theta")) {
    const json& th = doc.at("theta");
    if (!th.is_array() || th.size() != desc.dimension)
      throw ParseError("'theta' must list one coefficient per frame index", 1, 1);
    std::vector<std::string> coeffs;
    for (const auto& cell : th) {
      if (cell.is_string())
        coeffs.push_back(cell.get<std::string>());
      else if (cell.is_number_integer())
        coeffs.push_back(std::to_string(cell.get<long long>()));
      else
        throw ParseError("'theta' entries must be expression strings or integers", 1, 1);
    }
    desc.theta = std::move(coeffs);
  }
  return desc;
}

std::string serialize_frame_description(const FrameDescription& desc) {
  json doc;
  if (!desc.name.empty()) doc["name"] = desc.name;
  doc["dimension"] = desc.dimension;
  doc["ring"] = desc.ring == RingKind::Constants ? "constants" : "sphere";
  doc["brackets"] = json::array();
  for (const auto& br : desc.brackets)
    doc["brackets"].push_back(json{{"i", br.i}, {"j", br.j}, {"k", br.k}, {"coeff", br.coeff}});
  doc["metric"] = desc.metric;
  doc["J"] = desc.J;
  if (desc.theta) doc["theta"] = *desc.theta;
  return doc.dump(2) + "\n";
}

namespace {

std::vector<std::vector<std::string>> matrix_strings(const RatMat& m) {
  std::vector<std::vector<std::string>> out(m.rows(), std::vector<std::string>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j).to_string();
  return out;
}

template <typename R>
FrameDescription describe_impl(const CatalogEntry<R>& entry, RingKind ring) {
  FrameDescription desc;
  desc.name = entry.name;
  desc.dimension = entry.algebra.dim();
  desc.ring = ring;
  for (std::size_t i = 0; i < desc.dimension; ++i)
    for (std::size_t j = i + 1; j < desc.dimension; ++j) {
      const VectorField<R>& br = entry.algebra.bracket_of(i, j);
      for (std::size_t k = 0; k < desc.dimension; ++k) {
        if (is_zero(br[k])) continue;
        std::ostringstream os;
        os << br[k];
        desc.brackets.push_back(BracketRecord{i + 1, j + 1, k + 1, os.str()});
      }
    }
  desc.metric = matrix_strings(entry.herm.g);
  desc.J = matrix_strings(entry.herm.J);
  std::vector<R> theta = oneform_coefficients(entry.lee.theta);
  std::vector<std::string> coeffs;
  for (const auto& c : theta) {
    std::ostringstream os;
    os << c;
    coeffs.push_back(os.str());
  }
  desc.theta = std::move(coeffs);
  return desc;
}

}  // namespace

FrameDescription describe(const CatalogEntry<Rational>& entry) {
  return describe_impl(entry, RingKind::Constants);
}

FrameDescription describe(const CatalogEntry<SpherePoly>& entry) {
  return describe_impl(entry, RingKind::Sphere);
}

LoadedEntry instantiate(const FrameDescription& desc) {
  std::size_t m = desc.dimension;
  RatMat g = to_rat_matrix(desc.metric);
  RatMat j = to_rat_matrix(desc.J);

  auto build = [&](auto ringTag) -> LoadedEntry {
    using R = decltype(ringTag);
    std::size_t vars = desc.ring == RingKind::Sphere ? m : 0;
    CatalogEntry<R> entry;
    entry.name = desc.name.empty() ? "custom" : desc.name;
    entry.algebra = FrameAlgebra<R>(m);
    // mirror pairs that appear in only one order; leave two-sided tables
    // untouched so antisymmetry defects stay visible to the checks
    std::vector<std::vector<bool>> given(m, std::vector<bool>(m, false));
    for (const auto& br : desc.brackets) given[br.i - 1][br.j - 1] = true;
    for (const auto& br : desc.brackets) {
      SpherePoly coeff = parse_poly_expression(br.coeff, vars);
      std::size_t a = br.i - 1, b = br.j - 1, c = br.k - 1;
      R value;
      if constexpr (std::is_same_v<R, Rational>) {
        if (!coeff.is_constant())
          throw std::invalid_argument(
              "bracket coefficient '" + br.coeff + "' is not constant over the constants ring");
        value = coeff.constant_value();
      } else {
        value = std::move(coeff);
      }
      if (a == b) {
        entry.algebra.set_bracket_raw(a, b, c, entry.algebra.bracket_of(a, b)[c] + value);
        continue;
      }
      entry.algebra.set_bracket_raw(a, b, c, entry.algebra.bracket_of(a, b)[c] + value);
      if (!given[b][a]) entry.algebra.set_bracket_raw(b, a, c, entry.algebra.bracket_of(b, a)[c] - value);
    }
    entry.herm.g = g;
    entry.herm.J = j;
    KForm<R> theta(m, 1);
    if (desc.theta) {
      for (std::size_t t = 0; t < m; ++t) {
        SpherePoly coeff = parse_poly_expression((*desc.theta)[t], vars);
        std::size_t idx = t;
        if constexpr (std::is_same_v<R, Rational>) {
          if (!coeff.is_constant())
            throw std::invalid_argument("theta entries must be constant over the constants ring");
          theta.at_sorted(&idx) = coeff.constant_value();
        } else {
          theta.at_sorted(&idx) = std::move(coeff);
        }
      }
    }
    try {
      entry.lee = lee_data_from_theta(entry.herm, theta);
    } catch (const std::exception&) {
      // degenerate metric; keep the raw theta so the structure checks can
      // report the defect instead of crashing here
      entry.lee.theta = theta;
      entry.lee.A = zero_field<R>(m);
      entry.lee.JA = zero_field<R>(m);
      entry.lee.norm_sq = R(0);
    }
    entry.lck = false;
    entry.vaisman = false;
    return entry;
  };

  if (desc.ring == RingKind::Constants) return build(Rational{});
  return build(SpherePoly{});
}

}  // namespace lck
