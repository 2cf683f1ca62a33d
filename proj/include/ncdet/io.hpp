#pragma once

/**
 * @file io.hpp
 * @brief Expression parser, ring specifications and the JSON matrix
 * document format.
 *
 * Grammar (whitespace is insignificant, juxtaposition is an error):
 *
 *   expr   := ['-'] term (('+' | '-') term)*
 *   term   := factor ('*' factor)*
 *   factor := primary ('^' INTEGER)*
 *   primary:= INTEGER | IDENT | '(' expr ')'
 *
 * Products are left-associative and keep operand order.
 *
 * Matrix document:
 *
 *   { "ring": {"kind": "free", "generators": ["a","b","c","d"]},
 *     "n": 2, "entries": [["a","b"],["c","d"]], "t": 1 }
 *
 * "kind" is one of integer | free | grassmann; a grassmann ring declares
 * "rank" instead of generators. Entries may be JSON strings or integers;
 * "t" (optional) is a supermatrix block split.
 */

#include <cctype>
#include <cstddef>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "algebra_core.hpp"
#include "errors.hpp"
#include "freealg.hpp"
#include "grassmann.hpp"
#include "matrix.hpp"

namespace ncdet {

enum class RingKind { integer, free, grassmann };

inline const char* to_string(RingKind k) {
  switch (k) {
    case RingKind::integer: return "integer";
    case RingKind::free: return "free";
    case RingKind::grassmann: return "grassmann";
  }
  return "?";
}

inline bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

struct RingSpec {
  RingKind kind = RingKind::integer;
  std::vector<std::string> generators;
  int rank = 0;

  static RingSpec integer() { return {}; }
  static RingSpec free(std::vector<std::string> names) {
    RingSpec s{RingKind::free, std::move(names), 0};
    s.validate();
    return s;
  }
  static RingSpec grassmann(int rank) {
    RingSpec s{RingKind::grassmann, {}, rank};
    s.validate();
    return s;
  }

  void validate() const {
    if (kind == RingKind::free) {
      for (std::size_t i = 0; i < generators.size(); ++i) {
        if (!is_identifier(generators[i])) throw InputError("invalid generator name '" + generators[i] + "'");
        for (std::size_t j = 0; j < i; ++j)
          if (generators[i] == generators[j]) throw InputError("duplicate generator '" + generators[i] + "'");
      }
    }
    if (kind == RingKind::grassmann && (rank < 0 || rank > GrassmannElem::kMaxRank))
      throw InputError("grassmann rank must lie in [0, 16]");
  }
};

// ---------------------------------------------------------------------------
// Expression parsing

template <Ring R>
class ExpressionParser {
 public:
  explicit ExpressionParser(RingSpec spec) : spec_(std::move(spec)) {
    spec_.validate();
    if constexpr (std::is_same_v<R, FreePoly>) {
      if (spec_.kind != RingKind::free) throw InputError("ring spec is not a free algebra");
      alphabet_ = make_alphabet(spec_.generators);
    } else if constexpr (std::is_same_v<R, GrassmannElem>) {
      if (spec_.kind != RingKind::grassmann) throw InputError("ring spec is not a Grassmann algebra");
    } else if constexpr (std::is_same_v<R, IntElem>) {
      if (spec_.kind != RingKind::integer) throw InputError("ring spec is not the integers");
    }
  }

  /// Reuses an existing alphabet so parsed values combine with it.
  explicit ExpressionParser(AlphabetPtr alphabet)
    requires std::is_same_v<R, FreePoly>
      : spec_(RingSpec::free(alphabet->names())), alphabet_(std::move(alphabet)) {}

  const AlphabetPtr& alphabet() const noexcept { return alphabet_; }

  R parse(std::string_view src) const {
    State st{src, 0};
    skip_ws(st);
    if (st.pos == src.size()) throw ParseError("empty expression", st.pos);
    R value = parse_expr(st);
    skip_ws(st);
    if (st.pos != src.size()) throw ParseError(unexpected(st), st.pos);
    return value;
  }

 private:
  static constexpr std::size_t kMaxExponent = 4096;

  struct State {
    std::string_view src;
    std::size_t pos;
  };

  static void skip_ws(State& st) {
    while (st.pos < st.src.size() && std::isspace(static_cast<unsigned char>(st.src[st.pos]))) ++st.pos;
  }

  static bool accept(State& st, char c) {
    skip_ws(st);
    if (st.pos < st.src.size() && st.src[st.pos] == c) {
      ++st.pos;
      return true;
    }
    return false;
  }

  static std::string unexpected(const State& st) {
    if (st.pos >= st.src.size()) return "unexpected end of expression";
    return std::string("unexpected '") + st.src[st.pos] + "'";
  }

  R parse_expr(State& st) const {
    const bool negate = accept(st, '-');
    R acc = parse_term(st);
    if (negate) acc = -acc;
    while (true) {
      if (accept(st, '+'))
        acc = acc + parse_term(st);
      else if (accept(st, '-'))
        acc = acc - parse_term(st);
      else
        return acc;
    }
  }

  R parse_term(State& st) const {
    R acc = parse_factor(st);
    while (accept(st, '*')) acc = acc * parse_factor(st);
    return acc;
  }

  R parse_factor(State& st) const {
    R base = parse_primary(st);
    while (accept(st, '^')) {
      skip_ws(st);
      if (st.pos < st.src.size() && st.src[st.pos] == '-') throw ParseError("negative exponent", st.pos);
      const std::size_t at = st.pos;
      const std::string digits = read_digits(st);
      if (digits.empty()) throw ParseError("expected exponent", at);
      if (digits.size() > 4 || std::stoul(digits) > kMaxExponent) throw ParseError("exponent too large", at);
      const std::size_t e = std::stoul(digits);
      R result{Integer(1)};
      for (std::size_t i = 0; i < e; ++i) result = result * base;
      base = std::move(result);
    }
    return base;
  }

  R parse_primary(State& st) const {
    skip_ws(st);
    if (st.pos >= st.src.size()) throw ParseError("unexpected end of expression", st.pos);
    const char c = st.src[st.pos];
    if (c == '(') {
      ++st.pos;
      R inner = parse_expr(st);
      if (!accept(st, ')')) throw ParseError("expected ')'", st.pos);
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return R{Integer(read_digits(st))};
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t at = st.pos;
      while (st.pos < st.src.size() &&
             (std::isalnum(static_cast<unsigned char>(st.src[st.pos])) || st.src[st.pos] == '_'))
        ++st.pos;
      return resolve(st.src.substr(at, st.pos - at), at);
    }
    throw ParseError(unexpected(st), st.pos);
  }

  static std::string read_digits(State& st) {
    const std::size_t start = st.pos;
    while (st.pos < st.src.size() && std::isdigit(static_cast<unsigned char>(st.src[st.pos]))) ++st.pos;
    return std::string(st.src.substr(start, st.pos - start));
  }

  R resolve(std::string_view name, std::size_t at) const {
    if constexpr (std::is_same_v<R, FreePoly>) {
      if (auto id = alphabet_->find(name)) return FreePoly::generator(alphabet_, *id);
    } else if constexpr (std::is_same_v<R, GrassmannElem>) {
      if (name.size() >= 2 && name[0] == 'v') {
        const std::string_view digits = name.substr(1);
        bool numeric = digits.size() <= 2;
        for (char d : digits) numeric = numeric && std::isdigit(static_cast<unsigned char>(d));
        if (numeric && digits[0] != '0') {
          const int i = std::stoi(std::string(digits));
          if (i >= 1 && i <= spec_.rank) return GrassmannElem::generator(spec_.rank, i);
        }
      }
    }
    throw ParseError("unknown identifier '" + std::string(name) + "'", at);
  }

  RingSpec spec_;
  AlphabetPtr alphabet_;
};

template <Ring R>
R parse_expression(std::string_view src, const RingSpec& spec) {
  return ExpressionParser<R>(spec).parse(src);
}

// ---------------------------------------------------------------------------
// Matrix documents

struct MatrixDocument {
  RingSpec ring;
  std::size_t n = 0;
  std::vector<std::vector<std::string>> entries;
  std::optional<std::size_t> t;
};

using AnyMatrix = std::variant<Matrix<IntElem>, Matrix<FreePoly>, Matrix<GrassmannElem>>;

inline RingSpec ring_spec_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("kind")) throw InputError("ring must be an object with a \"kind\"");
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "integer") return RingSpec::integer();
  if (kind == "free") {
    if (!j.contains("generators") || !j.at("generators").is_array())
      throw InputError("free ring needs a \"generators\" array");
    return RingSpec::free(j.at("generators").get<std::vector<std::string>>());
  }
  if (kind == "grassmann") {
    const int rank = j.contains("rank") ? j.at("rank").get<int>() : GrassmannElem::kDefaultRank;
    return RingSpec::grassmann(rank);
  }
  throw InputError("unknown ring kind '" + kind + "'");
}

inline nlohmann::json ring_spec_to_json(const RingSpec& spec) {
  nlohmann::json j{{"kind", to_string(spec.kind)}};
  if (spec.kind == RingKind::free) j["generators"] = spec.generators;
  if (spec.kind == RingKind::grassmann) j["rank"] = spec.rank;
  return j;
}

inline MatrixDocument parse_matrix_document(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("malformed matrix document: ") + e.what());
  }
  try {
    MatrixDocument doc;
    if (!j.is_object()) throw InputError("matrix document must be a JSON object");
    for (const char* key : {"ring", "n", "entries"})
      if (!j.contains(key)) throw InputError(std::string("matrix document lacks \"") + key + "\"");
    doc.ring = ring_spec_from_json(j.at("ring"));
    const long long n = j.at("n").get<long long>();
    if (n < 1 || n > static_cast<long long>(kMaxDimension))
      throw InputError("n must lie in [1, " + std::to_string(kMaxDimension) + "]");
    doc.n = static_cast<std::size_t>(n);
    const auto& rows = j.at("entries");
    if (!rows.is_array() || rows.size() != doc.n) throw InputError("entries must have n rows");
    for (std::size_t i = 0; i < doc.n; ++i) {
      if (!rows[i].is_array() || rows[i].size() != doc.n)
        throw InputError("row " + std::to_string(i + 1) + " must have n entries");
      std::vector<std::string> row;
      for (const auto& cell : rows[i]) {
        if (cell.is_string())
          row.push_back(cell.get<std::string>());
        else if (cell.is_number_integer())
          row.push_back(cell.dump());
        else
          throw InputError("entry (" + std::to_string(i + 1) + "," + std::to_string(row.size() + 1) +
                           ") must be a string or an integer");
      }
      doc.entries.push_back(std::move(row));
    }
    if (j.contains("t")) {
      const long long t = j.at("t").get<long long>();
      if (t < 1 || t >= n) throw InputError("t must lie in [1, n-1]");
      doc.t = static_cast<std::size_t>(t);
    }
    return doc;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("invalid matrix document: ") + e.what());
  }
}

inline MatrixDocument load_matrix_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_matrix_document(buf.str());
}

template <Ring R>
Matrix<R> materialize_as(const MatrixDocument& doc) {
  ExpressionParser<R> parser(doc.ring);
  Matrix<R> m(doc.n);
  for (std::size_t i = 0; i < doc.n; ++i)
    for (std::size_t j = 0; j < doc.n; ++j) {
      try {
        m(i, j) = parser.parse(doc.entries[i][j]);
      } catch (const ParseError& e) {
        throw InputError("entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "): " + e.what());
      }
    }
  return m;
}

/// Parses every entry in the declared ring. With validate_super, a document
/// declaring "t" must describe an (n, t) supermatrix.
inline AnyMatrix materialize(const MatrixDocument& doc, bool validate_super = false) {
  switch (doc.ring.kind) {
    case RingKind::integer:
      return materialize_as<IntElem>(doc);
    case RingKind::free:
      return materialize_as<FreePoly>(doc);
    case RingKind::grassmann: {
      auto m = materialize_as<GrassmannElem>(doc);
      if (validate_super && doc.t && !is_supermatrix(m, SupermatrixProfile(doc.n, *doc.t)))
        throw InputError("matrix is not an (n, t) supermatrix for t = " + std::to_string(*doc.t));
      return m;
    }
  }
  throw InputError("unknown ring kind");
}

inline AnyMatrix load_matrix(const std::string& path, bool validate_super = false) {
  return materialize(load_matrix_document(path), validate_super);
}

/// Renders a matrix back into a document; entries use canonical text.
template <Ring R>
nlohmann::json matrix_to_json(const Matrix<R>& m, const RingSpec& spec) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return {{"ring", ring_spec_to_json(spec)}, {"n", m.dim()}, {"entries", std::move(rows)}};
}

}  // namespace ncdet
