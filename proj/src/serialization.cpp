#include "affcells/serialization.hpp"

#include <cctype>
#include <limits>
#include <sstream>

namespace affcells {

namespace {

Json integer_to_json(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return v.convert_to<std::int64_t>();
  }
  return v.str();
}

Integer integer_from_json(const Json& v) {
  if (v.is_number_integer()) return Integer(v.get<std::int64_t>());
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    if (s.empty()) throw ParseError("empty integer string");
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (!(std::isdigit(static_cast<unsigned char>(s[i])) || (i == 0 && s[i] == '-'))) {
        throw ParseError("bad integer string: " + s);
      }
    }
    return Integer(s);
  }
  throw ParseError("expected an integer");
}

void skip_spaces(const std::string& s, std::size_t& pos) {
  while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
}

bool read_digits(const std::string& s, std::size_t& pos, std::string& out) {
  const auto start = pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
  out = s.substr(start, pos - start);
  return pos > start;
}

std::int64_t read_exponent(const std::string& s, std::size_t& pos) {
  skip_spaces(s, pos);
  bool parens = false;
  if (pos < s.size() && s[pos] == '(') {
    parens = true;
    ++pos;
    skip_spaces(s, pos);
  }
  bool negative = false;
  if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
    negative = s[pos] == '-';
    ++pos;
  }
  std::string digits;
  if (!read_digits(s, pos, digits)) throw ParseError("missing exponent in '" + s + "'");
  if (digits.size() > 15) throw ParseError("exponent out of range in '" + s + "'");
  if (parens) {
    skip_spaces(s, pos);
    if (pos >= s.size() || s[pos] != ')') throw ParseError("unbalanced parenthesis in '" + s + "'");
    ++pos;
  }
  const auto value = std::stoll(digits);
  return negative ? -value : value;
}

}  // namespace

Json laurent_matrix_to_json(const LaurentMatrix& m) {
  Json doc;
  doc["n"] = m.rows();
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      Json terms = Json::array();
      for (const auto& [e, c] : m(i, j).terms()) {
        terms.push_back(Json::array({e, integer_to_json(numerator(c)), integer_to_json(denominator(c))}));
      }
      row.push_back(std::move(terms));
    }
    rows.push_back(std::move(row));
  }
  doc["entries"] = std::move(rows);
  return doc;
}

LaurentMatrix laurent_matrix_from_json(const Json& doc) {
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("entries")) {
    throw ParseError("matrix JSON needs 'n' and 'entries'");
  }
  if (!doc["n"].is_number_integer()) throw ParseError("'n' must be an integer");
  const auto n = doc["n"].get<std::int64_t>();
  if (n < 1 || n > 4096) throw ParseError("'n' out of range");
  const auto& rows = doc["entries"];
  if (!rows.is_array() || static_cast<std::int64_t>(rows.size()) != n) throw ParseError("'entries' must have n rows");
  LaurentMatrix m(n, n);
  for (std::int64_t i = 0; i < n; ++i) {
    const auto& row = rows[i];
    if (!row.is_array() || static_cast<std::int64_t>(row.size()) != n) throw ParseError("every row needs n entries");
    for (std::int64_t j = 0; j < n; ++j) {
      Laurent p;
      const auto& terms = row[j];
      if (!terms.is_array()) throw ParseError("an entry must be a list of terms");
      for (const auto& term : terms) {
        if (!term.is_array() || term.size() != 3 || !term[0].is_number_integer()) {
          throw ParseError("a term must be [exp, num, den]");
        }
        const Integer num = integer_from_json(term[1]);
        const Integer den = integer_from_json(term[2]);
        if (den == 0) throw ParseError("zero denominator");
        p.add_term(term[0].get<std::int64_t>(), Rational(num, den));
      }
      m(i, j) = std::move(p);
    }
  }
  return m;
}

std::string format_laurent(const Laurent& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    const bool negative = c < 0;
    const Rational magnitude = negative ? Rational(-c) : c;
    if (first) {
      os << (negative ? "-" : "");
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    os << magnitude;
    if (e != 0) os << "*t^" << e;
  }
  return os.str();
}

Laurent parse_laurent(const std::string& text) {
  Laurent p;
  std::size_t pos = 0;
  skip_spaces(text, pos);
  if (pos == text.size()) throw ParseError("empty polynomial");
  bool first = true;
  while (true) {
    skip_spaces(text, pos);
    if (pos == text.size()) break;
    bool negative = false;
    if (text[pos] == '+' || text[pos] == '-') {
      negative = text[pos] == '-';
      ++pos;
      skip_spaces(text, pos);
    } else if (!first) {
      throw ParseError("expected + or - in '" + text + "'");
    }
    first = false;

    Rational coef(1);
    bool have_coef = false;
    std::string digits;
    if (read_digits(text, pos, digits)) {
      have_coef = true;
      Integer num(digits);
      Integer den(1);
      skip_spaces(text, pos);
      if (pos < text.size() && text[pos] == '/') {
        ++pos;
        skip_spaces(text, pos);
        if (!read_digits(text, pos, digits)) throw ParseError("missing denominator in '" + text + "'");
        den = Integer(digits);
        if (den == 0) throw ParseError("zero denominator in '" + text + "'");
      }
      coef = Rational(num, den);
      skip_spaces(text, pos);
    }

    std::int64_t exp = 0;
    bool have_t = false;
    if (pos < text.size() && text[pos] == '*') {
      if (!have_coef) throw ParseError("'*' without a coefficient in '" + text + "'");
      ++pos;
      skip_spaces(text, pos);
      if (pos >= text.size() || text[pos] != 't') throw ParseError("expected t after '*' in '" + text + "'");
    }
    if (pos < text.size() && text[pos] == 't') {
      have_t = true;
      ++pos;
      skip_spaces(text, pos);
      exp = 1;
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        exp = read_exponent(text, pos);
      }
    }
    if (!have_coef && !have_t) throw ParseError("expected a term in '" + text + "'");
    p.add_term(exp, negative ? Rational(-coef) : coef);
  }
  return p;
}

std::string format_laurent_matrix(const LaurentMatrix& m) {
  std::ostringstream os;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) os << (j ? "; " : "") << format_laurent(m(i, j));
    os << '\n';
  }
  return os.str();
}

LaurentMatrix parse_laurent_matrix_text(const std::string& text) {
  std::vector<std::vector<Laurent>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::size_t pos = 0;
    skip_spaces(line, pos);
    if (pos == line.size() || line[pos] == '#') continue;
    std::vector<Laurent> row;
    std::size_t start = 0;
    while (true) {
      const auto sep = line.find(';', start);
      row.push_back(parse_laurent(line.substr(start, sep == std::string::npos ? std::string::npos : sep - start)));
      if (sep == std::string::npos) break;
      start = sep + 1;
    }
    rows.push_back(std::move(row));
  }
  const auto n = rows.size();
  if (n == 0) throw ParseError("no matrix rows found");
  LaurentMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) throw ParseError("matrix must be square");
    for (std::size_t j = 0; j < n; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

LaurentMatrix read_laurent_matrix(const std::string& text) {
  std::size_t pos = 0;
  skip_spaces(text, pos);
  if (pos < text.size() && text[pos] == '{') {
    Json doc;
    try {
      doc = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return laurent_matrix_from_json(doc);
  }
  return parse_laurent_matrix_text(text);
}

Json permutation_to_json(const AffinePermutation& w) {
  Json doc;
  doc["n"] = w.n();
  doc["sigma"] = w.sigma();
  doc["exps"] = w.exps();
  doc["window"] = w.window();
  doc["matrix"] = matrix_string(w);
  return doc;
}

AffinePermutation permutation_from_json(const Json& doc) {
  try {
    const auto n = doc.at("n").get<int>();
    auto sigma = doc.at("sigma").get<std::vector<int>>();
    auto exps = doc.at("exps").get<std::vector<Exponent>>();
    if (static_cast<int>(sigma.size()) != n) throw ParseError("sigma length differs from n");
    return AffinePermutation(std::move(sigma), std::move(exps));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid permutation JSON: ") + e.what());
  } catch (const DomainError& e) {
    throw ParseError(std::string("invalid permutation: ") + e.what());
  }
}

Json tableau_to_json(const ParabolicTableau& tab) {
  Json doc;
  doc["n"] = tab.n();
  doc["d"] = tab.descriptor().d;
  doc["lambda"] = tab.lambda();
  doc["nu"] = tab.nu().parts();
  doc["r"] = tab.r();
  doc["s"] = tab.s();
  Json rows = Json::array();
  for (int k = 1; k <= tab.r(); ++k) rows.push_back(tab.row(k));
  doc["rows"] = std::move(rows);
  Json columns = Json::array();
  for (int i = 1; i <= tab.s(); ++i) columns.push_back(tab.column(i));
  doc["columns"] = std::move(columns);
  doc["s1"] = tab.s1();
  doc["s2"] = tab.s2();
  doc["red"] = tab.red();
  doc["blue"] = tab.blue();
  doc["l"] = tab.l_seq();
  doc["m"] = tab.m_seq();
  doc["t"] = tab.t_seq();
  Json iota = Json::object();
  for (int x : tab.s2()) iota[std::to_string(x)] = tab.iota(x);
  doc["iota"] = std::move(iota);
  doc["red_closed_form_differs"] = tab.red_closed_form_differs();
  return doc;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::size_t pos = 0;
  skip_spaces(text, pos);
  if (pos == text.size()) return out;
  std::size_t start = 0;
  while (true) {
    const auto sep = text.find(',', start);
    auto item = text.substr(start, sep == std::string::npos ? std::string::npos : sep - start);
    std::size_t p = 0;
    skip_spaces(item, p);
    bool negative = false;
    if (p < item.size() && item[p] == '-') {
      negative = true;
      ++p;
    }
    std::string digits;
    if (!read_digits(item, p, digits) || digits.size() > 9) throw ParseError("bad integer list: '" + text + "'");
    skip_spaces(item, p);
    if (p != item.size()) throw ParseError("bad integer list: '" + text + "'");
    out.push_back(negative ? -std::stoi(digits) : std::stoi(digits));
    if (sep == std::string::npos) break;
    start = sep + 1;
  }
  return out;
}

}  // namespace affcells
