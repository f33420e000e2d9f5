#include "fockda/expression.hpp"

#include <cctype>
#include <vector>

#include "fockda/heisenberg.hpp"
#include "fockda/virasoro.hpp"
#include "fockda/winf.hpp"

namespace fockda {

namespace {

enum class Kind { op, rational, state, plus, minus };

struct Token {
  Kind kind;
  std::string text;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto is_num_start = [&](std::size_t j) {
    return std::isdigit(static_cast<unsigned char>(s[j])) ||
           (s[j] == '-' && j + 1 < s.size() && std::isdigit(static_cast<unsigned char>(s[j + 1])));
  };
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == '|') {
      const auto end = s.find('>', i);
      if (end == std::string_view::npos) throw ParseError("unterminated state literal");
      std::string lit(s.substr(i, end - i + 1));
      if (lit != "|0>") throw ParseError("unknown state literal '" + lit + "'");
      out.push_back({Kind::state, lit});
      i = end + 1;
    } else if (c == '+') {
      out.push_back({Kind::plus, "+"});
      ++i;
    } else if (is_num_start(i)) {
      std::size_t j = i + 1;
      while (j < s.size() && (std::isdigit(static_cast<unsigned char>(s[j])) || s[j] == '/')) ++j;
      out.push_back({Kind::rational, std::string(s.substr(i, j - i))});
      i = j;
    } else if (c == '-') {
      out.push_back({Kind::minus, "-"});
      ++i;
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      const auto open = s.find('[', i);
      const auto close = s.find(']', i);
      if (open == std::string_view::npos || close == std::string_view::npos || close < open) {
        throw ParseError("expected operator token like h[1] at '" + std::string(s.substr(i)) + "'");
      }
      std::string tok;
      for (char ch : s.substr(i, close - i + 1)) {
        if (!std::isspace(static_cast<unsigned char>(ch))) tok += ch;
      }
      out.push_back({Kind::op, tok});
      i = close + 1;
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'");
    }
  }
  return out;
}

std::vector<std::string> split_args(const std::string& inner, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : inner) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

int parse_int(const std::string& text) {
  try {
    const Rational r = Rational::parse(text);
    if (!r.is_integer()) throw ParseError("expected an integer, got '" + text + "'");
    return static_cast<int>(r.to_int64());
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception&) {
    throw ParseError("expected an integer, got '" + text + "'");
  }
}

Rational parse_rational(const std::string& text) {
  try {
    return Rational::parse(text);
  } catch (const std::exception&) {
    throw ParseError("expected a rational p/q, got '" + text + "'");
  }
}

}  // namespace

NeutralOperator parse_operator_token(std::string_view token) {
  const std::string tok(token);
  const auto open = tok.find('[');
  if (open == std::string::npos || tok.back() != ']') throw ParseError("malformed operator token '" + tok + "'");
  const std::string name = tok.substr(0, open);
  const std::string inner = tok.substr(open + 1, tok.size() - open - 2);
  if (name == "phi") {
    try {
      return fermion_mode_operator(FermionModeIndex::parse(inner));
    } catch (const std::exception& e) {
      throw ParseError(e.what());
    }
  }
  if (name == "h") return h_mode(parse_int(inner)).as_operator();
  if (name == "Lhalf") return l_half_mode(parse_int(inner)).as_operator();
  if (name == "Lhalf~") return l_half_tilde_mode(parse_int(inner)).as_operator();
  if (name == "L1") return sugawara_l1_mode(parse_int(inner));
  if (name == "L1~") return l1_tilde_mode(parse_int(inner));
  if (name == "Llb") {
    const auto parts = split_args(inner, ';');
    if (parts.size() != 2) throw ParseError("Llb expects [lambda,b;n], got '" + tok + "'");
    const auto params = split_args(parts[0], ',');
    if (params.size() != 2) throw ParseError("Llb expects [lambda,b;n], got '" + tok + "'");
    return l_lambda_b_mode(parse_rational(params[0]), parse_rational(params[1]), parse_int(parts[1]));
  }
  if (name == "J") {
    const auto args = split_args(inner, ',');
    if (args.size() != 2) throw ParseError("J expects [k,n], got '" + tok + "'");
    const int k = parse_int(args[0]);
    if (k < 0) throw ParseError("J needs k >= 0");
    return jk_mode_neutral(k, parse_int(args[1]));
  }
  throw ParseError("unknown operator '" + name + "'");
}

FockState evaluate_expression(std::string_view expr) {
  const auto tokens = tokenize(expr);
  if (tokens.size() == 1 && tokens[0].kind == Kind::rational && tokens[0].text == "0") return {};
  if (tokens.empty()) throw ParseError("empty expression");
  FockState total;
  std::size_t i = 0;
  while (i < tokens.size()) {
    Rational coeff(1);
    if (i > 0) {
      if (tokens[i].kind == Kind::minus) {
        coeff = Rational(-1);
      } else if (tokens[i].kind != Kind::plus) {
        throw ParseError("expected '+' or '-' between terms, got '" + tokens[i].text + "'");
      }
      ++i;
    } else if (tokens[i].kind == Kind::minus) {
      coeff = Rational(-1);
      ++i;
    }
    if (i < tokens.size() && tokens[i].kind == Kind::rational) coeff *= parse_rational(tokens[i++].text);
    std::vector<NeutralOperator> ops;
    while (i < tokens.size() && tokens[i].kind == Kind::op) ops.push_back(parse_operator_token(tokens[i++].text));
    if (i >= tokens.size() || tokens[i].kind != Kind::state) throw ParseError("term must end with |0>");
    ++i;
    FockState s = vacuum_state();
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) s = (*it)(s);
    total.add_scaled(s, coeff);
  }
  return total;
}

}  // namespace fockda
