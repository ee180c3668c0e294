#include "septool/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace septool {

namespace {

struct Token {
  enum Kind { Number, Ident, Op, End } kind = End;
  std::string text;
  int col = 0;  // 1-based
};

[[noreturn]] void syntax(int line, int col, const std::string& msg) {
  fail(Errc::ParseError, "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + msg);
}

std::vector<Token> tokenize(const std::string& s, int line, int col0) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    const int col = col0 + static_cast<int>(i);
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      if (j < s.size() && s[j] == '.') syntax(line, col0 + static_cast<int>(j), "decimal literals are not exact; write p/q");
      out.push_back({Token::Number, s.substr(i, j - i), col});
      i = j;
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      out.push_back({Token::Ident, s.substr(i, j - i), col});
      i = j;
    } else if (std::string_view("+-*/^()[],").find(c) != std::string_view::npos) {
      out.push_back({Token::Op, std::string(1, c), col});
      ++i;
    } else {
      syntax(line, col, std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Token::End, "", col0 + static_cast<int>(s.size())});
  return out;
}

template <std::size_t N>
class ExprParser {
 public:
  using S = Series<N>;
  ExprParser(std::vector<Token> toks, const typename S::Vars& vars, const std::map<std::string, Series1>& series,
             int cap, int line, std::string text)
      : t_(std::move(toks)), vars_(vars), series_(series), cap_(cap), line_(line), text_(std::move(text)) {}

  S parse() {
    S v = expr();
    if (peek().kind != Token::End) error("unexpected '" + peek().text + "'");
    return v;
  }

 private:
  const Token& peek() const { return t_[pos_]; }
  Token next() { return t_[pos_++]; }
  bool accept(const char* op) {
    if (peek().kind == Token::Op && peek().text == op) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(const char* op) {
    if (!accept(op)) error(std::string("expected '") + op + "'");
  }
  [[noreturn]] void error(const std::string& msg) const { syntax(line_, peek().col, msg); }

  S constant(const Rational& c) const { return S::constant(vars_, c); }

  S expr() {
    S v = term();
    while (true) {
      if (accept("+"))
        v = v + term();
      else if (accept("-"))
        v = v - term();
      else
        return v;
    }
  }

  S term() {
    S v = unary();
    while (true) {
      if (accept("*")) {
        v = v * unary();
      } else if (peek().kind == Token::Op && peek().text == "/") {
        const int col = peek().col;
        ++pos_;
        v = divide(v, unary(), col);
      } else {
        return v;
      }
    }
  }

  S divide(const S& a, const S& b, int col) const {
    if (b.is_zero()) syntax(line_, col, "division by zero");
    if (b.exact() && b.degree() == 0) return a * b.coeff({}).inverse();
    try {
      return divide_exact(a, b, cap_);
    } catch (const Error& e) {
      if (e.code() != Errc::NotDivisible && e.code() != Errc::NotAUnit) throw;
      fail(Errc::NotDivisible, "line " + std::to_string(line_) + ": in '" + text_ + "': " + e.message());
    }
  }

  S unary() {
    if (accept("-")) return -unary();
    if (accept("+")) return unary();
    return power();
  }

  S power() {
    S base = primary();
    if (!accept("^")) return base;
    if (peek().kind != Token::Number) error("exponent must be a non-negative integer");
    const Token e = next();
    if (e.text.size() > 4) syntax(line_, e.col, "exponent too large");
    const int k = std::stoi(e.text);
    S acc = constant(Rational(1));
    for (int i = 0; i < k; ++i) acc = acc * base;
    return acc;
  }

  S primary() {
    const Token tok = peek();
    if (tok.kind == Token::Number) {
      ++pos_;
      return constant(Rational::parse(tok.text));
    }
    if (accept("(")) {
      S v = expr();
      expect(")");
      return v;
    }
    if (accept("[")) {
      if constexpr (N != 1) {
        error("coefficient lists are only allowed in series declarations");
      } else {
        std::vector<Rational> cs;
        if (!accept("]")) {
          do {
            S c = unary();
            if (!c.exact() || c.degree() > 0) error("coefficient list entries must be rational constants");
            cs.push_back(c.coeff({}));
          } while (accept(","));
          expect("]");
        }
        return series1(vars_[0], cs);
      }
    }
    if (tok.kind != Token::Ident) error(tok.kind == Token::End ? "unexpected end of expression" : "unexpected '" + tok.text + "'");
    ++pos_;
    if (tok.text == "O" && accept("(")) {
      if (peek().kind != Token::Number) error("O(n) needs an integer order");
      const Token n = next();
      expect(")");
      const int order = std::stoi(n.text);
      if (order < 1) syntax(line_, n.col, "O(n) needs n >= 1");
      return S(vars_, order);
    }
    for (std::size_t i = 0; i < N; ++i)
      if (vars_[i] == tok.text) return S::variable(vars_, i);
    auto it = series_.find(tok.text);
    if (it == series_.end()) syntax(line_, tok.col, "undefined name '" + tok.text + "'");
    expect("(");
    S arg = expr();
    expect(")");
    if (!arg.exact() || !arg.coeff({}).is_zero()) {
      if (!it->second.exact() && !arg.coeff({}).is_zero())
        syntax(line_, tok.col, "series '" + tok.text + "' is truncated; its argument must vanish at 0");
    }
    return compose(it->second, std::array<S, 1>{arg});
  }

  std::vector<Token> t_;
  std::size_t pos_ = 0;
  typename S::Vars vars_;
  const std::map<std::string, Series1>& series_;
  int cap_;
  int line_;
  std::string text_;
};

template <std::size_t N>
Series<N> eval(const std::string& text, int col0, const typename Series<N>::Vars& vars,
               const std::map<std::string, Series1>& series, int cap, int line) {
  std::size_t a = text.find_first_not_of(" \t"), b = text.find_last_not_of(" \t");
  ExprParser<N> p(tokenize(text, line, col0), vars, series, cap, line,
                  a == std::string::npos ? std::string() : text.substr(a, b - a + 1));
  return p.parse();
}

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

bool is_ident(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

std::vector<std::string> family_vars(Family f) {
  switch (f) {
    case Family::Ya:
    case Family::Center: return {"x", "y"};
    case Family::Xa: return {"x", "y", "z"};
    case Family::Xi:
    case Family::SaddleNode: return {"z", "w"};
    case Family::None: break;
  }
  return {};
}

template <std::size_t N>
bool agree_fields(const VectorField<N>& a, const VectorField<N>& b) {
  if (a.vars() != b.vars()) return false;
  for (std::size_t i = 0; i < N; ++i)
    if (!agree(a[i], b[i])) return false;
  return true;
}

bool family_has_param(Family f) { return f == Family::Ya || f == Family::Xa || f == Family::Xi; }

Family parse_family(const std::string& s) {
  if (s == "Ya") return Family::Ya;
  if (s == "Xa") return Family::Xa;
  if (s == "xi") return Family::Xi;
  if (s == "center") return Family::Center;
  if (s == "saddle-node") return Family::SaddleNode;
  return Family::None;
}

std::variant<PlanarField, Field3> build_family(const FieldDocument& doc) {
  const Series1& p = doc.family_series();
  switch (doc.family) {
    case Family::Ya: return ya_field(p.with_vars({"x"}));
    case Family::Xa: return xa_field(p.with_vars({"x"}));
    case Family::Xi: return xi_field(p.with_vars({"z"}), doc.trunc);
    case Family::Center: return center_field();
    case Family::SaddleNode: return saddle_node_normal_form();
    case Family::None: break;
  }
  fail(Errc::InvalidArgument, "document declares no family");
}

}  // namespace

std::string family_name(Family f) {
  switch (f) {
    case Family::None: return "none";
    case Family::Ya: return "Ya";
    case Family::Xa: return "Xa";
    case Family::Xi: return "xi";
    case Family::Center: return "center";
    case Family::SaddleNode: return "saddle-node";
  }
  return "?";
}

const PlanarField& FieldDocument::planar_field() const {
  if (!planar()) fail(Errc::ParseError, "command needs a planar field (two variables)");
  return std::get<PlanarField>(field);
}

const Field3& FieldDocument::field3() const {
  if (!std::holds_alternative<Field3>(field)) fail(Errc::ParseError, "command needs a field in three variables");
  return std::get<Field3>(field);
}

const Series1& FieldDocument::family_series() const {
  static const Series1 zero(Series1::Vars{"x"});
  if (family_param.empty()) return zero;
  return series.at(family_param);
}

Series1 parse_series(const std::string& text, const std::string& var) {
  if (!is_ident(var)) fail(Errc::ParseError, "bad variable name '" + var + "'");
  return eval<1>(text, 1, {var}, {}, kDefaultOrder, 1);
}

FieldDocument parse_document(const std::string& source, int trunc_override) {
  FieldDocument doc;
  std::map<std::string, std::tuple<int, std::string, int>> components;  // var -> line, expr, column
  std::vector<std::tuple<int, std::string, std::string, int>> integral_lines;  // line, name, expr, col
  std::vector<std::tuple<int, std::string, std::string, std::string, int>> series_lines;  // line, name, var, expr, col

  std::istringstream in(source);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (auto h = raw.find('#'); h != std::string::npos) raw.resize(h);
    const std::string s = trim(raw);
    if (s.empty()) continue;
    const int indent = static_cast<int>(raw.find_first_not_of(" \t"));
    std::istringstream words(s);
    std::string head;
    words >> head;
    if (head == "name") {
      doc.name = trim(s.substr(4));
    } else if (head == "vars") {
      if (!doc.vars.empty()) syntax(line, 1, "vars declared twice");
      std::string v;
      while (words >> v) {
        if (!is_ident(v)) syntax(line, 1, "bad variable name '" + v + "'");
        if (std::find(doc.vars.begin(), doc.vars.end(), v) != doc.vars.end()) syntax(line, 1, "duplicate variable " + v);
        doc.vars.push_back(v);
      }
      if (doc.vars.size() != 2 && doc.vars.size() != 3) syntax(line, 1, "need two or three variables");
    } else if (head == "trunc") {
      std::string n, extra;
      words >> n;
      if (n.empty() || !std::all_of(n.begin(), n.end(), ::isdigit) || (words >> extra))
        syntax(line, 7, "trunc needs one positive integer");
      doc.trunc = std::stoi(n);
      if (doc.trunc < 2) syntax(line, 7, "trunc must be at least 2");
      doc.trunc_declared = true;
    } else if (head == "family") {
      std::string fam, param, extra;
      words >> fam >> param;
      doc.family = parse_family(fam);
      if (doc.family == Family::None) syntax(line, 8, "unknown family '" + fam + "'");
      if (family_has_param(doc.family) == param.empty())
        syntax(line, 8, "family " + fam + (param.empty() ? " needs a series parameter" : " takes no parameter"));
      if (words >> extra) syntax(line, 1, "trailing text after family");
      doc.family_param = param;
    } else if (head == "series") {
      // series a(x) = expr
      const std::size_t eq = s.find('=');
      if (eq == std::string::npos) syntax(line, 1, "series declaration needs '='");
      const std::string lhs = trim(s.substr(6, eq - 6));
      const std::size_t lp = lhs.find('('), rp = lhs.find(')');
      if (lp == std::string::npos || rp == std::string::npos || rp < lp || rp != lhs.size() - 1)
        syntax(line, 8, "expected 'series name(var) = ...'");
      const std::string name = trim(lhs.substr(0, lp)), var = trim(lhs.substr(lp + 1, rp - lp - 1));
      if (!is_ident(name) || !is_ident(var)) syntax(line, 8, "bad series name or variable");
      const std::string rhs = s.substr(eq + 1);
      series_lines.emplace_back(line, name, var, rhs, indent + 1 + static_cast<int>(eq + 1));
    } else if (head == "integral") {
      const std::size_t eq = s.find('=');
      if (eq == std::string::npos) syntax(line, 1, "integral needs '='");
      const std::string name = trim(s.substr(8, eq - 8));
      if (!is_ident(name)) syntax(line, 10, "bad integral name");
      integral_lines.emplace_back(line, name, s.substr(eq + 1), indent + 1 + static_cast<int>(eq + 1));
    } else if (head.size() > 1 && head[0] == 'd' && s.find('=') != std::string::npos) {
      const std::size_t eq = s.find('=');
      const std::string var = trim(s.substr(1, eq - 1));
      if (!is_ident(var)) syntax(line, 2, "bad component name");
      if (components.count(var)) syntax(line, 1, "component d" + var + " given twice");
      components[var] = {line, s.substr(eq + 1), indent + 1 + static_cast<int>(eq + 1)};
    } else {
      syntax(line, indent + 1, "unknown statement '" + head + "'");
    }
  }
  if (trunc_override > 0) doc.trunc = trunc_override;

  for (const auto& [l, name, var, rhs, col] : series_lines) {
    if (doc.series.count(name)) syntax(l, 8, "series '" + name + "' declared twice");
    Series1 value = eval<1>(rhs, col, {var}, doc.series, doc.trunc, l);
    doc.series.emplace(name, value);
    doc.series_order.push_back(name);
  }
  if (!doc.family_param.empty() && !doc.series.count(doc.family_param))
    fail(Errc::ParseError, "family parameter '" + doc.family_param + "' is not a declared series");

  if (doc.vars.empty()) {
    doc.vars = family_vars(doc.family);
    if (doc.vars.empty()) fail(Errc::ParseError, "document declares neither vars nor a family");
  }
  for (const auto& [v, _] : components)
    if (std::find(doc.vars.begin(), doc.vars.end(), v) == doc.vars.end())
      syntax(std::get<0>(components.at(v)), 1, "component d" + v + " names no declared variable");

  auto build = [&](auto tag) {
    constexpr std::size_t N = decltype(tag)::value;
    typename Series<N>::Vars vars;
    for (std::size_t i = 0; i < N; ++i) vars[i] = doc.vars[i];
    std::array<Series<N>, N> comps;
    for (std::size_t i = 0; i < N; ++i) {
      const auto& [l, rhs, col] = components.at(doc.vars[i]);
      comps[i] = eval<N>(rhs, col, vars, doc.series, doc.trunc, l);
    }
    for (const auto& [l, name, rhs, col] : integral_lines) {
      if (doc.integrals.count(name)) syntax(l, 10, "integral '" + name + "' declared twice");
      doc.integrals.emplace(name, eval<N>(rhs, col, vars, doc.series, doc.trunc, l));
    }
    return VectorField<N>(comps);
  };

  if (!components.empty()) {
    if (components.size() != doc.vars.size()) fail(Errc::ParseError, "every variable needs a component d<var> = ...");
    if (doc.vars.size() == 2)
      doc.field = build(std::integral_constant<std::size_t, 2>{});
    else
      doc.field = build(std::integral_constant<std::size_t, 3>{});
  } else {
    if (doc.family == Family::None) fail(Errc::ParseError, "document defines no field");
    if (family_vars(doc.family) != doc.vars) fail(Errc::ParseError, "family " + family_name(doc.family) + " uses variables " +
                                                                      family_vars(doc.family)[0] + ", ...");
    auto f = build_family(doc);
    if (auto* p = std::get_if<PlanarField>(&f))
      doc.field = *p;
    else
      doc.field = std::get<Field3>(f);
    // integrals still need parsing in the family's variables
    components.clear();
    if (!integral_lines.empty()) {
      if (doc.vars.size() == 2) {
        Series2::Vars v{doc.vars[0], doc.vars[1]};
        for (const auto& [l, name, rhs, col] : integral_lines) doc.integrals.emplace(name, eval<2>(rhs, col, v, doc.series, doc.trunc, l));
      } else {
        Series3::Vars v{doc.vars[0], doc.vars[1], doc.vars[2]};
        for (const auto& [l, name, rhs, col] : integral_lines) doc.integrals.emplace(name, eval<3>(rhs, col, v, doc.series, doc.trunc, l));
      }
    }
  }
  return doc;
}

std::string render_document(const FieldDocument& doc) {
  std::ostringstream os;
  if (!doc.name.empty()) os << "name " << doc.name << '\n';
  os << "vars";
  for (const auto& v : doc.vars) os << ' ' << v;
  os << "\ntrunc " << doc.trunc << '\n';
  if (doc.family != Family::None) {
    os << "family " << family_name(doc.family);
    if (!doc.family_param.empty()) os << ' ' << doc.family_param;
    os << '\n';
  }
  for (const auto& name : doc.series_order) {
    const Series1& s = doc.series.at(name);
    os << "series " << name << '(' << s.vars()[0] << ") = " << s.to_string() << '\n';
  }
  std::visit(
      [&](const auto& f) {
        if constexpr (!std::is_same_v<std::decay_t<decltype(f)>, std::monostate>)
          for (std::size_t i = 0; i < f.vars().size(); ++i) os << 'd' << f.vars()[i] << " = " << f[i].to_string() << '\n';
      },
      doc.field);
  for (const auto& [name, s] : doc.integrals)
    std::visit([&](const auto& g) { os << "integral " << name << " = " << g.to_string() << '\n'; }, s);
  return os.str();
}

void check_family(const FieldDocument& doc) {
  if (doc.family == Family::None) return;
  if (family_has_param(doc.family)) {
    check_family_parameter(doc.family_series(), doc.family_param);
  }
  auto expected = build_family(doc);
  bool same = false;
  if (auto* p = std::get_if<PlanarField>(&expected))
    same = doc.planar() && agree_fields(doc.planar_field(), *p);
  else
    same = std::holds_alternative<Field3>(doc.field) && agree_fields(doc.field3(), std::get<Field3>(expected));
  if (!same) fail(Errc::HypothesisViolated, "components do not match family " + family_name(doc.family));
}

}  // namespace septool
