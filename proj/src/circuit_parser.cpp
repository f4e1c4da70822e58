#include "kdwork/circuit_parser.hpp"

#include "kdwork/error.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <optional>
#include <sstream>

namespace kdwork {

namespace {

struct Token {
  std::string text;
  std::size_t column; // 1-based
};

std::string_view strip_comment(std::string_view line) {
  const auto pos = line.find('#');
  return pos == std::string_view::npos ? line : line.substr(0, pos);
}

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t k = 0;
  while (k < line.size()) {
    while (k < line.size() && std::isspace(static_cast<unsigned char>(line[k]))) ++k;
    if (k >= line.size()) break;
    const std::size_t start = k;
    while (k < line.size() && !std::isspace(static_cast<unsigned char>(line[k]))) ++k;
    out.push_back({std::string(line.substr(start, k - start)), start + 1});
  }
  return out;
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    if (end == text.size()) break;
    start = end + 1;
  }
  return lines;
}

class ExprParser {
public:
  explicit ExprParser(std::string_view s) : s_(s) {}

  double parse() {
    const double v = expr();
    if (pos_ != s_.size()) fail();
    return v;
  }

private:
  [[noreturn]] void fail() const {
    throw InvalidArgument("malformed number '" + std::string(s_) + "'");
  }

  bool eat(char c) {
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  double expr() {
    double v = term();
    for (;;) {
      if (eat('+')) v += term();
      else if (eat('-')) v -= term();
      else return v;
    }
  }

  double term() {
    double v = unary();
    for (;;) {
      if (eat('*')) v *= unary();
      else if (eat('/')) v /= unary();
      else return v;
    }
  }

  double unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return atom();
  }

  double atom() {
    if (eat('(')) {
      const double v = expr();
      if (!eat(')')) fail();
      return v;
    }
    if (s_.substr(pos_, 2) == "pi") {
      pos_ += 2;
      return std::numbers::pi;
    }
    const std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) {
      ++pos_;
    }
    if (pos_ < s_.size() && (s_[pos_] == 'e' || s_[pos_] == 'E')) {
      std::size_t q = pos_ + 1;
      if (q < s_.size() && (s_[q] == '+' || s_[q] == '-')) ++q;
      if (q < s_.size() && std::isdigit(static_cast<unsigned char>(s_[q]))) {
        pos_ = q;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      }
    }
    if (pos_ == start) fail();
    const std::string num(s_.substr(start, pos_ - start));
    char *end = nullptr;
    const double v = std::strtod(num.c_str(), &end);
    if (end != num.c_str() + num.size()) fail();
    return v;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class FileParser {
public:
  explicit FileParser(std::string_view text) : lines_(split_lines(text)) {}

  CircuitFile run() {
    for (std::size_t n = 0; n < lines_.size(); ++n) {
      line_no_ = n + 1;
      auto toks = tokenize(strip_comment(lines_[n]));
      if (toks.empty()) continue;
      statement(toks);
    }
    const std::size_t end_line = lines_.size();
    if (!qubits_) throw ParseError("missing 'qubits' directive", end_line, 1);
    if (!state_) throw ParseError("missing 'state' directive", end_line, 1);
    out_.state = *state_;
    try {
      (void)out_.initial_state();
    } catch (const ValidationError &e) {
      throw ValidationError(std::string(e.what()) + " (state at line " +
                            std::to_string(state_line_) + ")");
    }
    return out_;
  }

private:
  [[noreturn]] void fail(const std::string &msg, const Token &t) const {
    throw ParseError(msg, line_no_, t.column);
  }

  double real(const Token &t) const {
    try {
      return parse_real_expression(t.text);
    } catch (const InvalidArgument &e) {
      fail(e.what(), t);
    }
  }

  complex_t cplx(const Token &t) const {
    try {
      return parse_complex_literal(t.text);
    } catch (const InvalidArgument &e) {
      fail(e.what(), t);
    }
  }

  int integer(const Token &t) const {
    const auto &s = t.text;
    if (s.empty() || s.size() > 9 ||
        !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      fail("expected a non-negative integer, got '" + s + "'", t);
    }
    return std::stoi(s);
  }

  int qubit(const Token &t) const {
    const int q = integer(t);
    if (q >= out_.circuit.num_qubits) {
      fail("qubit " + std::to_string(q) + " out of range for " +
               std::to_string(out_.circuit.num_qubits) + " qubit(s)",
           t);
    }
    return q;
  }

  void arity(const std::vector<Token> &toks, std::size_t expected, const std::string &what) const {
    if (toks.size() != expected) {
      const Token &where = toks.size() > expected ? toks[expected] : toks.back();
      fail(what + " expects " + std::to_string(expected - 1) + " argument(s), got " +
               std::to_string(toks.size() - 1),
           where);
    }
  }

  void statement(const std::vector<Token> &toks) {
    const auto &kw = toks[0].text;
    if (kw == "qubits") {
      if (qubits_) fail("duplicate 'qubits' directive", toks[0]);
      arity(toks, 2, "qubits");
      const int l = integer(toks[1]);
      if (l < 1 || l > 10) fail("qubit count must be between 1 and 10", toks[1]);
      out_.circuit.num_qubits = l;
      qubits_ = true;
    } else if (kw == "E") {
      arity(toks, 2, "E");
      const double e = real(toks[1]);
      if (!(e > 0.0) || !std::isfinite(e)) fail("energy scale must be positive", toks[1]);
      out_.energy_scale = e;
    } else if (kw == "state") {
      if (state_) fail("duplicate 'state' directive", toks[0]);
      if (toks.size() < 2) fail("state expects a specification", toks[0]);
      std::vector<Token> rest(toks.begin() + 1, toks.end());
      state_ = state_spec(rest, toks[0]);
      state_line_ = line_no_;
    } else if (kw == "gate") {
      if (!qubits_) fail("'gate' before 'qubits'", toks[0]);
      if (toks.size() < 2) fail("gate expects a name", toks[0]);
      gate(toks);
    } else {
      fail("unknown directive '" + kw + "'", toks[0]);
    }
  }

  StateSpec state_spec(const std::vector<Token> &toks, const Token &anchor) const {
    if (toks.empty()) fail("empty state specification", anchor);
    StateSpec s;
    const auto &kind = toks[0].text;
    auto args = [&](std::size_t n) {
      if (toks.size() != n + 1) {
        fail("state " + kind + " expects " + std::to_string(n) + " argument(s), got " +
                 std::to_string(toks.size() - 1),
             toks.size() > n + 1 ? toks[n + 1] : toks.back());
      }
      for (std::size_t k = 1; k <= n; ++k) s.args.push_back(real(toks[k]));
    };
    if (kind == "pure_bloch") {
      s.kind = StateSpec::Kind::PureBloch;
      args(2);
    } else if (kind == "pure_pop") {
      s.kind = StateSpec::Kind::PurePop;
      args(2);
    } else if (kind == "qubit") {
      s.kind = StateSpec::Kind::Qubit;
      args(3);
    } else if (kind == "thermal") {
      s.kind = StateSpec::Kind::Thermal;
      args(1);
    } else if (kind == "product") {
      s.kind = StateSpec::Kind::Product;
      std::vector<Token> cur;
      const Token *cur_anchor = &toks[0];
      for (std::size_t k = 1; k <= toks.size(); ++k) {
        if (k == toks.size() || toks[k].text == ";") {
          if (cur.empty()) fail("empty factor in product state", *cur_anchor);
          if (cur[0].text == "product") fail("nested product state", cur[0]);
          s.parts.push_back(state_spec(cur, *cur_anchor));
          cur.clear();
          if (k < toks.size()) cur_anchor = &toks[k];
        } else {
          cur.push_back(toks[k]);
        }
      }
      if (s.parts.size() < 2) fail("product state needs at least two factors", toks[0]);
    } else if (kind == "matrix") {
      s.kind = StateSpec::Kind::Matrix;
      const std::size_t n = toks.size() - 1;
      const auto d = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(n))));
      if (n == 0 || d * d != n) {
        fail("state matrix needs a square number of entries, got " + std::to_string(n), toks[0]);
      }
      for (std::size_t k = 1; k < toks.size(); ++k) s.entries.push_back(cplx(toks[k]));
    } else {
      fail("unknown state kind '" + kind + "'", toks[0]);
    }
    return s;
  }

  void gate(const std::vector<Token> &toks) {
    const auto &name = toks[1].text;
    auto &gates = out_.circuit.gates;
    if (name == "H") {
      arity(toks, 3, "gate H");
      gates.emplace_back(HadamardGate{qubit(toks[2])});
    } else if (name == "T") {
      arity(toks, 3, "gate T");
      gates.push_back(make_t(qubit(toks[2])));
    } else if (name == "P") {
      arity(toks, 4, "gate P");
      gates.emplace_back(PhaseGate{qubit(toks[2]), real(toks[3])});
    } else if (name == "CNOT") {
      arity(toks, 4, "gate CNOT");
      const int c = qubit(toks[2]);
      const int t = qubit(toks[3]);
      if (c == t) fail("control equals target", toks[3]);
      gates.emplace_back(CnotGate{c, t});
    } else if (name == "R") {
      arity(toks, 7, "gate R");
      const int q = qubit(toks[2]);
      const double theta = real(toks[3]);
      std::array<double, 3> n{real(toks[4]), real(toks[5]), real(toks[6])};
      std::string warning;
      try {
        gates.emplace_back(make_rotation(q, theta, n, &warning));
      } catch (const InvalidArgument &e) {
        fail(e.what(), toks[4]);
      }
      if (!warning.empty()) {
        out_.warnings.push_back("line " + std::to_string(line_no_) + ": " + warning);
      }
    } else if (name == "U") {
      // k targets followed by 4^k entries: k + 4^k tokens after the name.
      const std::size_t n = toks.size() - 2;
      std::size_t k = 0;
      while (k <= 5 && k + (std::size_t{1} << (2 * k)) != n) ++k;
      if (k == 0 || k > 5) {
        fail("gate U expects k qubit indices followed by 4^k matrix entries", toks[1]);
      }
      std::vector<int> targets;
      for (std::size_t a = 0; a < k; ++a) targets.push_back(qubit(toks[2 + a]));
      std::vector<complex_t> entries;
      for (std::size_t a = 2 + k; a < toks.size(); ++a) entries.push_back(cplx(toks[a]));
      const std::size_t d = std::size_t{1} << k;
      try {
        gates.emplace_back(make_custom(targets, CMatrix(d, d, std::move(entries))));
      } catch (const InvalidArgument &e) {
        fail(e.what(), toks[2]);
      } catch (const ValidationError &e) {
        throw ValidationError(std::string(e.what()) + " at line " + std::to_string(line_no_));
      }
    } else {
      fail("unknown gate '" + name + "'", toks[1]);
    }
  }

  std::vector<std::string_view> lines_;
  std::size_t line_no_ = 0;
  CircuitFile out_;
  bool qubits_ = false;
  std::optional<StateSpec> state_;
  std::size_t state_line_ = 0;
};

std::string serialize_state(const StateSpec &s) {
  std::string out;
  auto join_args = [&](const char *kind) {
    out = kind;
    for (double a : s.args) out += " " + format_real(a);
  };
  switch (s.kind) {
  case StateSpec::Kind::PureBloch:
    join_args("pure_bloch");
    break;
  case StateSpec::Kind::PurePop:
    join_args("pure_pop");
    break;
  case StateSpec::Kind::Qubit:
    join_args("qubit");
    break;
  case StateSpec::Kind::Thermal:
    join_args("thermal");
    break;
  case StateSpec::Kind::Product:
    out = "product";
    for (std::size_t k = 0; k < s.parts.size(); ++k) {
      out += (k == 0 ? " " : " ; ") + serialize_state(s.parts[k]);
    }
    break;
  case StateSpec::Kind::Matrix:
    out = "matrix";
    for (const auto &z : s.entries) out += " " + format_complex(z);
    break;
  }
  return out;
}

} // namespace

double parse_real_expression(std::string_view token) {
  if (token.empty()) throw InvalidArgument("malformed number ''");
  const double v = ExprParser(token).parse();
  if (!std::isfinite(v)) throw InvalidArgument("non-finite number '" + std::string(token) + "'");
  return v;
}

complex_t parse_complex_literal(std::string_view token) {
  if (token.empty()) throw InvalidArgument("malformed complex number ''");
  if (token.back() != 'i') return {parse_real_expression(token), 0.0};
  const std::string_view body = token.substr(0, token.size() - 1);
  // The imaginary part starts at the last sign that is not an exponent sign.
  std::size_t split = std::string_view::npos;
  int depth = 0;
  for (std::size_t k = body.size(); k-- > 1;) {
    if (body[k] == ')') ++depth;
    if (body[k] == '(') --depth;
    if (depth == 0 && (body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' &&
        body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  auto imag_of = [&](std::string_view s) -> double {
    if (s.empty() || s == "+") return 1.0;
    if (s == "-") return -1.0;
    return parse_real_expression(s);
  };
  try {
    if (split == std::string_view::npos) return {0.0, imag_of(body)};
    return {parse_real_expression(body.substr(0, split)), imag_of(body.substr(split))};
  } catch (const InvalidArgument &) {
    throw InvalidArgument("malformed complex number '" + std::string(token) + "'");
  }
}

std::string format_real(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string format_complex(complex_t z) {
  std::string out = format_real(z.real());
  const double im = z.imag();
  out += std::signbit(im) ? "-" : "+";
  out += format_real(std::abs(im));
  out += "i";
  return out;
}

DensityMatrix build_state(const StateSpec &s, const Hamiltonian &h) {
  switch (s.kind) {
  case StateSpec::Kind::PureBloch:
    return pure_state_bloch(s.args[0], s.args[1]);
  case StateSpec::Kind::PurePop:
    return pure_state_pop_phase(s.args[0], s.args[1]);
  case StateSpec::Kind::Qubit:
    return qubit_state({s.args[0], s.args[1], s.args[2]});
  case StateSpec::Kind::Thermal:
    return thermal_state(h, s.args[0]);
  case StateSpec::Kind::Product: {
    const Hamiltonian h1 = build_hamiltonian(1, h.energy_scale);
    DensityMatrix acc = build_state(s.parts[0], h1);
    for (std::size_t k = 1; k < s.parts.size(); ++k) {
      acc = product_state(acc, build_state(s.parts[k], h1));
    }
    return acc;
  }
  case StateSpec::Kind::Matrix: {
    const auto d = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(s.entries.size()))));
    return DensityMatrix(CMatrix(d, d, s.entries));
  }
  }
  throw InvalidArgument("unknown state kind");
}

Hamiltonian CircuitFile::hamiltonian() const {
  return build_hamiltonian(circuit.num_qubits, energy_scale);
}

DensityMatrix CircuitFile::initial_state() const {
  const Hamiltonian h = hamiltonian();
  DensityMatrix rho = build_state(state, h);
  if (rho.dim() != h.dim()) {
    throw ValidationError("state has dimension " + std::to_string(rho.dim()) + " but " +
                          std::to_string(circuit.num_qubits) + " qubit(s) need " +
                          std::to_string(h.dim()));
  }
  return rho;
}

CircuitFile parse_circuit(std::string_view text) { return FileParser(text).run(); }

std::string serialize_circuit(const CircuitFile &file) {
  std::ostringstream os;
  os << "qubits " << file.circuit.num_qubits << "\n";
  os << "E " << format_real(file.energy_scale) << "\n";
  os << "state " << serialize_state(file.state) << "\n";
  for (const auto &g : file.circuit.gates) {
    os << "gate ";
    if (const auto *h = std::get_if<HadamardGate>(&g)) {
      os << "H " << h->target;
    } else if (const auto *p = std::get_if<PhaseGate>(&g)) {
      if (p->phi == std::numbers::pi / 4) os << "T " << p->target;
      else os << "P " << p->target << " " << format_real(p->phi);
    } else if (const auto *c = std::get_if<CnotGate>(&g)) {
      os << "CNOT " << c->control << " " << c->target;
    } else if (const auto *r = std::get_if<RotationGate>(&g)) {
      os << "R " << r->target << " " << format_real(r->theta);
      for (double a : r->axis) os << " " << format_real(a);
    } else if (const auto *u = std::get_if<CustomGate>(&g)) {
      os << "U";
      for (int t : u->targets) os << " " << t;
      for (const auto &z : u->matrix.entries()) os << " " << format_complex(z);
    }
    os << "\n";
  }
  return os.str();
}

std::string substitute_placeholders(std::string_view text,
                                    const std::map<std::string, double> &values) {
  std::string out;
  const auto lines = split_lines(text);
  for (std::size_t n = 0; n < lines.size(); ++n) {
    const auto line = lines[n];
    const auto body = strip_comment(line);
    for (std::size_t k = 0; k < body.size(); ++k) {
      if (body[k] != '$') {
        out.push_back(body[k]);
        continue;
      }
      std::size_t e = k + 1;
      if (e >= body.size() || !is_ident_start(body[e])) {
        throw ParseError("malformed placeholder", n + 1, k + 1);
      }
      while (e < body.size() && is_ident_char(body[e])) ++e;
      const std::string name(body.substr(k + 1, e - k - 1));
      const auto it = values.find(name);
      if (it == values.end()) throw ParseError("undefined placeholder $" + name, n + 1, k + 1);
      // Parenthesize so a negative value composes with surrounding operators.
      out += "(" + format_real(it->second) + ")";
      k = e - 1;
    }
    out += line.substr(body.size());
    if (n + 1 < lines.size()) out.push_back('\n');
  }
  return out;
}

std::vector<std::string> placeholder_names(std::string_view text) {
  std::vector<std::string> names;
  for (const auto line : split_lines(text)) {
    const auto body = strip_comment(line);
    for (std::size_t k = 0; k < body.size(); ++k) {
      if (body[k] != '$') continue;
      std::size_t e = k + 1;
      while (e < body.size() && is_ident_char(body[e])) ++e;
      std::string name(body.substr(k + 1, e - k - 1));
      if (!name.empty() && std::find(names.begin(), names.end(), name) == names.end()) {
        names.push_back(std::move(name));
      }
      k = e - 1;
    }
  }
  return names;
}

} // namespace kdwork
