#include "equidim/system_io.hpp"

#include <cctype>
#include <charconv>
#include <set>

namespace equidim {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class ExprParser {
 public:
  ExprParser(std::string_view text, const RingPtr& ring, std::size_t line) : s_(text), ring_(ring), line_(line) {}

  Polynomial parse() {
    skip_space();
    if (pos_ == s_.size()) fail("empty expression");
    Polynomial p = expr();
    skip_space();
    if (pos_ != s_.size()) fail(std::string("unexpected '") + s_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line_, pos_ + 1, msg); }

  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    Polynomial acc = term();
    for (;;) {
      if (accept('+'))
        acc = acc + term();
      else if (accept('-'))
        acc = acc - term();
      else
        return acc;
    }
  }

  Polynomial term() {
    Polynomial acc = unary();
    while (accept('*')) acc = acc * unary();
    return acc;
  }

  Polynomial unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Polynomial power() {
    Polynomial base = atom();
    if (!accept('^')) return base;
    skip_space();
    std::size_t start = pos_;
    unsigned e = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      e = e * 10 + unsigned(s_[pos_] - '0');
      if (e > Monomial::kMaxExponent) {
        pos_ = start;
        fail("exponent too large");
      }
      ++pos_;
    }
    if (pos_ == start) fail("expected exponent after '^'");
    return base.pow(e);
  }

  Polynomial atom() {
    skip_space();
    if (pos_ == s_.size()) fail("unexpected end of expression");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::uint64_t p = ring_->field.prime();
      std::uint64_t v = 0;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
        v = (v * 10 + unsigned(s_[pos_++] - '0')) % p;
      return Polynomial::constant(ring_, static_cast<std::int64_t>(v));
    }
    if (ident_start(c)) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && ident_char(s_[pos_])) ++pos_;
      std::string_view name = s_.substr(start, pos_ - start);
      const auto& names = ring_->names;
      for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return Polynomial::variable(ring_, i);
      pos_ = start;
      fail("unknown identifier " + std::string(name));
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view s_;
  const RingPtr& ring_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

std::string_view strip_comment(std::string_view line) {
  auto hash = line.find('#');
  if (hash != std::string_view::npos) line = line.substr(0, hash);
  while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.remove_suffix(1);
  return line;
}

std::size_t first_nonspace(std::string_view line) {
  std::size_t k = 0;
  while (k < line.size() && std::isspace(static_cast<unsigned char>(line[k]))) ++k;
  return k;
}

bool starts_with_keyword(std::string_view body, std::string_view kw) {
  return body.substr(0, kw.size()) == kw && (body.size() == kw.size() || std::isspace(static_cast<unsigned char>(body[kw.size()])));
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring, std::size_t line) {
  return ExprParser(text, ring, line).parse();
}

SystemFile parse_system(std::string_view text, std::uint32_t characteristic_override) {
  SystemFile sys;
  bool have_vars = false, have_char = false;
  std::vector<std::pair<std::size_t, std::string>> pending;  // (line, source)
  std::size_t lineno = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    start = end + 1;
    ++lineno;
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    std::string_view line = strip_comment(raw);
    std::size_t indent = first_nonspace(line);
    std::string_view body = line.substr(indent);
    if (body.empty()) continue;

    if (!have_vars) {
      if (!starts_with_keyword(body, "vars")) throw ParseError(lineno, indent + 1, "expected 'vars' declaration");
      std::size_t k = indent + 4;
      std::set<std::string> seen;
      while (k < line.size()) {
        char c = line[k];
        if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
          ++k;
          continue;
        }
        if (!ident_start(c)) throw ParseError(lineno, k + 1, std::string("invalid variable name starting with '") + c + "'");
        std::size_t s = k;
        while (k < line.size() && ident_char(line[k])) ++k;
        std::string name(line.substr(s, k - s));
        if (!seen.insert(name).second) throw ParseError(lineno, s + 1, "duplicate variable " + name);
        sys.variables.push_back(std::move(name));
      }
      if (sys.variables.empty()) throw ParseError(lineno, indent + 1, "no variables declared");
      if (sys.variables.size() > kMaxVars - 1)
        throw ParseError(lineno, indent + 1, "too many variables (at most " + std::to_string(kMaxVars - 1) + ")");
      have_vars = true;
      continue;
    }

    if (!have_char && pending.empty() && starts_with_keyword(body, "char")) {
      std::size_t k = indent + 4;
      while (k < line.size() && std::isspace(static_cast<unsigned char>(line[k]))) ++k;
      std::uint64_t p = 0;
      auto [ptr, ec] = std::from_chars(line.data() + k, line.data() + line.size(), p);
      if (ec != std::errc() || ptr != line.data() + line.size())
        throw ParseError(lineno, k + 1, "expected an integer characteristic");
      if (p < 3 || p >= (1ull << 31) || !is_prime(p))
        throw ParseError(lineno, k + 1, "characteristic must be an odd prime below 2^31, got " + std::to_string(p));
      sys.characteristic = static_cast<std::uint32_t>(p);
      have_char = true;
      continue;
    }
    pending.emplace_back(lineno, std::string(line));
  }
  if (!have_vars) throw ParseError(lineno == 0 ? 1 : lineno, 1, "missing 'vars' declaration");
  if (characteristic_override) {
    if (characteristic_override < 3 || characteristic_override >= (1u << 31) || !is_prime(characteristic_override))
      throw ParseError(0, 0, "characteristic must be an odd prime below 2^31, got " +
                                 std::to_string(characteristic_override));
    sys.characteristic = characteristic_override;
  }

  sys.ring = make_ring(sys.variables, sys.characteristic);
  for (auto& [ln, src] : pending) {
    sys.polynomials.push_back(parse_polynomial(src, sys.ring, ln));
    std::size_t k = first_nonspace(src);
    sys.sources.push_back(src.substr(k));
  }
  return sys;
}

std::string format_system(const SystemFile& system) {
  std::string out = "vars ";
  for (std::size_t i = 0; i < system.variables.size(); ++i) {
    if (i) out += ", ";
    out += system.variables[i];
  }
  out += "\nchar " + std::to_string(system.characteristic) + "\n";
  for (const auto& p : system.polynomials) out += to_string(p) + "\n";
  return out;
}

SystemFile make_system(const RingPtr& ring, std::vector<Polynomial> polynomials) {
  SystemFile sys;
  sys.variables = ring->names;
  sys.characteristic = ring->field.prime();
  sys.ring = ring;
  for (auto& p : polynomials) {
    Polynomial q = p.in_ring(ring);
    sys.sources.push_back(to_string(q));
    sys.polynomials.push_back(std::move(q));
  }
  return sys;
}

SystemFile gen_ps(int n, Rng& rng, std::uint32_t prime) {
  if (n < 3) throw ContractViolation("Ps(n) needs n >= 3");
  const std::size_t m = static_cast<std::size_t>(n - 2);
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= m; ++i) names.push_back("x" + std::to_string(i));
  for (std::size_t i = 1; i <= m; ++i) names.push_back("y" + std::to_string(i));
  names.push_back("z1");
  names.push_back("z2");
  RingPtr ring = make_ring(names, prime);
  const std::size_t nv = names.size();

  std::vector<std::size_t> xz;
  for (std::size_t i = 0; i < m; ++i) xz.push_back(i);
  xz.push_back(2 * m);
  xz.push_back(2 * m + 1);

  std::vector<Polynomial> fs, gs;
  for (int i = 0; i < n - 1; ++i) {
    Polynomial f = random_dense_polynomial(ring, xz, 2, rng);
    std::vector<Term> renamed;
    for (const auto& t : f.terms()) {
      Monomial mono(nv);
      for (std::size_t v = 0; v < m; ++v)
        if (t.mono[v]) mono.set(m + v, t.mono[v]);
      for (std::size_t v = 2 * m; v < nv; ++v)
        if (t.mono[v]) mono.set(v, t.mono[v]);
      renamed.push_back({mono, t.coef});
    }
    fs.push_back(std::move(f));
    gs.push_back(Polynomial(ring, std::move(renamed)));
  }
  fs.insert(fs.end(), gs.begin(), gs.end());
  return make_system(ring, std::move(fs));
}

SystemFile gen_sos(int s, int n, Rng& rng, std::uint32_t prime) {
  if (s < 1 || n < 2) throw ContractViolation("sos(s, n) needs s >= 1 and n >= 2");
  RingPtr ring = make_ring(static_cast<std::size_t>(n), prime);
  std::vector<std::size_t> all(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  Polynomial f(ring);
  for (int i = 0; i < s; ++i) {
    Polynomial g = random_dense_polynomial(ring, all, 2, rng);
    f = f + g * g;
  }
  std::vector<Polynomial> out{f};
  for (int j = 1; j < n; ++j) out.push_back(derivative(f, static_cast<std::size_t>(j)));
  return make_system(ring, std::move(out));
}

}  // namespace equidim
