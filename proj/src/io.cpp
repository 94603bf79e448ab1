#include "gbkit/io.hpp"

#include <cctype>
#include <charconv>
#include <map>
#include <optional>
#include <sstream>

namespace gbkit {

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

class PolyParser {
 public:
  PolyParser(const RingPtr& ring, std::string_view text, std::size_t line, std::size_t col0)
      : ring_(ring), F_(ring->field()), text_(text), line_(line), col0_(col0) {
    for (std::size_t i = 0; i < ring->nvars(); ++i) index_.emplace(ring->names()[i], i);
  }

  Polynomial parse() {
    std::vector<Term> terms;
    skip_ws();
    if (at_end()) fail(Errc::ParseError, "expected a polynomial");
    bool first = true;
    while (true) {
      skip_ws();
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail(Errc::ParseError, std::string("expected '+' or '-', found '") + peek() + "'");
      }
      Term t = parse_term();
      if (negative) t.coeff = F_.neg(t.coeff);
      terms.push_back(std::move(t));
      first = false;
      skip_ws();
      if (at_end()) break;
    }
    return Polynomial(ring_, std::move(terms));
  }

 private:
  Term parse_term() {
    Residue coeff = 1;
    Monomial mono(ring_->nvars());
    bool need_factor = true;
    while (need_factor) {
      skip_ws();
      if (is_digit(peek())) {
        Residue c = parse_number_mod_p();
        skip_ws();
        if (peek() == '^') {
          ++pos_;
          skip_ws();
          c = F_.pow(c, parse_exponent());
        }
        coeff = F_.mul(coeff, c);
        skip_ws();
        // A coefficient may be followed directly by a variable.
        if (is_ident_start(peek())) continue;
      } else if (is_ident_start(peek())) {
        std::size_t start = pos_;
        while (!at_end() && is_ident_char(text_[pos_])) ++pos_;
        std::string name(text_.substr(start, pos_ - start));
        auto it = index_.find(name);
        if (it == index_.end()) fail_at(start, Errc::UnknownVariable, "unknown variable '" + name + "'");
        std::uint64_t e = 1;
        skip_ws();
        if (peek() == '^') {
          ++pos_;
          skip_ws();
          e = parse_exponent();
        }
        std::vector<std::uint32_t> exps = mono.exponents();
        std::uint64_t total = exps[it->second] + e;
        if (total > Monomial::kMaxExponent) fail_at(start, Errc::ExponentOverflow, "exponent too large");
        exps[it->second] = static_cast<std::uint32_t>(total);
        mono = Monomial(std::move(exps));
      } else if (at_end()) {
        fail(Errc::ParseError, "unexpected end of polynomial");
      } else {
        fail(Errc::ParseError, std::string("unexpected character '") + peek() + "'");
      }
      skip_ws();
      need_factor = peek() == '*';
      if (need_factor) ++pos_;
    }
    return Term{std::move(mono), coeff};
  }

  Residue parse_number_mod_p() {
    std::uint64_t v = 0;
    while (!at_end() && is_digit(text_[pos_])) {
      v = (v * 10 + static_cast<std::uint64_t>(text_[pos_] - '0')) % F_.modulus();
      ++pos_;
    }
    return static_cast<Residue>(v);
  }

  std::uint64_t parse_exponent() {
    if (!is_digit(peek())) fail(Errc::ParseError, "expected an exponent");
    std::size_t start = pos_;
    std::uint64_t v = 0;
    while (!at_end() && is_digit(text_[pos_])) {
      v = v * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      if (v > Monomial::kMaxExponent) fail_at(start, Errc::ExponentOverflow, "exponent too large");
      ++pos_;
    }
    return v;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  [[noreturn]] void fail(Errc code, const std::string& msg) { fail_at(pos_, code, msg); }
  [[noreturn]] void fail_at(std::size_t pos, Errc code, const std::string& msg) {
    throw ParseError(code, line_, col0_ + pos + 1, msg);
  }

  RingPtr ring_;
  const PrimeField& F_;
  std::string_view text_;
  std::size_t line_;
  std::size_t col0_;
  std::size_t pos_ = 0;
  std::map<std::string, std::size_t, std::less<>> index_;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Header keyword of a line, if it is one.
std::optional<std::string_view> header_keyword(std::string_view line) {
  std::size_t i = 0;
  while (i < line.size() && is_ident_char(line[i])) ++i;
  std::string_view word = line.substr(0, i);
  if (word != "p" && word != "vars" && word != "order") return std::nullopt;
  if (i == line.size() || !std::isspace(static_cast<unsigned char>(line[i]))) return std::nullopt;
  return word;
}

}  // namespace

Polynomial parse_polynomial(const RingPtr& ring, std::string_view text, std::size_t first_line) {
  return PolyParser(ring, text, first_line, 0).parse();
}

System parse_system(std::string_view text) {
  std::optional<std::uint64_t> p;
  std::optional<std::vector<std::string>> vars;
  TermOrder order = TermOrder::DegRevLex;
  bool order_seen = false;
  RingPtr ring;
  System sys;
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view raw = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++lineno;
    if (std::size_t hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::size_t indent = 0;
    while (indent < raw.size() && std::isspace(static_cast<unsigned char>(raw[indent]))) ++indent;
    std::string_view line = trim(raw);
    if (line.empty()) continue;

    auto kw = header_keyword(line);
    if (kw && (ring || (*kw == "p" && p) || (*kw == "vars" && vars) || (*kw == "order" && order_seen))) kw.reset();
    if (kw) {
      std::string_view rest = trim(line.substr(kw->size()));
      std::size_t col = indent + (line.size() - rest.size()) + 1;
      if (*kw == "p") {
        std::uint64_t v = 0;
        auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), v);
        if (ec != std::errc() || ptr != rest.data() + rest.size()) {
          throw ParseError(Errc::ParseError, lineno, col, "modulus must be a decimal integer below 2^31");
        }
        try {
          PrimeField check(v);
        } catch (const Error& e) {
          throw ParseError(e.code(), lineno, col, "modulus " + std::string(rest) + " is not an odd prime below 2^31");
        }
        p = v;
      } else if (*kw == "vars") {
        std::vector<std::string> names;
        std::size_t i = 0;
        while (i < rest.size()) {
          if (rest[i] == ',' || std::isspace(static_cast<unsigned char>(rest[i]))) {
            ++i;
            continue;
          }
          if (!is_ident_start(rest[i])) {
            throw ParseError(Errc::ParseError, lineno, col + i, "variable names must be identifiers");
          }
          std::size_t start = i;
          while (i < rest.size() && is_ident_char(rest[i])) ++i;
          std::string name(rest.substr(start, i - start));
          for (const auto& n : names) {
            if (n == name) throw ParseError(Errc::ParseError, lineno, col + start, "duplicate variable '" + name + "'");
          }
          names.push_back(std::move(name));
        }
        if (names.empty()) throw ParseError(Errc::ParseError, lineno, col, "no variables declared");
        vars = std::move(names);
      } else {
        try {
          order = parse_term_order(std::string(rest));
          order_seen = true;
        } catch (const Error&) {
          throw ParseError(Errc::ParseError, lineno, col, "unknown term order '" + std::string(rest) + "'");
        }
      }
      continue;
    }

    if (!ring) {
      if (!p) throw ParseError(Errc::ParseError, lineno, indent + 1, "missing 'p <prime>' header");
      if (!vars) throw ParseError(Errc::ParseError, lineno, indent + 1, "missing 'vars' header");
      ring = make_ring(*p, *vars, order);
    }
    sys.polys.push_back(PolyParser(ring, line, lineno, indent).parse());
  }
  if (!ring) throw Error(Errc::EmptyInput, "the system has no polynomials");
  sys.ring = ring;
  return sys;
}

std::string render_monomial(const Ring& ring, const Monomial& m) {
  if (m.is_one()) return "1";
  std::string out;
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += ring.names()[i];
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out;
}

std::string render(const Polynomial& f, RenderOptions opts) {
  if (f.is_zero()) return "0";
  const Ring& R = *f.ring();
  const Residue p = R.field().modulus();
  std::string out;
  bool first = true;
  for (const auto& t : f.terms()) {
    bool negative = false;
    Residue mag = t.coeff;
    if (opts.signed_coefficients && t.coeff > p / 2) {
      negative = true;
      mag = p - t.coeff;
    }
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? '-' : '+';
    }
    first = false;
    if (t.mono.is_one()) {
      out += std::to_string(mag);
    } else {
      if (mag != 1) out += std::to_string(mag) + '*';
      out += render_monomial(R, t.mono);
    }
  }
  return out;
}

std::string render_system(const RingPtr& ring, const std::vector<Polynomial>& polys, RenderOptions opts) {
  std::ostringstream os;
  os << "p " << ring->field().modulus() << '\n' << "vars ";
  for (std::size_t i = 0; i < ring->nvars(); ++i) os << (i ? "," : "") << ring->names()[i];
  os << '\n' << "order " << to_string(ring->order()) << '\n';
  for (const auto& f : polys) os << render(f, opts) << '\n';
  return os.str();
}

}  // namespace gbkit
