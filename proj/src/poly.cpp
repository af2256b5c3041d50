#include "z4dna/poly.hpp"

#include <cctype>
#include <map>

namespace z4dna {

namespace {

template <class T>
std::vector<Polynomial<T>> scan_monic_divisors(std::size_t n, std::size_t max_deg) {
  const auto target = Polynomial<T>::xn_minus_1(n);
  std::vector<Polynomial<T>> out;
  for (std::size_t deg = 1; deg <= max_deg; ++deg) {
    std::size_t total = 1;
    for (std::size_t k = 0; k < deg; ++k) total *= T::order();
    std::vector<T> c(deg + 1, T::zero());
    c[deg] = T::one();
    for (std::size_t code = 0; code < total; ++code) {
      std::size_t rest = code;
      for (std::size_t k = 0; k < deg; ++k) {
        c[k] = T::from_index(rest % T::order());
        rest /= T::order();
      }
      const Polynomial<T> d(c);
      if (const auto q = divides_monic(d, target); q && *q * d == target) out.push_back(d);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

void check_divisor_args(std::size_t n, std::size_t max_deg) {
  if (n == 0 || n % 2 == 0) throw std::invalid_argument("divisor_search: n must be odd");
  if (max_deg < 1 || max_deg > n) throw std::invalid_argument("divisor_search: need 1 <= max_deg <= n");
}

} // namespace

std::vector<Z4Poly> divisor_search(std::size_t n, std::size_t max_deg) {
  check_divisor_args(n, max_deg);
  return scan_monic_divisors<Z4>(n, max_deg);
}

std::vector<RPoly> divisor_search_r(std::size_t n, std::size_t max_deg) {
  check_divisor_args(n, max_deg);
  return scan_monic_divisors<RElement>(n, max_deg);
}

SkewPolynomial operator*(const SkewPolynomial& f, const SkewPolynomial& g) {
  if (f.is_zero() || g.is_zero()) return {};
  const auto& fc = f.coeffs();
  const auto& gc = g.coeffs();
  std::vector<RElement> out(fc.size() + gc.size() - 1);
  for (std::size_t i = 0; i < fc.size(); ++i)
    for (std::size_t j = 0; j < gc.size(); ++j) out[i + j] += fc[i] * theta_pow(gc[j], i);
  return SkewPolynomial(RPoly(std::move(out)));
}

std::optional<SkewPolynomial> skew_right_divides(const SkewPolynomial& d, const SkewPolynomial& f) {
  if (d.is_zero() || !d.lead().is_unit())
    throw std::invalid_argument("skew_right_divides: divisor needs a unit leading coefficient");
  const std::size_t dd = static_cast<std::size_t>(d.degree());
  SkewPolynomial rem = f;
  std::vector<RElement> q;
  while (!rem.is_zero() && rem.degree() >= static_cast<long>(dd)) {
    const std::size_t k = static_cast<std::size_t>(rem.degree()) - dd;
    // q_k · θ^k(lead d) = lead(rem)
    const RElement qk = rem.lead() * *theta_pow(d.lead(), k).inverse();
    if (q.size() < k + 1) q.resize(k + 1);
    q[k] += qk;
    rem = rem - SkewPolynomial(RPoly::monomial(qk, k)) * d;
  }
  if (!rem.is_zero()) return std::nullopt;
  return SkewPolynomial(RPoly(std::move(q)));
}

std::vector<SkewPolynomial> skew_divisor_search(std::size_t n, std::size_t max_deg) {
  if (n == 0) throw std::invalid_argument("skew_divisor_search: n must be positive");
  const auto target = SkewPolynomial::xn_minus_1(n);
  std::vector<SkewPolynomial> out{SkewPolynomial{RElement::one()}};
  for (std::size_t deg = 1; deg <= max_deg; ++deg) {
    std::size_t total = 1;
    for (std::size_t k = 0; k < deg; ++k) total *= RElement::order();
    std::vector<RElement> c(deg + 1);
    c[deg] = RElement::one();
    for (std::size_t code = 0; code < total; ++code) {
      std::size_t rest = code;
      for (std::size_t k = 0; k < deg; ++k) {
        c[k] = RElement::from_index(rest % 16);
        rest /= 16;
      }
      const SkewPolynomial d{RPoly(c)};
      if (skew_right_divides(d, target)) out.push_back(d);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Text forms

namespace {

std::string s_monomials(SElement x) {
  static constexpr const char* kSymbols[4] = {"", "w", "v", "wv"};
  std::string out;
  for (int k = 0; k < 4; ++k) {
    const int c = x.c[k].value();
    if (c == 0) continue;
    if (!out.empty()) out += '+';
    if (c != 1 || k == 0) out += std::to_string(c);
    out += kSymbols[k];
  }
  return out.empty() ? "0" : out;
}

std::string x_power(std::size_t k) {
  if (k == 0) return "";
  if (k == 1) return "x";
  return "x^" + std::to_string(k);
}

std::string human_form(const std::vector<SElement>& coeffs) {
  std::string out;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k].is_zero()) continue;
    if (!out.empty()) out += '+';
    std::string c = s_monomials(coeffs[k]);
    const bool composite = c.find('+') != std::string::npos;
    if (k == 0) {
      out += c;
    } else if (c == "1") {
      out += x_power(k);
    } else {
      out += (composite ? "(" + c + ")" : c) + x_power(k);
    }
  }
  return out.empty() ? "0" : out;
}

template <class T>
std::vector<SElement> lift(const Polynomial<T>& f) {
  std::vector<SElement> out;
  for (const T& c : f.coeffs()) out.push_back(SElement(c));
  return out;
}

// Recursive-descent parser over commuting symbols w, v, x with w² = 2, v² = v.
class PolyParser {
public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  SPoly parse_all() {
    SPoly p = parse_sum();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

  bool saw_w = false;
  bool saw_v = false;

private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("polynomial parse error at " + std::to_string(pos_) + ": " + what);
  }
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool peek(char ch) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == ch;
  }
  std::size_t number() {
    skip_space();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) fail("expected a number");
    std::size_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + static_cast<std::size_t>(text_[pos_] - '0');
      if (v > 100000) fail("number too large");
      ++pos_;
    }
    return v;
  }

  SPoly parse_sum() {
    SPoly acc;
    bool first = true;
    for (;;) {
      int sign = 1;
      if (peek('+') || peek('-')) {
        sign = text_[pos_] == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        break;
      }
      SPoly t = parse_term();
      acc = sign > 0 ? acc + t : acc - t;
      first = false;
    }
    return acc;
  }

  SPoly parse_term() {
    SPoly acc = SPoly::constant(SElement::one());
    bool any = false;
    for (;;) {
      skip_space();
      if (pos_ >= text_.size()) break;
      const char ch = text_[pos_];
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        acc = SElement(static_cast<int>(number() % 4)) * acc;
      } else if (ch == 'w' || ch == 'v') {
        ++pos_;
        (ch == 'w' ? saw_w : saw_v) = true;
        acc = (ch == 'w' ? SElement::w() : SElement::v()) * acc;
      } else if (ch == 'x') {
        ++pos_;
        std::size_t k = 1;
        if (peek('^')) {
          ++pos_;
          k = number();
        }
        acc = acc.shifted(k);
      } else if (ch == '(') {
        acc = acc * parse_group();
      } else if (ch == '*') {
        ++pos_;
        continue;
      } else {
        break;
      }
      any = true;
    }
    if (!any) fail("expected a term");
    return acc;
  }

  SPoly parse_group() {
    ++pos_; // '('
    const std::size_t start = pos_;
    // A 4-tuple "(a0,a1,a2,a3)" is an S element.
    std::size_t depth = 0, close = start;
    bool tuple = false;
    for (; close < text_.size(); ++close) {
      if (text_[close] == '(') ++depth;
      if (text_[close] == ')') {
        if (depth == 0) break;
        --depth;
      }
      if (text_[close] == ',' && depth == 0) tuple = true;
    }
    if (close >= text_.size()) fail("unbalanced parenthesis");
    if (tuple) {
      auto s = parse_s(text_.substr(start - 1, close - start + 2));
      if (!s) fail("malformed S tuple");
      saw_v = true;
      pos_ = close + 1;
      return SPoly::constant(*s);
    }
    SPoly inner = parse_sum();
    if (!peek(')')) fail("expected ')'");
    ++pos_;
    return inner;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::vector<std::string_view> split_top_level(std::string_view body) {
  std::vector<std::string_view> parts;
  std::size_t depth = 0, start = 0;
  for (std::size_t i = 0; i < body.size(); ++i) {
    if (body[i] == '(') ++depth;
    if (body[i] == ')' && depth > 0) --depth;
    if (body[i] == ',' && depth == 0) {
      parts.push_back(body.substr(start, i - start));
      start = i + 1;
    }
  }
  parts.push_back(body.substr(start));
  return parts;
}

AnyPoly narrow(const SPoly& p, bool saw_w, bool saw_v) {
  if (saw_v) return p;
  std::vector<RElement> rc;
  for (const SElement& c : p.coeffs()) rc.emplace_back(c.c[0], c.c[1]);
  if (saw_w) return RPoly(std::move(rc));
  std::vector<Z4> zc;
  for (const RElement& c : rc) zc.push_back(c.a);
  return Z4Poly(std::move(zc));
}

} // namespace

std::string to_string(const Z4Poly& f) { return human_form(lift(f)); }
std::string to_string(const RPoly& f) { return human_form(lift(f)); }
std::string to_string(const SPoly& f) { return human_form(f.coeffs()); }
std::string to_string(const SkewPolynomial& f) { return to_string(f.poly()); }

std::string to_bracket_string(const Z4Poly& f) {
  std::string out = "[";
  for (std::size_t k = 0; k < f.coeffs().size(); ++k) out += (k ? "," : "") + to_string(f.coeffs()[k]);
  return out + "]";
}
std::string to_bracket_string(const RPoly& f) {
  std::string out = "[";
  for (std::size_t k = 0; k < f.coeffs().size(); ++k) out += (k ? "," : "") + to_string(f.coeffs()[k]);
  return out + "]";
}
std::string to_bracket_string(const SPoly& f) {
  std::string out = "[";
  for (std::size_t k = 0; k < f.coeffs().size(); ++k) out += (k ? "," : "") + to_string(f.coeffs()[k]);
  return out + "]";
}

AnyPoly parse_polynomial(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("polynomial parse error: empty input");
  if (text.front() == '[') {
    if (text.back() != ']') throw std::invalid_argument("polynomial parse error: missing ']'");
    const std::string_view body = text.substr(1, text.size() - 2);
    std::vector<SElement> coeffs;
    bool saw_w = false, saw_v = false;
    if (!body.empty()) {
      for (std::string_view part : split_top_level(body)) {
        PolyParser p(part);
        const SPoly e = p.parse_all();
        if (e.degree() > 0) throw std::invalid_argument("polynomial parse error: x inside a bracket entry");
        coeffs.push_back(e[0]);
        saw_w = saw_w || p.saw_w;
        saw_v = saw_v || p.saw_v;
      }
    }
    return narrow(SPoly(std::move(coeffs)), saw_w, saw_v);
  }
  PolyParser p(text);
  const SPoly f = p.parse_all();
  return narrow(f, p.saw_w, p.saw_v);
}

Z4Poly parse_z4_poly(std::string_view text) {
  const AnyPoly p = parse_polynomial(text);
  if (const auto* z = std::get_if<Z4Poly>(&p)) return *z;
  throw std::invalid_argument("expected a polynomial over Z4: " + std::string(text));
}

RPoly parse_r_poly(std::string_view text) {
  const AnyPoly p = parse_polynomial(text);
  if (const auto* z = std::get_if<Z4Poly>(&p)) return z->embed<RElement>();
  if (const auto* r = std::get_if<RPoly>(&p)) return *r;
  throw std::invalid_argument("expected a polynomial over R: " + std::string(text));
}

SPoly parse_s_poly(std::string_view text) {
  const AnyPoly p = parse_polynomial(text);
  if (const auto* z = std::get_if<Z4Poly>(&p)) return z->embed<SElement>();
  if (const auto* r = std::get_if<RPoly>(&p)) return r->embed<SElement>();
  return std::get<SPoly>(p);
}

} // namespace z4dna
