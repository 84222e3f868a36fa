#include "indexsum/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "indexsum/error.hpp"

namespace indexsum {

SparsePoly make_poly(const FiniteField& F, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.exp < b.exp; });
  SparsePoly out;
  for (const Term& t : terms) {
    if (!out.terms.empty() && out.terms.back().exp == t.exp) {
      out.terms.back().coeff = F.add(out.terms.back().coeff, t.coeff);
    } else {
      out.terms.push_back(t);
    }
  }
  std::erase_if(out.terms, [](const Term& t) { return t.coeff.code == 0; });
  return out;
}

SparsePoly monomial(FieldElement coeff, std::uint64_t exp) {
  SparsePoly out;
  if (coeff.code != 0) out.terms.push_back({exp, coeff});
  return out;
}

SparsePoly poly_add(const FiniteField& F, const SparsePoly& a, const SparsePoly& b) {
  std::vector<Term> terms = a.terms;
  terms.insert(terms.end(), b.terms.begin(), b.terms.end());
  return make_poly(F, std::move(terms));
}

SparsePoly poly_scale(const FiniteField& F, const SparsePoly& a, FieldElement c) {
  if (c.code == 0) return {};
  SparsePoly out = a;
  for (Term& t : out.terms) t.coeff = F.mul(t.coeff, c);
  return out;
}

SparsePoly poly_sub(const FiniteField& F, const SparsePoly& a, const SparsePoly& b) {
  return poly_add(F, a, poly_scale(F, b, F.neg(F.one())));
}

SparsePoly poly_mul(const FiniteField& F, const SparsePoly& a, const SparsePoly& b) {
  std::vector<Term> terms;
  terms.reserve(a.terms.size() * b.terms.size());
  for (const Term& x : a.terms) {
    for (const Term& y : b.terms) terms.push_back({x.exp + y.exp, F.mul(x.coeff, y.coeff)});
  }
  return make_poly(F, std::move(terms));
}

SparsePoly poly_compose_power(const FiniteField& F, const SparsePoly& a, std::uint64_t k) {
  std::vector<Term> terms = a.terms;
  for (Term& t : terms) {
    if (k != 0 && t.exp > UINT64_MAX / k) throw Error(ErrorCode::BadExponents, "exponent overflow");
    t.exp *= k;
  }
  return make_poly(F, std::move(terms));
}

SparsePoly canonicalize(const FiniteField& F, const SparsePoly& g) {
  const std::uint64_t q = F.q();
  std::vector<Term> terms = g.terms;
  for (Term& t : terms) {
    if (t.exp >= q) t.exp = 1 + (t.exp - 1) % (q - 1);
  }
  return make_poly(F, std::move(terms));
}

bool is_reduced(const FiniteField& F, const SparsePoly& g) {
  return std::all_of(g.terms.begin(), g.terms.end(), [&](const Term& t) { return t.exp < F.q(); });
}

FieldElement eval_poly(const FiniteField& F, const SparsePoly& g, FieldElement x) {
  if (x.code == 0) return g.constant_term();
  const std::uint64_t M = F.order();
  FieldElement acc = F.zero();
  for (const Term& t : g.terms) {
    acc = F.add(acc, F.mul(t.coeff, F.pow(x, static_cast<std::int64_t>(t.exp % M))));
  }
  return acc;
}

std::string format_element(const FiniteField& F, FieldElement x) {
  if (F.in_prime_subfield(x)) return std::to_string(x.code);
  std::ostringstream os;
  os << '[';
  const auto c = F.coords(x);
  for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
  os << ']';
  return os.str();
}

std::string format_poly(const FiniteField& F, const SparsePoly& g) {
  if (g.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = g.terms.rbegin(); it != g.terms.rend(); ++it) {
    if (!first) os << '+';
    first = false;
    const bool unit = it->coeff == F.one();
    if (it->exp == 0) {
      os << format_element(F, it->coeff);
      continue;
    }
    if (!unit) os << format_element(F, it->coeff) << '*';
    os << 'x';
    if (it->exp != 1) os << '^' << it->exp;
  }
  return os.str();
}

namespace {

class PolyParser {
 public:
  PolyParser(const FiniteField& F, std::string text) : F_(F), src_(std::move(text)) {
    std::erase_if(src_, [](unsigned char c) { return std::isspace(c); });
  }

  SparsePoly parse() {
    if (src_.empty()) fail("empty polynomial");
    std::vector<Term> terms;
    bool negate = false;
    if (peek() == '-' || peek() == '+') negate = get() == '-';
    terms.push_back(term(negate));
    while (pos_ < src_.size()) {
      const char op = get();
      if (op != '+' && op != '-') fail("expected + or -");
      terms.push_back(term(op == '-'));
    }
    return make_poly(F_, std::move(terms));
  }

  FieldElement element_only() {
    FieldElement e = coefficient();
    if (pos_ != src_.size()) fail("trailing characters");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::ParseError, "'" + src_ + "' at " + std::to_string(pos_) + ": " + why);
  }
  char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }
  char get() { return pos_ < src_.size() ? src_[pos_++] : '\0'; }

  std::uint64_t integer() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected integer");
    try {
      return std::stoull(src_.substr(start, pos_ - start));
    } catch (const std::out_of_range&) {
      fail("integer out of range");
    }
  }

  FieldElement coefficient() {
    if (peek() == '[') {
      ++pos_;
      std::vector<std::uint32_t> coords;
      while (true) {
        const std::uint64_t v = integer();
        if (v >= F_.p()) fail("coordinate not reduced mod p");
        coords.push_back(static_cast<std::uint32_t>(v));
        const char c = get();
        if (c == ']') break;
        if (c != ',') fail("expected , or ]");
      }
      return F_.from_coords(coords);
    }
    return FieldElement{static_cast<std::uint32_t>(integer() % F_.p())};
  }

  Term term(bool negate) {
    Term t{0, F_.one()};
    const char c = peek();
    if (c == 'x') {
      t.exp = var_power();
    } else {
      t.coeff = coefficient();
      if (peek() == '*') {
        ++pos_;
        if (peek() != 'x') fail("expected x after *");
        t.exp = var_power();
      } else if (peek() == 'x') {
        t.exp = var_power();
      }
    }
    if (negate) t.coeff = F_.neg(t.coeff);
    return t;
  }

  std::uint64_t var_power() {
    ++pos_;  // 'x'
    if (peek() != '^') return 1;
    ++pos_;
    return integer();
  }

  const FiniteField& F_;
  std::string src_;
  std::size_t pos_ = 0;
};

}  // namespace

SparsePoly parse_poly(const FiniteField& F, const std::string& text) { return PolyParser(F, text).parse(); }

FieldElement parse_element(const FiniteField& F, const std::string& text) {
  std::string s = text;
  bool negate = false;
  if (!s.empty() && s.front() == '-') {
    negate = true;
    s.erase(0, 1);
  }
  const FieldElement e = PolyParser(F, s).element_only();
  return negate ? F.neg(e) : e;
}

}  // namespace indexsum
