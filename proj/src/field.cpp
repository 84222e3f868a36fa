#include "indexsum/field.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <unordered_map>

#include "indexsum/error.hpp"
#include "indexsum/numtheory.hpp"

namespace indexsum {

namespace {

// Dense polynomials over Z_p, ascending coefficients, no trailing zeros.
using ZpPoly = std::vector<std::uint64_t>;

void trim(ZpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint64_t inv_mod_prime(std::uint64_t a, std::uint64_t p) { return pow_mod(a, p - 2, p); }

ZpPoly zp_rem(ZpPoly a, const ZpPoly& f, std::uint64_t p) {
  trim(a);
  const std::size_t df = f.size() - 1;
  const std::uint64_t lead_inv = inv_mod_prime(f.back(), p);
  while (a.size() >= f.size()) {
    const std::uint64_t c = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - 1 - df;
    for (std::size_t i = 0; i <= df; ++i) {
      a[shift + i] = (a[shift + i] + (p - c) * f[i]) % p;
    }
    trim(a);
  }
  return a;
}

ZpPoly zp_mulmod(const ZpPoly& a, const ZpPoly& b, const ZpPoly& f, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  ZpPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  return zp_rem(std::move(r), f, p);
}

ZpPoly zp_powmod(ZpPoly base, std::uint64_t e, const ZpPoly& f, std::uint64_t p) {
  ZpPoly r{1};
  base = zp_rem(std::move(base), f, p);
  while (e > 0) {
    if (e & 1) r = zp_mulmod(r, base, f, p);
    base = zp_mulmod(base, base, f, p);
    e >>= 1;
  }
  return r;
}

ZpPoly zp_gcd(ZpPoly a, ZpPoly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    ZpPoly r = zp_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Rabin: f of degree m is irreducible iff x^{p^m} = x mod f and
// gcd(x^{p^{m/r}} - x, f) = 1 for every prime r | m.
bool zp_irreducible(const ZpPoly& f, std::uint64_t p) {
  const std::size_t m = f.size() - 1;
  if (m == 1) return true;
  std::vector<ZpPoly> frob(m + 1);
  frob[0] = zp_rem(ZpPoly{0, 1}, f, p);
  for (std::size_t i = 1; i <= m; ++i) frob[i] = zp_powmod(frob[i - 1], p, f, p);
  if (frob[m] != frob[0]) return false;
  for (std::uint64_t r : prime_divisors(m)) {
    ZpPoly h = frob[m / r];
    h.resize(std::max<std::size_t>(h.size(), 2), 0);
    h[1] = (h[1] + p - 1) % p;
    trim(h);
    if (h.empty()) return false;
    if (zp_gcd(f, h, p).size() != 1) return false;
  }
  return true;
}

}  // namespace

FiniteField FiniteField::make(std::uint64_t p, unsigned m, std::optional<std::vector<std::uint32_t>> modulus,
                              FieldLimits limits) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (m < 1) throw Error(ErrorCode::TooLarge, "extension degree must be positive");
  const std::uint64_t cap = std::min<std::uint64_t>(limits.max_q, std::uint64_t{1} << 31);
  const auto q = checked_pow(p, m, cap);
  if (!q) throw Error(ErrorCode::TooLarge, std::to_string(p) + "^" + std::to_string(m) + " exceeds field size limit");

  FiniteField F;
  F.p_ = static_cast<std::uint32_t>(p);
  F.m_ = m;
  F.q_ = static_cast<std::uint32_t>(*q);
  F.pow_p_.resize(m + 1);
  F.pow_p_[0] = 1;
  for (unsigned i = 1; i <= m; ++i) F.pow_p_[i] = F.pow_p_[i - 1] * F.p_;
  F.order_primes_ = prime_divisors(F.q_ - 1);

  const FieldElement x_class{m > 1 ? F.p_ : 0};

  if (modulus) {
    auto mod = *modulus;
    if (mod.size() == m) mod.push_back(1);
    if (mod.size() != m + 1 || mod.back() != 1) {
      throw Error(ErrorCode::Reducible, "modulus must be monic of degree " + std::to_string(m));
    }
    for (auto c : mod) {
      if (c >= p) throw Error(ErrorCode::ParseError, "modulus coefficient " + std::to_string(c) + " not reduced mod p");
    }
    if (!zp_irreducible(ZpPoly(mod.begin(), mod.end()), p)) {
      throw Error(ErrorCode::Reducible, "supplied modulus factors over F_" + std::to_string(p));
    }
    F.modulus_ = std::move(mod);
  } else if (m == 1) {
    F.modulus_ = {0, 1};
  } else {
    // Candidates ordered lexicographically with c0 the most significant key.
    const std::uint64_t count = F.q_;
    bool found = false;
    for (std::uint64_t idx = 0; idx < count && !found; ++idx) {
      std::vector<std::uint32_t> mod(m + 1, 0);
      std::uint64_t rest = idx;
      for (unsigned i = m; i-- > 0;) {
        mod[i] = static_cast<std::uint32_t>(rest % p);
        rest /= p;
      }
      mod[m] = 1;
      if (mod[0] == 0) continue;
      if (!zp_irreducible(ZpPoly(mod.begin(), mod.end()), p)) continue;
      F.modulus_ = mod;
      if (F.is_primitive(x_class)) found = true;
    }
    if (!found) throw Error(ErrorCode::NoPrimitiveModulus, "no primitive modulus found");
  }

  if (m > 1 && F.is_primitive(x_class)) {
    F.gamma_ = x_class;
  } else {
    bool found = false;
    for (std::uint64_t idx = 1; idx < F.q_ && !found; ++idx) {
      // Decode idx with c0 most significant so the scan is in lex order.
      std::uint32_t code = 0;
      std::uint64_t rest = idx;
      for (unsigned i = m; i-- > 0;) {
        code += static_cast<std::uint32_t>(rest % p) * F.pow_p_[i];
        rest /= p;
      }
      if (F.is_primitive(FieldElement{code})) {
        F.gamma_ = FieldElement{code};
        found = true;
      }
    }
    if (!found) throw Error(ErrorCode::NoPrimitiveModulus, "no primitive element found");
  }

  // Power sums of the modulus roots give Tr(t^i) via Newton's identities.
  F.basis_trace_.assign(m, 0);
  F.basis_trace_[0] = m % F.p_;
  for (unsigned k = 1; k < m; ++k) {
    std::uint64_t acc = static_cast<std::uint64_t>(k) % p * F.modulus_[m - k] % p;
    for (unsigned i = 1; i < k; ++i) acc = (acc + std::uint64_t{F.modulus_[m - i]} * F.basis_trace_[k - i]) % p;
    F.basis_trace_[k] = static_cast<std::uint32_t>((p - acc) % p);
  }

  if (F.q_ <= limits.table_limit) F.build_tables();
  return F;
}

void FiniteField::build_tables() {
  const std::uint32_t M = q_ - 1;
  exp_.assign(2 * static_cast<std::size_t>(M), 0);
  log_.assign(q_, UINT32_MAX);
  const bool gamma_is_x = m_ > 1 && gamma_.code == p_;
  FieldElement cur = one();
  for (std::uint32_t i = 0; i < M; ++i) {
    exp_[i] = cur.code;
    exp_[i + M] = cur.code;
    log_[cur.code] = i;
    if (gamma_is_x) {
      // Multiply by x: shift coordinates up, reduce the overflow digit.
      std::uint32_t top = cur.code / pow_p_[m_ - 1];
      std::uint32_t shifted = (cur.code % pow_p_[m_ - 1]) * p_;
      std::uint32_t code = 0;
      for (unsigned d = 0; d < m_; ++d) {
        const std::uint64_t digit = (shifted / pow_p_[d]) % p_;
        const std::uint64_t sub = std::uint64_t{top} * modulus_[d] % p_;
        code += static_cast<std::uint32_t>((digit + p_ - sub) % p_) * pow_p_[d];
      }
      cur = FieldElement{code};
    } else {
      cur = mul_slow(cur, gamma_);
    }
  }
  zech_.assign(M, kNoZech);
  for (std::uint32_t d = 0; d < M; ++d) {
    const FieldElement v = add_slow(one(), FieldElement{exp_[d]});
    zech_[d] = v.code == 0 ? kNoZech : log_[v.code];
  }
  abs_trace_.assign(q_, 0);
  for (std::uint32_t c = 0; c < q_; ++c) abs_trace_[c] = abs_trace_slow(FieldElement{c});
}

FieldElement FiniteField::from_int(std::int64_t n) const {
  return FieldElement{static_cast<std::uint32_t>(reduce_mod(n, p_))};
}

FieldElement FiniteField::from_coords(std::span<const std::uint32_t> c) const {
  if (c.size() > m_) throw Error(ErrorCode::ParseError, "too many coordinates for degree " + std::to_string(m_));
  std::uint32_t code = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] >= p_) throw Error(ErrorCode::ParseError, "coordinate " + std::to_string(c[i]) + " not reduced mod p");
    code += c[i] * pow_p_[i];
  }
  return FieldElement{code};
}

FieldElement FiniteField::from_code(std::uint64_t code) const {
  if (code >= q_) throw Error(ErrorCode::ParseError, "element code out of range");
  return FieldElement{static_cast<std::uint32_t>(code)};
}

std::vector<std::uint32_t> FiniteField::coords(FieldElement x) const {
  std::vector<std::uint32_t> out(m_);
  std::uint32_t c = x.code;
  for (unsigned i = 0; i < m_; ++i) {
    out[i] = c % p_;
    c /= p_;
  }
  return out;
}

bool FiniteField::lex_less(FieldElement a, FieldElement b) const {
  const auto ca = coords(a), cb = coords(b);
  return std::lexicographical_compare(ca.begin(), ca.end(), cb.begin(), cb.end());
}

FieldElement FiniteField::add_slow(FieldElement a, FieldElement b) const {
  if (m_ == 1) return FieldElement{static_cast<std::uint32_t>((std::uint64_t{a.code} + b.code) % p_)};
  if (p_ == 2) return FieldElement{a.code ^ b.code};
  std::uint32_t code = 0;
  for (unsigned i = 0; i < m_; ++i) {
    const std::uint32_t da = (a.code / pow_p_[i]) % p_, db = (b.code / pow_p_[i]) % p_;
    code += ((da + db) % p_) * pow_p_[i];
  }
  return FieldElement{code};
}

FieldElement FiniteField::add(FieldElement a, FieldElement b) const {
  if (m_ == 1 || p_ == 2 || !has_tables()) return add_slow(a, b);
  if (a.code == 0) return b;
  if (b.code == 0) return a;
  const std::uint32_t M = q_ - 1;
  const std::uint32_t la = log_[a.code], lb = log_[b.code];
  const std::uint32_t d = lb >= la ? lb - la : lb + M - la;
  const std::uint32_t z = zech_[d];
  if (z == kNoZech) return zero();
  return FieldElement{exp_[la + z]};
}

FieldElement FiniteField::neg(FieldElement a) const {
  if (p_ == 2) return a;
  std::uint32_t code = 0;
  for (unsigned i = 0; i < m_; ++i) {
    const std::uint32_t d = (a.code / pow_p_[i]) % p_;
    code += ((p_ - d) % p_) * pow_p_[i];
  }
  return FieldElement{code};
}

FieldElement FiniteField::sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }

FieldElement FiniteField::mul_slow(FieldElement a, FieldElement b) const {
  if (m_ == 1) return FieldElement{static_cast<std::uint32_t>(std::uint64_t{a.code} * b.code % p_)};
  const auto ca = coords(a), cb = coords(b);
  std::vector<std::uint64_t> prod(2 * m_ - 1, 0);
  for (unsigned i = 0; i < m_; ++i) {
    if (ca[i] == 0) continue;
    for (unsigned j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{ca[i]} * cb[j]) % p_;
  }
  for (std::size_t k = prod.size(); k-- > m_;) {
    const std::uint64_t c = prod[k];
    if (c == 0) continue;
    prod[k] = 0;
    for (unsigned i = 0; i < m_; ++i) {
      prod[k - m_ + i] = (prod[k - m_ + i] + (p_ - c) * modulus_[i]) % p_;
    }
  }
  std::uint32_t code = 0;
  for (unsigned i = 0; i < m_; ++i) code += static_cast<std::uint32_t>(prod[i]) * pow_p_[i];
  return FieldElement{code};
}

FieldElement FiniteField::mul(FieldElement a, FieldElement b) const {
  if (a.code == 0 || b.code == 0) return zero();
  if (!has_tables()) return mul_slow(a, b);
  return FieldElement{exp_[log_[a.code] + log_[b.code]]};
}

FieldElement FiniteField::pow_slow(FieldElement a, std::uint64_t e) const {
  FieldElement r = one();
  while (e > 0) {
    if (e & 1) r = mul_slow(r, a);
    a = mul_slow(a, a);
    e >>= 1;
  }
  return r;
}

FieldElement FiniteField::inv(FieldElement a) const {
  if (a.code == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  const std::uint32_t M = q_ - 1;
  if (!has_tables()) return pow_slow(a, M - 1);
  return FieldElement{exp_[M - log_[a.code]]};
}

FieldElement FiniteField::div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }

FieldElement FiniteField::pow(FieldElement a, std::int64_t e) const {
  if (a.code == 0) {
    if (e == 0) return one();
    if (e < 0) throw Error(ErrorCode::DivisionByZero, "negative power of zero");
    return zero();
  }
  const std::uint64_t M = q_ - 1;
  const std::uint64_t er = reduce_mod(e, M);
  if (!has_tables()) return pow_slow(a, er);
  return FieldElement{exp_[mul_mod(log_[a.code], er, M)]};
}

FieldElement FiniteField::gamma_pow(std::int64_t k) const {
  const std::uint64_t kr = reduce_mod(k, q_ - 1);
  if (has_tables()) return FieldElement{exp_[kr]};
  return pow_slow(gamma_, kr);
}

bool FiniteField::is_primitive(FieldElement x) const {
  if (x.code == 0) return false;
  const std::uint64_t M = q_ - 1;
  for (std::uint64_t r : order_primes_) {
    if (pow_slow(x, M / r) == one()) return false;
  }
  return true;
}

std::uint64_t FiniteField::element_order(FieldElement x) const {
  if (x.code == 0) throw Error(ErrorCode::ZeroArgument, "order of zero");
  std::uint64_t ord = q_ - 1;
  for (std::uint64_t r : order_primes_) {
    while (ord % r == 0 && pow(x, static_cast<std::int64_t>(ord / r)) == one()) ord /= r;
  }
  return ord;
}

std::uint32_t FiniteField::dlog_bsgs(FieldElement x) const {
  const std::uint64_t n = q_ - 1;
  const auto step = static_cast<std::uint64_t>(std::ceil(std::sqrt(static_cast<double>(n))));
  std::unordered_map<std::uint32_t, std::uint32_t> baby;
  FieldElement cur = one();
  for (std::uint64_t j = 0; j < step; ++j) {
    baby.emplace(cur.code, static_cast<std::uint32_t>(j));
    cur = mul_slow(cur, gamma_);
  }
  const FieldElement giant = pow_slow(pow_slow(gamma_, step), n - 1);
  FieldElement y = x;
  for (std::uint64_t i = 0; i <= step; ++i) {
    if (auto it = baby.find(y.code); it != baby.end()) {
      return static_cast<std::uint32_t>((i * step + it->second) % n);
    }
    y = mul_slow(y, giant);
  }
  throw Error(ErrorCode::ZeroArgument, "discrete log not found");
}

std::uint32_t FiniteField::dlog(FieldElement x) const {
  if (x.code == 0) throw Error(ErrorCode::ZeroArgument, "discrete log of zero");
  if (has_tables()) return log_[x.code];
  return dlog_bsgs(x);
}

std::uint32_t FiniteField::abs_trace_slow(FieldElement x) const {
  std::uint64_t acc = 0;
  std::uint32_t c = x.code;
  for (unsigned i = 0; i < m_; ++i) {
    acc += std::uint64_t{c % p_} * basis_trace_[i];
    c /= p_;
  }
  return static_cast<std::uint32_t>(acc % p_);
}

std::uint32_t FiniteField::abs_trace(FieldElement x) const {
  if (!abs_trace_.empty()) return abs_trace_[x.code];
  return abs_trace_slow(x);
}

FieldElement FiniteField::trace(FieldElement x, unsigned sub_degree) const {
  if (sub_degree == 0 || m_ % sub_degree != 0) {
    throw Error(ErrorCode::BadSubfield, std::to_string(sub_degree) + " does not divide " + std::to_string(m_));
  }
  const std::uint64_t frob = pow_p_[sub_degree];
  FieldElement acc = zero(), term = x;
  for (unsigned i = 0; i < m_ / sub_degree; ++i) {
    acc = add(acc, term);
    term = has_tables() ? pow(term, static_cast<std::int64_t>(frob)) : pow_slow(term, frob);
  }
  return acc;
}

std::vector<FieldElement> FiniteField::roots_of_unity(std::uint32_t n) const {
  if (n == 0 || (q_ - 1) % n != 0) {
    throw Error(ErrorCode::NotDivisor, std::to_string(n) + " does not divide q-1 = " + std::to_string(q_ - 1));
  }
  const std::uint32_t step = (q_ - 1) / n;
  std::vector<FieldElement> out;
  out.reserve(n);
  for (std::uint32_t i = 0; i < n; ++i) out.push_back(gamma_pow(static_cast<std::int64_t>(step) * i));
  return out;
}

std::string FiniteField::describe() const {
  std::ostringstream os;
  os << "q=" << p_;
  if (m_ > 1) {
    os << '^' << m_ << ";mod=";
    for (std::size_t i = 0; i < modulus_.size(); ++i) os << (i ? "," : "") << modulus_[i];
  }
  return os.str();
}

FiniteField parse_field(const std::string& literal, FieldLimits limits) {
  std::string s;
  for (char c : literal) {
    if (c != ' ') s.push_back(c);
  }
  auto fail = [&](const std::string& why) { return Error(ErrorCode::ParseError, "field literal '" + literal + "': " + why); };
  const auto semi = s.find(';');
  std::string head = s.substr(0, semi);
  if (head.rfind("q=", 0) == 0) head = head.substr(2);
  if (head.empty()) throw fail("missing q");

  std::uint64_t p = 0;
  unsigned m = 0;
  try {
    if (auto caret = head.find('^'); caret != std::string::npos) {
      p = std::stoull(head.substr(0, caret));
      m = static_cast<unsigned>(std::stoul(head.substr(caret + 1)));
    } else {
      const auto q = std::stoull(head);
      const auto pp = as_prime_power(q);
      if (!pp) throw Error(ErrorCode::NotPrime, std::to_string(q) + " is not a prime power");
      p = pp->first;
      m = pp->second;
    }
  } catch (const std::logic_error&) {
    throw fail("bad size");
  }

  std::optional<std::vector<std::uint32_t>> modulus;
  if (semi != std::string::npos) {
    std::string tail = s.substr(semi + 1);
    if (tail.rfind("mod=", 0) != 0) throw fail("expected mod=");
    tail = tail.substr(4);
    std::vector<std::uint32_t> coeffs;
    std::stringstream ss(tail);
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        coeffs.push_back(static_cast<std::uint32_t>(std::stoul(item)));
      } catch (const std::logic_error&) {
        throw fail("bad modulus coefficient '" + item + "'");
      }
    }
    modulus = std::move(coeffs);
  }
  return FiniteField::make(p, m, std::move(modulus), limits);
}

}  // namespace indexsum
