#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace indexsum {

/// Element of F_{p^m} in polynomial-basis coordinates, packed base p:
/// code = sum_i coords[i] * p^i with coords ascending in degree.
struct FieldElement {
  std::uint32_t code = 0;

  friend bool operator==(FieldElement, FieldElement) = default;
  friend auto operator<=>(FieldElement, FieldElement) = default;
};

struct FieldLimits {
  std::uint64_t max_q = std::uint64_t{1} << 20;
  /// Log/antilog, Zech and trace tables are built iff q <= table_limit.
  std::uint64_t table_limit = std::uint64_t{1} << 20;
};

/// A concrete F_{p^m}: fixed monic irreducible modulus, fixed primitive
/// element gamma, discrete-log tables. Immutable after construction.
class FiniteField {
 public:
  static constexpr std::uint32_t kNoZech = UINT32_MAX;

  /// Builds F_{p^m}. Without a modulus, picks the lexicographically smallest
  /// (coefficients compared low degree first) monic irreducible of degree m
  /// for which x is primitive; for m = 1 the modulus is x and gamma is the
  /// smallest primitive root mod p. A supplied modulus is checked for
  /// irreducibility; gamma is then x if primitive, else the lex-smallest
  /// primitive element. Accepts m or m + 1 modulus coefficients (trailing 1).
  static FiniteField make(std::uint64_t p, unsigned m,
                          std::optional<std::vector<std::uint32_t>> modulus = std::nullopt,
                          FieldLimits limits = {});

  std::uint32_t p() const { return p_; }
  unsigned m() const { return m_; }
  std::uint32_t q() const { return q_; }
  /// q - 1, the order of the multiplicative group.
  std::uint32_t order() const { return q_ - 1; }
  /// Modulus coefficients, ascending, length m + 1, last entry 1.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  FieldElement gamma() const { return gamma_; }
  bool has_tables() const { return !log_.empty(); }

  FieldElement zero() const { return {}; }
  FieldElement one() const { return {1}; }
  /// Integer n reduced into the prime subfield.
  FieldElement from_int(std::int64_t n) const;
  /// Rejects coordinates >= p or more than m of them (ParseError).
  FieldElement from_coords(std::span<const std::uint32_t> coords) const;
  FieldElement from_code(std::uint64_t code) const;
  std::vector<std::uint32_t> coords(FieldElement x) const;
  /// Lexicographic order on coordinates, low degree first.
  bool lex_less(FieldElement a, FieldElement b) const;
  bool in_prime_subfield(FieldElement x) const { return x.code < p_; }

  FieldElement add(FieldElement a, FieldElement b) const;
  FieldElement sub(FieldElement a, FieldElement b) const;
  FieldElement neg(FieldElement a) const;
  FieldElement mul(FieldElement a, FieldElement b) const;
  /// DivisionByZero on zero.
  FieldElement inv(FieldElement a) const;
  FieldElement div(FieldElement a, FieldElement b) const;
  /// Any integer exponent; negative exponents need a nonzero base
  /// (DivisionByZero). 0^0 = 1.
  FieldElement pow(FieldElement a, std::int64_t e) const;
  /// gamma^k for any integer k.
  FieldElement gamma_pow(std::int64_t k) const;

  /// Discrete log to base gamma in [0, q - 2]; ZeroArgument on zero. Uses the
  /// table when built, baby-step giant-step otherwise.
  std::uint32_t dlog(FieldElement x) const;

  /// Trace to the subfield of degree sub_degree (BadSubfield unless it
  /// divides m): sum_{i < m/d} x^{p^{d i}}.
  FieldElement trace(FieldElement x, unsigned sub_degree) const;
  /// Absolute trace to F_p as a residue in [0, p).
  std::uint32_t abs_trace(FieldElement x) const;

  /// [gamma^{(q-1) i / n} for i = 0..n-1]; NotDivisor unless n | q - 1.
  std::vector<FieldElement> roots_of_unity(std::uint32_t n) const;

  /// Multiplicative order of a nonzero element.
  std::uint64_t element_order(FieldElement x) const;

  /// Hot-loop tables; empty when has_tables() is false.
  /// exp has length 2(q - 1) so sums of two logs need no reduction.
  std::span<const std::uint32_t> exp_table() const { return exp_; }
  std::span<const std::uint32_t> log_table() const { return log_; }
  /// zech[d] = log(1 + gamma^d), or kNoZech when 1 + gamma^d = 0.
  std::span<const std::uint32_t> zech_table() const { return zech_; }
  std::span<const std::uint32_t> abs_trace_table() const { return abs_trace_; }

  /// "q=7", "q=3^2;mod=2,1,1"-style description.
  std::string describe() const;

 private:
  FiniteField() = default;

  FieldElement add_slow(FieldElement a, FieldElement b) const;
  FieldElement mul_slow(FieldElement a, FieldElement b) const;
  FieldElement pow_slow(FieldElement a, std::uint64_t e) const;
  std::uint32_t dlog_bsgs(FieldElement x) const;
  std::uint32_t abs_trace_slow(FieldElement x) const;
  bool is_primitive(FieldElement x) const;
  void build_tables();

  std::uint32_t p_ = 2;
  unsigned m_ = 1;
  std::uint32_t q_ = 2;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> pow_p_;        // p^i, i = 0..m
  std::vector<std::uint32_t> basis_trace_;  // Tr(t^i), i = 0..m-1
  std::vector<std::uint64_t> order_primes_;
  FieldElement gamma_{};

  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> zech_;
  std::vector<std::uint32_t> abs_trace_;
};

/// Parses "q=7", "q=3^2", "q=9", "q=3^2;mod=2,1,1".
FiniteField parse_field(const std::string& literal, FieldLimits limits = {});

}  // namespace indexsum
