#pragma once

/**
 * @file scalar.hpp
 * @brief Exact scalars for Hecke algebra computations.
 *
 * Two ground rings are provided:
 *  - LaurentScalar: Z[q, q^-1], used when q is an indeterminate.
 *  - CyclotomicScalar: Q[q] / Phi_p(q), i.e. q a primitive p-th root of unity.
 *
 * Both are immutable values. Ring descriptors (GenericRing, CyclotomicRing)
 * let the module code be written once over either scalar type.
 */

#include <algorithm>
#include <cctype>
#include <concepts>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hecke {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

namespace detail {

// Dense polynomial helpers. Index = exponent; trailing zeros are trimmed.
template <class C>
void trim(std::vector<C>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

template <class C>
std::vector<C> poly_mul(const std::vector<C>& a, const std::vector<C>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<C> out(a.size() + b.size() - 1, C(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

/// Remainder of `a` modulo a monic integer polynomial.
template <class C>
void reduce_monic(std::vector<C>& a, const std::vector<Integer>& monic) {
  const std::size_t deg = monic.size() - 1;
  trim(a);
  while (a.size() > deg) {
    const std::size_t shift = a.size() - 1 - deg;
    const C lead = a.back();
    for (std::size_t k = 0; k <= deg; ++k) a[shift + k] -= lead * C(monic[k]);
    trim(a);
  }
}

/// Exact quotient of `a` by a monic integer polynomial; throws if not exact.
inline std::vector<Integer> exact_div_monic(std::vector<Integer> a, const std::vector<Integer>& monic) {
  const std::size_t deg = monic.size() - 1;
  trim(a);
  if (a.size() <= deg) throw std::logic_error("exact_div_monic: degree too small");
  std::vector<Integer> quot(a.size() - deg, Integer(0));
  while (a.size() > deg) {
    const std::size_t shift = a.size() - 1 - deg;
    const Integer lead = a.back();
    quot[shift] = lead;
    for (std::size_t k = 0; k <= deg; ++k) a[shift + k] -= lead * monic[k];
    trim(a);
  }
  if (!a.empty()) throw std::logic_error("exact_div_monic: nonzero remainder");
  return quot;
}

inline std::string rational_str(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

/// Renders sum c_e q^e in increasing exponent order, e.g. "-1 + q^2 - q^3".
template <class Coeff>
std::string render_terms(const std::vector<std::pair<int, Coeff>>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms) {
    const bool negative = c < 0;
    const Coeff mag = negative ? Coeff(-c) : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string coeff;
    if (mag != 1 || e == 0) {
      std::ostringstream os;
      os << mag;
      coeff = os.str();
      if (coeff.find('/') != std::string::npos) coeff = "(" + coeff + ")";
    }
    out += coeff;
    if (e == 1) {
      out += "q";
    } else if (e != 0) {
      out += "q^" + std::to_string(e);
    }
  }
  return out;
}

/// Parses the grammar produced by render_terms. Coefficients may be
/// integers or parenthesised fractions "(a/b)".
inline std::vector<std::pair<int, Rational>> parse_terms(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw std::invalid_argument("empty scalar expression");
  std::vector<std::pair<int, Rational>> out;
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("cannot parse scalar '" + std::string(text) + "': " + why);
  };
  auto read_int = [&](std::size_t& p) {
    const std::size_t start = p;
    if (p < s.size() && (s[p] == '-' || s[p] == '+')) ++p;
    while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
    if (p == start || (p == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start])))) fail("expected integer");
    return s.substr(start, p - start);
  };
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (!out.empty()) {
      fail("expected '+' or '-'");
    }
    Rational coeff(1);
    bool have_coeff = false;
    if (pos < s.size() && s[pos] == '(') {
      const std::size_t close = s.find(')', pos);
      if (close == std::string::npos) fail("unbalanced parenthesis");
      const std::string frac = s.substr(pos + 1, close - pos - 1);
      const std::size_t slash = frac.find('/');
      if (slash == std::string::npos) {
        coeff = Rational(Integer(frac));
      } else {
        coeff = Rational(Integer(frac.substr(0, slash)), Integer(frac.substr(slash + 1)));
      }
      pos = close + 1;
      have_coeff = true;
    } else if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      coeff = Rational(Integer(read_int(pos)));
      have_coeff = true;
    }
    int exponent = 0;
    if (pos < s.size() && s[pos] == 'q') {
      ++pos;
      exponent = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        exponent = std::stoi(read_int(pos));
      }
    } else if (!have_coeff) {
      fail("expected coefficient or q");
    }
    out.emplace_back(exponent, sign * coeff);
  }
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// LaurentScalar
// ---------------------------------------------------------------------------

/// Integer Laurent polynomial in q. Zero coefficients are never stored.
class LaurentScalar {
 public:
  LaurentScalar() = default;
  LaurentScalar(long long constant) { add_term(0, Integer(constant)); }  // NOLINT(implicit)
  LaurentScalar(const Integer& constant) { add_term(0, constant); }     // NOLINT(implicit)

  static LaurentScalar monomial(const Integer& coeff, int exponent) {
    LaurentScalar out;
    out.add_term(exponent, coeff);
    return out;
  }
  static LaurentScalar q(int exponent = 1) { return monomial(1, exponent); }
  /// (-q)^k for any integer k.
  static LaurentScalar neg_q_power(int k) { return monomial((k % 2 == 0) ? 1 : -1, k); }

  const std::map<int, Integer>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Integer coefficient(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Integer(0) : it->second;
  }
  int min_exponent() const { return terms_.empty() ? 0 : terms_.begin()->first; }
  int max_exponent() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

  /// Units of Z[q, q^-1] are exactly +-q^k.
  bool is_unit() const noexcept {
    return terms_.size() == 1 && (terms_.begin()->second == 1 || terms_.begin()->second == -1);
  }
  LaurentScalar unit_inverse() const {
    if (!is_unit()) throw std::domain_error("LaurentScalar: " + to_string() + " is not a unit");
    return monomial(terms_.begin()->second, -terms_.begin()->first);
  }

  /// Substitutes a rational value for q.
  Rational evaluate(const Rational& at) const {
    Rational sum(0);
    for (const auto& [e, c] : terms_) {
      Rational power(1);
      const Rational base = e >= 0 ? at : Rational(1) / at;
      for (int k = 0; k < std::abs(e); ++k) power *= base;
      sum += Rational(c) * power;
    }
    return sum;
  }

  LaurentScalar operator-() const {
    LaurentScalar out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
  }
  LaurentScalar& operator+=(const LaurentScalar& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  LaurentScalar& operator-=(const LaurentScalar& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  LaurentScalar& operator*=(const LaurentScalar& o) { return *this = *this * o; }

  friend LaurentScalar operator+(LaurentScalar a, const LaurentScalar& b) { return a += b; }
  friend LaurentScalar operator-(LaurentScalar a, const LaurentScalar& b) { return a -= b; }
  friend LaurentScalar operator*(const LaurentScalar& a, const LaurentScalar& b) {
    LaurentScalar out;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
    return out;
  }
  friend bool operator==(const LaurentScalar&, const LaurentScalar&) = default;

  std::string to_string() const {
    std::vector<std::pair<int, Integer>> v(terms_.begin(), terms_.end());
    return detail::render_terms(v);
  }
  static LaurentScalar parse(std::string_view text) {
    LaurentScalar out;
    for (const auto& [e, c] : detail::parse_terms(text)) {
      if (denominator(c) != 1) throw std::invalid_argument("LaurentScalar coefficients must be integers");
      out.add_term(e, numerator(c));
    }
    return out;
  }
  friend std::ostream& operator<<(std::ostream& os, const LaurentScalar& x) { return os << x.to_string(); }

 private:
  void add_term(int exponent, const Integer& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(exponent, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  std::map<int, Integer> terms_;
};

// ---------------------------------------------------------------------------
// Cyclotomic polynomials
// ---------------------------------------------------------------------------

/// Coefficients of Phi_n, constant term first. Memoized; thread-safe.
inline const std::vector<Integer>& cyclotomic_coefficients(int n) {
  if (n < 1) throw std::domain_error("cyclotomic polynomial needs n >= 1, got " + std::to_string(n));
  static std::mutex mutex;
  static std::map<int, std::vector<Integer>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  // q^n - 1 divided by Phi_d for every proper divisor d of n.
  std::vector<Integer> poly(n + 1, Integer(0));
  poly[0] = -1;
  poly[n] = 1;
  for (int d = 1; d < n; ++d)
    if (n % d == 0) poly = detail::exact_div_monic(std::move(poly), cyclotomic_coefficients(d));
  std::lock_guard lock(mutex);
  return cache.try_emplace(n, std::move(poly)).first->second;
}

inline LaurentScalar cyclotomic_polynomial(int p) {
  if (p < 2) throw std::domain_error("cyclotomic_polynomial: p must be >= 2, got " + std::to_string(p));
  LaurentScalar out;
  const auto& c = cyclotomic_coefficients(p);
  for (std::size_t e = 0; e < c.size(); ++e) out += LaurentScalar::monomial(c[e], static_cast<int>(e));
  return out;
}

// ---------------------------------------------------------------------------
// CyclotomicScalar
// ---------------------------------------------------------------------------

/// Element of Q(zeta_p), stored as the reduced residue modulo Phi_p.
class CyclotomicScalar {
 public:
  /// Zero of Q(zeta_p).
  explicit CyclotomicScalar(int p) : p_(p) { check_order(p); }
  CyclotomicScalar(int p, const Rational& constant) : p_(p) {
    check_order(p);
    if (constant != 0) coeffs_.push_back(constant);
  }
  /// From a coefficient list (constant term first); reduced on entry.
  CyclotomicScalar(int p, std::vector<Rational> coeffs) : p_(p), coeffs_(std::move(coeffs)) {
    check_order(p);
    detail::reduce_monic(coeffs_, cyclotomic_coefficients(p_));
  }

  static CyclotomicScalar q_power(int p, int k) {
    const int e = ((k % p) + p) % p;
    std::vector<Rational> c(e + 1, Rational(0));
    c[e] = 1;
    return CyclotomicScalar(p, std::move(c));
  }

  int order() const noexcept { return p_; }
  int degree() const { return static_cast<int>(cyclotomic_coefficients(p_).size()) - 1; }
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  CyclotomicScalar operator-() const {
    CyclotomicScalar out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
  }
  CyclotomicScalar& operator+=(const CyclotomicScalar& o) {
    same_field(o);
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    detail::trim(coeffs_);
    return *this;
  }
  CyclotomicScalar& operator-=(const CyclotomicScalar& o) { return *this += -o; }
  CyclotomicScalar& operator*=(const CyclotomicScalar& o) { return *this = *this * o; }

  friend CyclotomicScalar operator+(CyclotomicScalar a, const CyclotomicScalar& b) { return a += b; }
  friend CyclotomicScalar operator-(CyclotomicScalar a, const CyclotomicScalar& b) { return a -= b; }
  friend CyclotomicScalar operator*(const CyclotomicScalar& a, const CyclotomicScalar& b) {
    a.same_field(b);
    return CyclotomicScalar(a.p_, detail::poly_mul(a.coeffs_, b.coeffs_));
  }
  friend CyclotomicScalar operator/(const CyclotomicScalar& a, const CyclotomicScalar& b) { return a * b.inverse(); }
  friend bool operator==(const CyclotomicScalar& a, const CyclotomicScalar& b) {
    return a.p_ == b.p_ && a.coeffs_ == b.coeffs_;
  }

  /// Multiplicative inverse via the extended Euclidean algorithm in Q[q].
  CyclotomicScalar inverse() const {
    if (is_zero()) throw std::domain_error("CyclotomicScalar: division by zero");
    using Poly = std::vector<Rational>;
    const auto& phi = cyclotomic_coefficients(p_);
    Poly r0(phi.begin(), phi.end()), r1 = coeffs_;
    Poly s0, s1{Rational(1)};  // Bezout coefficients of the element
    while (!r1.empty()) {
      // r0 = quot * r1 + rem
      Poly rem = r0, quot(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 0, Rational(0));
      while (!rem.empty() && rem.size() >= r1.size()) {
        const std::size_t shift = rem.size() - r1.size();
        const Rational f = rem.back() / r1.back();
        quot[shift] = f;
        for (std::size_t k = 0; k < r1.size(); ++k) rem[shift + k] -= f * r1[k];
        detail::trim(rem);
      }
      detail::trim(quot);
      Poly qs = detail::poly_mul(quot, s1), s2 = s0;
      if (s2.size() < qs.size()) s2.resize(qs.size(), Rational(0));
      for (std::size_t k = 0; k < qs.size(); ++k) s2[k] -= qs[k];
      detail::trim(s2);
      r0 = std::move(r1);
      r1 = std::move(rem);
      s0 = std::move(s1);
      s1 = std::move(s2);
    }
    // r0 is a nonzero constant since Phi_p is irreducible.
    if (r0.size() != 1) throw std::logic_error("CyclotomicScalar: gcd with Phi_p is not constant");
    for (auto& c : s0) c /= r0[0];
    return CyclotomicScalar(p_, std::move(s0));
  }

  std::string to_string() const {
    std::vector<std::pair<int, Rational>> v;
    for (std::size_t e = 0; e < coeffs_.size(); ++e)
      if (coeffs_[e] != 0) v.emplace_back(static_cast<int>(e), coeffs_[e]);
    return detail::render_terms(v);
  }
  static CyclotomicScalar parse(std::string_view text, int p) {
    std::vector<Rational> c(p, Rational(0));
    for (const auto& [e, coeff] : detail::parse_terms(text)) c[((e % p) + p) % p] += coeff;
    return CyclotomicScalar(p, std::move(c));
  }
  friend std::ostream& operator<<(std::ostream& os, const CyclotomicScalar& x) { return os << x.to_string(); }

 private:
  static void check_order(int p) {
    if (p < 1) throw std::domain_error("CyclotomicScalar: invalid root order " + std::to_string(p));
  }
  void same_field(const CyclotomicScalar& o) const {
    if (p_ != o.p_)
      throw std::domain_error("CyclotomicScalar: mixing p=" + std::to_string(p_) + " with p=" + std::to_string(o.p_));
  }

  int p_;
  std::vector<Rational> coeffs_;
};

/// Image of x under q -> primitive p-th root of unity.
inline CyclotomicScalar specialize(const LaurentScalar& x, int p) {
  if (p < 3) throw std::domain_error("specialize: p must be >= 3, got " + std::to_string(p));
  std::vector<Rational> c(p, Rational(0));
  for (const auto& [e, coeff] : x.terms()) c[((e % p) + p) % p] += Rational(coeff);
  return CyclotomicScalar(p, std::move(c));
}

// ---------------------------------------------------------------------------
// Ring descriptors and the runtime domain tag
// ---------------------------------------------------------------------------

/// q is an indeterminate; scalars are Laurent polynomials.
struct GenericRing {
  using value_type = LaurentScalar;
  value_type zero() const { return {}; }
  value_type one() const { return 1; }
  value_type from_int(long long c) const { return c; }
  value_type q_power(int k) const { return LaurentScalar::q(k); }
  value_type from_laurent(const LaurentScalar& x) const { return x; }
  std::string describe() const { return "generic"; }
};

/// q is a primitive p-th root of unity, p >= 3.
struct CyclotomicRing {
  using value_type = CyclotomicScalar;
  explicit CyclotomicRing(int order) : p(order) {
    if (p < 3) throw std::domain_error("root of unity order must be >= 3, got " + std::to_string(p));
  }
  value_type zero() const { return CyclotomicScalar(p); }
  value_type one() const { return CyclotomicScalar(p, Rational(1)); }
  value_type from_int(long long c) const { return CyclotomicScalar(p, Rational(c)); }
  value_type q_power(int k) const { return CyclotomicScalar::q_power(p, k); }
  value_type from_laurent(const LaurentScalar& x) const { return specialize(x, p); }
  std::string describe() const { return "root-of-unity p=" + std::to_string(p); }

  int p;
};

template <class R>
concept ScalarRing = requires(const R r, const typename R::value_type& a, const LaurentScalar& x) {
  typename R::value_type;
  { r.zero() } -> std::same_as<typename R::value_type>;
  { r.one() } -> std::same_as<typename R::value_type>;
  { r.from_int(1) } -> std::same_as<typename R::value_type>;
  { r.q_power(1) } -> std::same_as<typename R::value_type>;
  { r.from_laurent(x) } -> std::same_as<typename R::value_type>;
  { a + a } -> std::same_as<typename R::value_type>;
  { a * a } -> std::same_as<typename R::value_type>;
  { -a } -> std::same_as<typename R::value_type>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.to_string() } -> std::convertible_to<std::string>;
};

/// Runtime selection of the ground ring (used by the CLI).
class ScalarDomain {
 public:
  static ScalarDomain generic() { return ScalarDomain(std::nullopt); }
  static ScalarDomain root_of_unity(int p) {
    if (p < 3) throw std::domain_error("p must be >= 3, got " + std::to_string(p));
    return ScalarDomain(p);
  }

  bool is_generic() const noexcept { return !p_; }
  int order() const {
    if (!p_) throw std::logic_error("generic domain has no root order");
    return *p_;
  }
  std::string describe() const { return p_ ? CyclotomicRing(*p_).describe() : GenericRing{}.describe(); }
  friend bool operator==(const ScalarDomain&, const ScalarDomain&) = default;

  /// Calls f(GenericRing) or f(CyclotomicRing) according to the tag.
  template <class F>
  decltype(auto) visit(F&& f) const {
    if (p_) return std::forward<F>(f)(CyclotomicRing(*p_));
    return std::forward<F>(f)(GenericRing{});
  }

 private:
  explicit ScalarDomain(std::optional<int> p) : p_(p) {}
  std::optional<int> p_;
};

}  // namespace hecke
