#pragma once

/// Exact coefficients: finite sums of c_q * sqrt(q) with q squarefree and
/// c_q a Gaussian rational. Every value that appears in Young's orthogonal
/// form and in the associator normalization lives in this ring.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace altgt {

using integer = boost::multiprecision::cpp_int;
using rational = boost::multiprecision::cpp_rational;

inline std::string rational_to_string(const rational& q) {
  const integer num = boost::multiprecision::numerator(q);
  const integer den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

/// Parses "p" or "p/q" with decimal integers.
inline rational rational_from_string(const std::string& s) {
  const auto slash = s.find('/');
  auto parse_int = [&](const std::string& part) {
    if (part.empty()) throw std::invalid_argument("malformed rational: '" + s + "'");
    std::size_t start = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (start == part.size() ||
        !std::all_of(part.begin() + static_cast<std::ptrdiff_t>(start), part.end(),
                     [](char c) { return c >= '0' && c <= '9'; }))
      throw std::invalid_argument("malformed rational: '" + s + "'");
    return integer(part);
  };
  if (slash == std::string::npos) return rational(parse_int(s));
  const integer den = parse_int(s.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
  return rational(parse_int(s.substr(0, slash))) / den;
}

struct gaussian_rational {
  rational re;
  rational im;

  gaussian_rational() = default;
  gaussian_rational(rational r, rational i = 0) : re(std::move(r)), im(std::move(i)) {}

  [[nodiscard]] bool is_zero() const { return re == 0 && im == 0; }
  [[nodiscard]] gaussian_rational conj() const { return {re, -im}; }
  [[nodiscard]] rational norm() const { return re * re + im * im; }

  [[nodiscard]] gaussian_rational inverse() const {
    const rational n = norm();
    if (n == 0) throw std::domain_error("division by zero");
    return {re / n, -im / n};
  }

  friend gaussian_rational operator+(const gaussian_rational& a, const gaussian_rational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend gaussian_rational operator-(const gaussian_rational& a, const gaussian_rational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend gaussian_rational operator-(const gaussian_rational& a) { return {-a.re, -a.im}; }
  friend gaussian_rational operator*(const gaussian_rational& a, const gaussian_rational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(const gaussian_rational&, const gaussian_rational&) = default;
};

enum class fourth_root { plus_one, minus_one, plus_i, minus_i };

inline const char* to_string(fourth_root r) {
  switch (r) {
    case fourth_root::plus_one: return "1";
    case fourth_root::minus_one: return "-1";
    case fourth_root::plus_i: return "i";
    case fourth_root::minus_i: return "-i";
  }
  return "?";
}

namespace detail {

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("radicand overflow");
  return r;
}

/// Splits q = g^2 * s with s squarefree, by trial division.
inline std::pair<std::uint64_t, std::uint64_t> square_split(std::uint64_t q) {
  std::uint64_t g = 1;
  std::uint64_t s = 1;
  for (std::uint64_t p = 2; p * p <= q; ++p) {
    int e = 0;
    while (q % p == 0) {
      q /= p;
      ++e;
    }
    for (int k = 0; k < e / 2; ++k) g *= p;
    if (e % 2 == 1) s *= p;
  }
  s *= q;
  return {g, s};
}

}  // namespace detail

/// An element of Q(i)[sqrt(q) : q squarefree]. Terms are kept sorted by
/// radicand with no zero coefficients, so equality is structural.
class scalar {
 public:
  using term = std::pair<std::uint64_t, gaussian_rational>;

  scalar() = default;
  scalar(long long v) { push(1, gaussian_rational(rational(v))); }  // NOLINT
  scalar(rational v) { push(1, gaussian_rational(std::move(v))); }  // NOLINT
  scalar(gaussian_rational v) { push(1, std::move(v)); }            // NOLINT

  /// c * sqrt(radicand); the radicand is square-reduced.
  static scalar radical(const gaussian_rational& c, std::uint64_t radicand) {
    if (radicand == 0) return {};
    const auto [g, s] = detail::square_split(radicand);
    scalar out;
    out.push(s, c * gaussian_rational(rational(static_cast<long long>(g))));
    return out;
  }

  static scalar i() { return scalar(gaussian_rational(0, 1)); }

  /// Builds from arbitrary (radicand, coefficient) pairs; radicands must be
  /// positive but need not be squarefree.
  static scalar from_terms(const std::vector<term>& terms) {
    scalar out;
    for (const auto& [q, c] : terms) {
      if (q == 0) throw std::invalid_argument("radicand must be positive");
      out = out + radical(c, q);
    }
    return out;
  }

  [[nodiscard]] const std::vector<term>& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] bool is_real() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const term& t) { return t.second.im == 0; });
  }
  /// True when the value is a Gaussian rational (no irrational radicals).
  [[nodiscard]] bool is_gaussian_rational() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 1);
  }
  [[nodiscard]] gaussian_rational gaussian_part() const {
    if (!terms_.empty() && terms_[0].first == 1) return terms_[0].second;
    return {};
  }

  [[nodiscard]] scalar conj() const {
    scalar out = *this;
    for (auto& t : out.terms_) t.second = t.second.conj();
    return out;
  }

  /// Inverse of a single-term value c*sqrt(q): conj(c) sqrt(q) / (|c|^2 q).
  [[nodiscard]] scalar inverse() const {
    if (terms_.empty()) throw std::domain_error("division by zero");
    if (terms_.size() != 1) throw std::domain_error("inverse of a multi-term scalar is not supported");
    const auto& [q, c] = terms_[0];
    const gaussian_rational inv = c.inverse() * gaussian_rational(rational(1, static_cast<long long>(q)));
    scalar out;
    out.push(q, inv);
    return out;
  }

  [[nodiscard]] std::optional<fourth_root> as_fourth_root() const {
    if (terms_.size() != 1 || terms_[0].first != 1) return std::nullopt;
    const auto& c = terms_[0].second;
    if (c.im == 0 && c.re == 1) return fourth_root::plus_one;
    if (c.im == 0 && c.re == -1) return fourth_root::minus_one;
    if (c.re == 0 && c.im == 1) return fourth_root::plus_i;
    if (c.re == 0 && c.im == -1) return fourth_root::minus_i;
    return std::nullopt;
  }

  friend scalar operator+(const scalar& a, const scalar& b) {
    scalar out;
    out.terms_.reserve(a.terms_.size() + b.terms_.size());
    auto ia = a.terms_.begin();
    auto ib = b.terms_.begin();
    while (ia != a.terms_.end() || ib != b.terms_.end()) {
      if (ib == b.terms_.end() || (ia != a.terms_.end() && ia->first < ib->first)) {
        out.terms_.push_back(*ia++);
      } else if (ia == a.terms_.end() || ib->first < ia->first) {
        out.terms_.push_back(*ib++);
      } else {
        gaussian_rational c = ia->second + ib->second;
        if (!c.is_zero()) out.terms_.emplace_back(ia->first, std::move(c));
        ++ia;
        ++ib;
      }
    }
    return out;
  }

  friend scalar operator-(const scalar& a) {
    scalar out = a;
    for (auto& t : out.terms_) t.second = -t.second;
    return out;
  }

  friend scalar operator-(const scalar& a, const scalar& b) { return a + (-b); }

  // sqrt(q1) sqrt(q2) = g sqrt(q1 q2 / g^2) with g = gcd(q1, q2), valid
  // because both radicands are squarefree.
  friend scalar operator*(const scalar& a, const scalar& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<term> raw;
    raw.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& [qa, ca] : a.terms_) {
      for (const auto& [qb, cb] : b.terms_) {
        const std::uint64_t g = std::gcd(qa, qb);
        const std::uint64_t q = detail::checked_mul(qa / g, qb / g);
        raw.emplace_back(q, ca * cb * gaussian_rational(rational(static_cast<long long>(g))));
      }
    }
    std::sort(raw.begin(), raw.end(), [](const term& x, const term& y) { return x.first < y.first; });
    scalar out;
    for (auto& t : raw) {
      if (!out.terms_.empty() && out.terms_.back().first == t.first) {
        out.terms_.back().second = out.terms_.back().second + t.second;
        if (out.terms_.back().second.is_zero()) out.terms_.pop_back();
      } else if (!t.second.is_zero()) {
        out.terms_.push_back(std::move(t));
      }
    }
    return out;
  }

  scalar& operator+=(const scalar& b) { return *this = *this + b; }
  scalar& operator-=(const scalar& b) { return *this = *this - b; }
  scalar& operator*=(const scalar& b) { return *this = *this * b; }

  friend bool operator==(const scalar&, const scalar&) = default;

 private:
  void push(std::uint64_t q, gaussian_rational c) {
    if (!c.is_zero()) terms_.emplace_back(q, std::move(c));
  }

  std::vector<term> terms_;
};

/// sqrt(a/b) = sqrt(ab) / b, with sqrt(ab) square-reduced.
inline scalar sqrt_rational(const rational& q) {
  if (q < 0) throw std::domain_error("square root of a negative rational");
  if (q == 0) return {};
  const integer num = boost::multiprecision::numerator(q);
  const integer den = boost::multiprecision::denominator(q);
  const integer prod = num * den;
  if (prod > integer(std::numeric_limits<std::uint64_t>::max()))
    throw std::overflow_error("radicand overflow");
  const auto radicand = prod.convert_to<std::uint64_t>();
  return scalar::radical(gaussian_rational(rational(integer(1), den)), radicand);
}

inline scalar from_fourth_root(fourth_root r) {
  switch (r) {
    case fourth_root::plus_one: return scalar(1);
    case fourth_root::minus_one: return scalar(-1);
    case fourth_root::plus_i: return scalar::i();
    case fourth_root::minus_i: return -scalar::i();
  }
  return {};
}

/// i^k for any integer k.
inline scalar i_power(int k) {
  static const fourth_root cycle[4] = {fourth_root::plus_one, fourth_root::plus_i, fourth_root::minus_one,
                                       fourth_root::minus_i};
  return from_fourth_root(cycle[((k % 4) + 4) % 4]);
}

}  // namespace altgt
