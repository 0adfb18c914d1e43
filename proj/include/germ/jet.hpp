#pragma once

// Truncated bivariate power series ("jets") over a coefficient field.
//
// A Jet2 of order N stores the Taylor coefficients c_ij of x^i y^j for
// i + j <= N in sparse canonical form: no stored coefficient is zero.
// Each jet also carries a validity degree: coefficients of total degree above
// it are artifacts of truncation (they would have needed input data beyond
// degree N) and must not be compared. Arithmetic propagates the validity
// degree conservatively. Equality (operator==) ignores validity; use agree()
// to compare on the reliable range.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "germ/errors.hpp"
#include "germ/rational.hpp"

namespace germ {

inline constexpr int kDefaultOrder = 8;

struct Monomial {
  int x = 0;
  int y = 0;

  constexpr int degree() const { return x + y; }
  friend constexpr bool operator==(const Monomial&, const Monomial&) = default;
};

/// Canonical term order: descending total degree, then descending x-exponent.
struct GradedOrder {
  constexpr bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.degree() != b.degree()) return a.degree() > b.degree();
    return a.x > b.x;
  }
};

inline std::string to_string(const Monomial& m) {
  if (m.degree() == 0) return "1";
  std::string out;
  auto var = [&](char v, int e) {
    if (e == 0) return;
    if (!out.empty()) out += '*';
    out += v;
    if (e > 1) out += '^' + std::to_string(e);
  };
  var('x', m.x);
  var('y', m.y);
  return out;
}

template <typename Scalar>
class Jet2 {
 public:
  using scalar_type = Scalar;
  using Terms = std::map<Monomial, Scalar, GradedOrder>;

  explicit Jet2(int order = kDefaultOrder) : order_(order), valid_(order) {
    if (order < 0) throw GermError(ErrorCode::DegreeOverflow, "negative truncation order");
  }

  /// Builds a jet from raw terms. Zero coefficients are dropped; a term with
  /// degree above `order` raises DegreeOverflow. `valid` defaults to `order`.
  Jet2(int order, Terms terms, std::optional<int> valid = std::nullopt)
      : order_(order), valid_(valid.value_or(order)) {
    if (order < 0) throw GermError(ErrorCode::DegreeOverflow, "negative truncation order");
    valid_ = std::clamp(valid_, -1, order_);
    for (auto& [m, c] : terms) {
      if (m.x < 0 || m.y < 0)
        throw GermError(ErrorCode::DegreeOverflow, "negative exponent in " + to_string(m));
      if (m.degree() > order_)
        throw GermError(ErrorCode::DegreeOverflow,
                        "term " + to_string(m) + " exceeds order " + std::to_string(order_));
      if (!germ::is_zero(c)) terms_.emplace(m, std::move(c));
    }
  }

  static Jet2 constant(const Scalar& c, int order = kDefaultOrder) {
    return monomial(c, 0, 0, order);
  }
  static Jet2 monomial(const Scalar& c, int i, int j, int order = kDefaultOrder) {
    Terms t;
    t.emplace(Monomial{i, j}, c);
    return Jet2(order, std::move(t));
  }
  static Jet2 x(int order = kDefaultOrder) { return monomial(Scalar(1), 1, 0, order); }
  static Jet2 y(int order = kDefaultOrder) { return monomial(Scalar(1), 0, 1, order); }

  int order() const { return order_; }
  int valid_degree() const { return valid_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Scalar coeff(int i, int j) const {
    auto it = terms_.find(Monomial{i, j});
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  /// Lowest total degree present; order() + 1 for the zero jet.
  int lowest_degree() const {
    return terms_.empty() ? order_ + 1 : terms_.rbegin()->first.degree();
  }
  /// Highest total degree present; -1 for the zero jet.
  int degree() const { return terms_.empty() ? -1 : terms_.begin()->first.degree(); }

  Jet2 with_valid_degree(int valid) const {
    Jet2 out = *this;
    out.valid_ = std::clamp(valid, -1, order_);
    return out;
  }

  friend bool operator==(const Jet2& a, const Jet2& b) {
    return a.order_ == b.order_ && a.terms_ == b.terms_;
  }

 private:
  int order_;
  int valid_;
  Terms terms_;
};

using Jet = Jet2<Rational>;

namespace detail {

template <typename Scalar>
void require_same_order(const Jet2<Scalar>& a, const Jet2<Scalar>& b) {
  if (a.order() != b.order())
    throw GermError(ErrorCode::OrderMismatch,
                    "orders " + std::to_string(a.order()) + " and " + std::to_string(b.order()));
}

template <typename Scalar>
void accumulate(typename Jet2<Scalar>::Terms& terms, const Monomial& m, const Scalar& c) {
  auto [it, inserted] = terms.try_emplace(m, c);
  if (!inserted) it->second += c;
}

}  // namespace detail

template <typename Scalar>
Jet2<Scalar> add(const Jet2<Scalar>& a, const Jet2<Scalar>& b) {
  detail::require_same_order(a, b);
  auto terms = a.terms();
  for (const auto& [m, c] : b.terms()) detail::accumulate(terms, m, c);
  return Jet2<Scalar>(a.order(), std::move(terms), std::min(a.valid_degree(), b.valid_degree()));
}

template <typename Scalar>
Jet2<Scalar> scale(const Jet2<Scalar>& a, const Scalar& s) {
  typename Jet2<Scalar>::Terms terms;
  if (!is_zero(s))
    for (const auto& [m, c] : a.terms()) terms.emplace(m, Scalar(c * s));
  return Jet2<Scalar>(a.order(), std::move(terms), a.valid_degree());
}

template <typename Scalar>
Jet2<Scalar> sub(const Jet2<Scalar>& a, const Jet2<Scalar>& b) {
  return add(a, scale(b, Scalar(-1)));
}

/// Cauchy product; terms above the truncation order are discarded.
template <typename Scalar>
Jet2<Scalar> mul(const Jet2<Scalar>& a, const Jet2<Scalar>& b) {
  detail::require_same_order(a, b);
  const int n = a.order();
  typename Jet2<Scalar>::Terms terms;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      Monomial m{ma.x + mb.x, ma.y + mb.y};
      if (m.degree() > n) continue;
      detail::accumulate(terms, m, Scalar(ca * cb));
    }
  }
  // A coefficient of degree k of the product is exact as long as the factors
  // are exact up to k - ord(other factor).
  int valid = std::min({n, a.valid_degree() + b.lowest_degree(), b.valid_degree() + a.lowest_degree()});
  return Jet2<Scalar>(n, std::move(terms), valid);
}

/// Like mul, but raises DegreeOverflow instead of dropping a nonzero term.
template <typename Scalar>
Jet2<Scalar> mul_exact(const Jet2<Scalar>& a, const Jet2<Scalar>& b) {
  detail::require_same_order(a, b);
  if (!a.is_zero() && !b.is_zero() && a.degree() + b.degree() > a.order()) {
    // Top-degree forms multiply to a nonzero form, so the degree is exact.
    throw GermError(ErrorCode::DegreeOverflow,
                    "product of degree " + std::to_string(a.degree() + b.degree()) +
                        " exceeds order " + std::to_string(a.order()));
  }
  return mul(a, b);
}

template <typename Scalar>
Jet2<Scalar> operator+(const Jet2<Scalar>& a, const Jet2<Scalar>& b) { return add(a, b); }
template <typename Scalar>
Jet2<Scalar> operator-(const Jet2<Scalar>& a, const Jet2<Scalar>& b) { return sub(a, b); }
template <typename Scalar>
Jet2<Scalar> operator-(const Jet2<Scalar>& a) { return scale(a, Scalar(-1)); }
template <typename Scalar>
Jet2<Scalar> operator*(const Jet2<Scalar>& a, const Jet2<Scalar>& b) { return mul(a, b); }
template <typename Scalar>
Jet2<Scalar> operator*(const Scalar& s, const Jet2<Scalar>& a) { return scale(a, s); }

template <typename Scalar>
Jet2<Scalar> d_dx(const Jet2<Scalar>& a) {
  typename Jet2<Scalar>::Terms terms;
  for (const auto& [m, c] : a.terms())
    if (m.x > 0) terms.emplace(Monomial{m.x - 1, m.y}, Scalar(c * m.x));
  return Jet2<Scalar>(a.order(), std::move(terms), a.valid_degree() - 1);
}

template <typename Scalar>
Jet2<Scalar> d_dy(const Jet2<Scalar>& a) {
  typename Jet2<Scalar>::Terms terms;
  for (const auto& [m, c] : a.terms())
    if (m.y > 0) terms.emplace(Monomial{m.x, m.y - 1}, Scalar(c * m.y));
  return Jet2<Scalar>(a.order(), std::move(terms), a.valid_degree() - 1);
}

/// Antiderivative in x vanishing on the line x = 0. Never truncates: a term
/// that would land above the order raises DegreeOverflow.
template <typename Scalar>
Jet2<Scalar> int0_x(const Jet2<Scalar>& a) {
  typename Jet2<Scalar>::Terms terms;
  for (const auto& [m, c] : a.terms()) {
    Monomial up{m.x + 1, m.y};
    if (up.degree() > a.order())
      throw GermError(ErrorCode::DegreeOverflow,
                      "integrating " + to_string(m) + " exceeds order " + std::to_string(a.order()));
    terms.emplace(up, Scalar(c / Scalar(m.x + 1)));
  }
  return Jet2<Scalar>(a.order(), std::move(terms), a.valid_degree() + 1);
}

/// The part of `a` independent of x, i.e. a(0, y).
template <typename Scalar>
Jet2<Scalar> restrict_x0(const Jet2<Scalar>& a) {
  typename Jet2<Scalar>::Terms terms;
  for (const auto& [m, c] : a.terms())
    if (m.x == 0) terms.emplace(m, c);
  return Jet2<Scalar>(a.order(), std::move(terms), a.valid_degree());
}

/// Drops the coefficients above the validity degree.
template <typename Scalar>
Jet2<Scalar> truncate_to_valid(const Jet2<Scalar>& a) {
  typename Jet2<Scalar>::Terms terms;
  for (const auto& [m, c] : a.terms())
    if (m.degree() <= a.valid_degree()) terms.emplace(m, c);
  return Jet2<Scalar>(a.order(), std::move(terms), a.valid_degree());
}

/// f(u(x,y), v(x,y)) truncated to the common order. u and v must vanish at 0.
template <typename Scalar>
Jet2<Scalar> compose2(const Jet2<Scalar>& f, const Jet2<Scalar>& u, const Jet2<Scalar>& v) {
  detail::require_same_order(f, u);
  detail::require_same_order(f, v);
  if (!is_zero(u.coeff(0, 0)) || !is_zero(v.coeff(0, 0)))
    throw GermError(ErrorCode::NotAGerm, "substituted series must vanish at the origin");
  const int n = f.order();
  std::vector<Jet2<Scalar>> upow{Jet2<Scalar>::constant(Scalar(1), n)};
  std::vector<Jet2<Scalar>> vpow{Jet2<Scalar>::constant(Scalar(1), n)};
  for (int k = 1; k <= n; ++k) {
    upow.push_back(mul(upow.back(), u));
    vpow.push_back(mul(vpow.back(), v));
  }
  Jet2<Scalar> out(n);
  for (const auto& [m, c] : f.terms()) out = add(out, scale(mul(upow[m.x], vpow[m.y]), c));
  int valid = std::min({f.valid_degree(), u.valid_degree(), v.valid_degree()});
  return out.with_valid_degree(valid);
}

template <typename Scalar>
struct Quotient {
  Jet2<Scalar> value;
  bool unique = true;
};

/// Solves q = n * p for n by graded exact elimination.
///
/// The comparison window is W = min(valid(q), valid(p)). Unknowns are the
/// coefficients of n up to degree W - ord(p); for each degree d the
/// homogeneous part n_d solves  lead(p) * n_d = (q - n_<d * p)_{d + ord(p)},
/// a (d + ord(p) + 1) x (d + 1) linear system. Inconsistency anywhere in the
/// window raises NotDivisible. The quotient is valid up to W - ord(p).
template <typename Scalar>
Quotient<Scalar> divide(const Jet2<Scalar>& q, const Jet2<Scalar>& p) {
  detail::require_same_order(q, p);
  if (p.is_zero()) throw GermError(ErrorCode::ZeroDivisor, "division by the zero jet");
  const int n = q.order();
  const int ordp = p.lowest_degree();
  const int window = std::min(q.valid_degree(), p.valid_degree());
  const int top = window - ordp;

  Quotient<Scalar> result{Jet2<Scalar>(n), true};
  for (const auto& [m, c] : q.terms()) {
    if (m.degree() < ordp && m.degree() <= window)
      throw GermError(ErrorCode::NotDivisible,
                      "term " + to_string(m) + " lies below the divisor's order " + std::to_string(ordp));
  }
  if (top < 0) {
    result.unique = false;
    result.value = result.value.with_valid_degree(-1);
    return result;
  }

  typename Jet2<Scalar>::Terms quotient_terms;
  Jet2<Scalar> residual = q;
  for (int d = 0; d <= top; ++d) {
    const int k = d + ordp;
    const int rows = k + 1;
    const int cols = d + 1;
    // Row r <-> monomial x^(k-r) y^r, column s <-> x^(d-s) y^s.
    std::vector<std::vector<Scalar>> a(rows, std::vector<Scalar>(cols + 1, Scalar(0)));
    for (int s = 0; s < cols; ++s) {
      for (int t = 0; t <= ordp; ++t) {
        Scalar pc = p.coeff(ordp - t, t);
        if (is_zero(pc)) continue;
        a[s + t][s] += pc;
      }
    }
    for (int r = 0; r < rows; ++r) a[r][cols] = residual.coeff(k - r, r);

    // Gauss-Jordan, first nonzero pivot (exact arithmetic).
    std::vector<int> pivot_col_of_row;
    int row = 0;
    for (int col = 0; col < cols && row < rows; ++col) {
      int piv = -1;
      for (int r = row; r < rows; ++r)
        if (!is_zero(a[r][col])) { piv = r; break; }
      if (piv < 0) continue;
      std::swap(a[row], a[piv]);
      Scalar inv = Scalar(1) / a[row][col];
      for (int c = col; c <= cols; ++c) a[row][c] *= inv;
      for (int r = 0; r < rows; ++r) {
        if (r == row || is_zero(a[r][col])) continue;
        Scalar f = a[r][col];
        for (int c = col; c <= cols; ++c) a[r][c] -= f * a[row][c];
      }
      pivot_col_of_row.push_back(col);
      ++row;
    }
    for (int r = row; r < rows; ++r)
      if (!is_zero(a[r][cols]))
        throw GermError(ErrorCode::NotDivisible,
                        "inconsistent at degree " + std::to_string(k) + " of the dividend");
    if (row < cols) result.unique = false;

    typename Jet2<Scalar>::Terms part;
    for (int r = 0; r < row; ++r) {
      int s = pivot_col_of_row[r];
      if (!is_zero(a[r][cols])) part.emplace(Monomial{d - s, s}, a[r][cols]);
    }
    if (part.empty()) continue;
    Jet2<Scalar> piece(n, part);
    residual = sub(residual, mul(piece, p));
    for (auto& [m, c] : part) quotient_terms.emplace(m, c);
  }
  result.value = Jet2<Scalar>(n, std::move(quotient_terms), top);
  return result;
}

/// Floating-point evaluation, Horner in x nested inside Horner in y.
template <typename Scalar>
double eval(const Jet2<Scalar>& a, double x0, double y0) {
  const int n = a.order();
  std::vector<std::vector<double>> c(n + 1, std::vector<double>(n + 1, 0.0));
  for (const auto& [m, v] : a.terms()) c[m.y][m.x] = to_double(v);
  double acc = 0.0;
  for (int j = n; j >= 0; --j) {
    double row = 0.0;
    for (int i = n - j; i >= 0; --i) row = row * x0 + c[j][i];
    acc = acc * y0 + row;
  }
  return acc;
}

/// Exact value of d^(i+j) a / dx^i dy^j at the origin.
template <typename Scalar>
Scalar partial_at_origin(const Jet2<Scalar>& a, int i, int j) {
  Scalar f(1);
  for (int k = 2; k <= i; ++k) f *= k;
  for (int k = 2; k <= j; ++k) f *= k;
  return Scalar(a.coeff(i, j) * f);
}

template <typename Scalar>
Scalar value_at_origin(const Jet2<Scalar>& a) { return a.coeff(0, 0); }

/// First monomial (in canonical order, lowest degree first) where a and b
/// differ, restricted to degrees <= min(valid(a), valid(b)).
template <typename Scalar>
std::optional<Monomial> first_difference(const Jet2<Scalar>& a, const Jet2<Scalar>& b) {
  const int limit = std::min(a.valid_degree(), b.valid_degree());
  std::optional<Monomial> found;
  auto check = [&](const Monomial& m) {
    if (m.degree() > limit) return;
    if (a.coeff(m.x, m.y) == b.coeff(m.x, m.y)) return;
    if (!found || GradedOrder{}(*found, m)) found = m;
  };
  for (const auto& [m, c] : a.terms()) check(m);
  for (const auto& [m, c] : b.terms()) check(m);
  return found;
}

/// Equality on the common validity range.
template <typename Scalar>
bool agree(const Jet2<Scalar>& a, const Jet2<Scalar>& b) {
  return a.order() == b.order() && !first_difference(a, b).has_value();
}

/// Canonical text form, e.g. "1/4*x^4 + 1/2*x^2*y".
std::string to_string(const Jet& a);

}  // namespace germ
