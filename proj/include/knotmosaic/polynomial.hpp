#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace knotmosaic {

/// Laurent polynomial with 64-bit integer coefficients, stored densely from
/// the lowest exponent. The zero polynomial has no coefficients.
class Laurent {
 public:
  Laurent() = default;
  Laurent(std::int64_t c) : Laurent(c, 0) {}  // NOLINT implicit
  Laurent(std::int64_t c, int exponent);

  static Laurent monomial(std::int64_t c, int exponent) { return Laurent(c, exponent); }

  bool is_zero() const { return coeffs_.empty(); }
  int low() const { return low_; }
  int high() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  std::int64_t coeff(int exponent) const;
  /// Nonzero terms as (coefficient, exponent), ascending.
  std::vector<std::pair<std::int64_t, int>> terms() const;

  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  Laurent& operator*=(const Laurent& o);
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  Laurent operator-() const;

  /// Multiplies by x^k.
  Laurent shifted(int k) const;
  /// Substitutes x -> x^-1.
  Laurent reciprocal() const;
  /// Exact division; throws std::domain_error when `d` does not divide.
  Laurent divide_exact(const Laurent& d) const;
  /// Replaces x^e by x^(e/k); throws when some exponent is not a multiple of k.
  Laurent compress_exponents(int k) const;
  /// Replaces x^e by x^(e*k); k may be negative.
  Laurent scale_exponents(int k) const;
  /// Value at an integer point (x must be +-1 when negative exponents occur).
  std::int64_t evaluate(std::int64_t x) const;

  /// Ascending "c:e" pairs joined by ';'. Zero serializes as "0:0".
  std::string to_string() const;
  static Laurent parse(std::string_view text);

  friend bool operator==(const Laurent&, const Laurent&) = default;
  /// Compares serializations, so the order matches the text form.
  friend bool operator<(const Laurent& a, const Laurent& b) { return a.to_string() < b.to_string(); }

 private:
  void trim();
  int low_ = 0;
  std::vector<std::int64_t> coeffs_;
};

}  // namespace knotmosaic
