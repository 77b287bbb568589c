#include "knotmosaic/polynomial.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace knotmosaic {

Laurent::Laurent(std::int64_t c, int exponent) {
  if (c != 0) {
    low_ = exponent;
    coeffs_.push_back(c);
  }
}

std::int64_t Laurent::coeff(int exponent) const {
  if (is_zero() || exponent < low_ || exponent > high()) return 0;
  return coeffs_[exponent - low_];
}

std::vector<std::pair<std::int64_t, int>> Laurent::terms() const {
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) out.emplace_back(coeffs_[i], low_ + static_cast<int>(i));
  return out;
}

void Laurent::trim() {
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (lead == coeffs_.size()) {
    coeffs_.clear();
    low_ = 0;
    return;
  }
  while (coeffs_.back() == 0) coeffs_.pop_back();
  if (lead) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
    low_ += static_cast<int>(lead);
  }
}

Laurent& Laurent::operator+=(const Laurent& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const int lo = std::min(low_, o.low_);
  const int hi = std::max(high(), o.high());
  std::vector<std::int64_t> out(static_cast<std::size_t>(hi - lo + 1), 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[low_ - lo + i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) out[o.low_ - lo + i] += o.coeffs_[i];
  low_ = lo;
  coeffs_ = std::move(out);
  trim();
  return *this;
}

Laurent Laurent::operator-() const {
  Laurent r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Laurent& Laurent::operator-=(const Laurent& o) { return *this += -o; }

Laurent operator*(const Laurent& a, const Laurent& b) {
  if (a.is_zero() || b.is_zero()) return {};
  Laurent r;
  r.low_ = a.low_ + b.low_;
  r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  r.trim();
  return r;
}

Laurent& Laurent::operator*=(const Laurent& o) { return *this = *this * o; }

Laurent Laurent::shifted(int k) const {
  Laurent r = *this;
  if (!r.is_zero()) r.low_ += k;
  return r;
}

Laurent Laurent::reciprocal() const {
  if (is_zero()) return {};
  Laurent r;
  r.low_ = -high();
  r.coeffs_.assign(coeffs_.rbegin(), coeffs_.rend());
  return r;
}

Laurent Laurent::divide_exact(const Laurent& d) const {
  if (d.is_zero()) throw std::domain_error("division by zero polynomial");
  if (is_zero()) return {};
  std::vector<std::int64_t> rem = coeffs_;
  const std::size_t dn = d.coeffs_.size();
  if (rem.size() < dn) throw std::domain_error("inexact polynomial division");
  std::vector<std::int64_t> q(rem.size() - dn + 1, 0);
  const std::int64_t lead = d.coeffs_.back();
  for (std::size_t k = q.size(); k-- > 0;) {
    const std::int64_t top = rem[k + dn - 1];
    if (top % lead != 0) throw std::domain_error("inexact polynomial division");
    q[k] = top / lead;
    if (q[k] == 0) continue;
    for (std::size_t j = 0; j < dn; ++j) rem[k + j] -= q[k] * d.coeffs_[j];
  }
  for (std::int64_t c : rem)
    if (c != 0) throw std::domain_error("inexact polynomial division");
  Laurent r;
  r.low_ = low_ - d.low_;
  r.coeffs_ = std::move(q);
  r.trim();
  return r;
}

Laurent Laurent::compress_exponents(int k) const {
  Laurent r;
  for (auto [c, e] : terms()) {
    if (e % k != 0) throw std::domain_error("exponent not divisible by " + std::to_string(k));
    r += Laurent(c, e / k);
  }
  return r;
}

Laurent Laurent::scale_exponents(int k) const {
  Laurent r;
  for (auto [c, e] : terms()) r += Laurent(c, e * k);
  return r;
}

std::int64_t Laurent::evaluate(std::int64_t x) const {
  if (low_ < 0 && x != 1 && x != -1 && !is_zero())
    throw std::domain_error("cannot evaluate negative powers at this point");
  std::int64_t sum = 0;
  for (auto [c, e] : terms()) {
    std::int64_t p = 1;
    const int m = e < 0 ? -e : e;
    for (int i = 0; i < m; ++i) p *= x;
    sum += c * p;
  }
  return sum;
}

std::string Laurent::to_string() const {
  if (is_zero()) return "0:0";
  std::string out;
  for (auto [c, e] : terms()) {
    if (!out.empty()) out += ';';
    out += std::to_string(c) + ':' + std::to_string(e);
  }
  return out;
}

Laurent Laurent::parse(std::string_view text) {
  Laurent r;
  while (!text.empty()) {
    const auto semi = text.find(';');
    const std::string_view term = text.substr(0, semi);
    const auto colon = term.find(':');
    if (colon == std::string_view::npos) throw std::invalid_argument("bad polynomial term");
    std::int64_t c = 0;
    int e = 0;
    auto r1 = std::from_chars(term.data(), term.data() + colon, c);
    auto r2 = std::from_chars(term.data() + colon + 1, term.data() + term.size(), e);
    if (r1.ec != std::errc{} || r1.ptr != term.data() + colon || r2.ec != std::errc{} ||
        r2.ptr != term.data() + term.size())
      throw std::invalid_argument("bad polynomial term");
    r += Laurent(c, e);
    if (semi == std::string_view::npos) break;
    text.remove_prefix(semi + 1);
  }
  return r;
}

}  // namespace knotmosaic
