#include "staircase/exponent.hpp"

#include <algorithm>
#include <functional>

namespace staircase {

ExponentVector::ExponentVector(std::vector<std::int64_t> e) : e_(std::move(e)) {
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (e_[i] < 0) {
      throw DomainError("negative exponent " + std::to_string(e_[i]) + " at index " + std::to_string(i));
    }
  }
}

ExponentVector ExponentVector::unit(std::size_t n, std::size_t i, std::int64_t power) {
  if (i >= n) throw DimensionError("variable index " + std::to_string(i) + " out of range");
  std::vector<std::int64_t> e(n, 0);
  e[i] = power;
  return ExponentVector(std::move(e));
}

std::int64_t ExponentVector::total_degree() const {
  std::int64_t d = 0;
  for (auto x : e_) d = checked_add(d, x);
  return d;
}

bool ExponentVector::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](std::int64_t x) { return x == 0; });
}

std::size_t ExponentVector::support_size() const {
  return static_cast<std::size_t>(std::count_if(e_.begin(), e_.end(), [](std::int64_t x) { return x > 0; }));
}

std::optional<std::size_t> ExponentVector::pure_power_variable() const {
  std::optional<std::size_t> var;
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (e_[i] == 0) continue;
    if (var) return std::nullopt;
    var = i;
  }
  return var;
}

ExponentVector ExponentVector::with(std::size_t i, std::int64_t value) const {
  auto e = e_;
  e.at(i) = value;
  return ExponentVector(std::move(e));
}

namespace {

template <class Op>
ExponentVector zip(const ExponentVector& a, const ExponentVector& b, const char* what, Op op) {
  require_same_dim(a.size(), b.size(), what);
  std::vector<std::int64_t> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = op(a[i], b[i]);
  return ExponentVector(std::move(out));
}

}  // namespace

bool divides(const ExponentVector& a, const ExponentVector& b) {
  require_same_dim(a.size(), b.size(), "divides");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

ExponentVector lcm(const ExponentVector& a, const ExponentVector& b) {
  return zip(a, b, "lcm", [](std::int64_t x, std::int64_t y) { return std::max(x, y); });
}

ExponentVector gcd(const ExponentVector& a, const ExponentVector& b) {
  return zip(a, b, "gcd", [](std::int64_t x, std::int64_t y) { return std::min(x, y); });
}

ExponentVector operator+(const ExponentVector& a, const ExponentVector& b) {
  return zip(a, b, "add", checked_add);
}

ExponentVector operator-(const ExponentVector& a, const ExponentVector& b) {
  return zip(a, b, "subtract", [](std::int64_t x, std::int64_t y) {
    if (x < y) throw DomainError("exponent difference would be negative");
    return x - y;
  });
}

ExponentVector colon(const ExponentVector& a, const ExponentVector& b) {
  return zip(a, b, "colon", [](std::int64_t x, std::int64_t y) { return x > y ? x - y : 0; });
}

std::string to_string(const ExponentVector& u) {
  std::string s = "(";
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(u[i]);
  }
  return s + ")";
}

std::vector<ExponentVector> monomials_up_to(std::size_t n, std::int64_t bound) {
  std::vector<ExponentVector> out;
  if (bound < 0) return out;
  std::vector<std::int64_t> cur(n, 0);
  std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t i, std::int64_t left) {
    if (i == n) {
      out.emplace_back(cur);
      return;
    }
    for (std::int64_t v = 0; v <= left; ++v) {
      cur[i] = v;
      rec(i + 1, left - v);
    }
    cur[i] = 0;
  };
  rec(0, bound);
  return out;
}

}  // namespace staircase
