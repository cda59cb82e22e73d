#include "staircase/ideal.hpp"

#include <algorithm>
#include <functional>

namespace staircase {

namespace {

void check_lengths(std::size_t nvars, std::span<const ExponentVector> gens) {
  for (const auto& g : gens) require_same_dim(nvars, g.size(), "monomial ideal generator");
}

}  // namespace

MonomialIdeal::MonomialIdeal(std::size_t nvars, std::span<const ExponentVector> gens) : nvars_(nvars) {
  check_lengths(nvars, gens);
  // Low-degree candidates first: anything that can divide g has degree <= |g|.
  std::vector<std::pair<std::int64_t, const ExponentVector*>> order;
  order.reserve(gens.size());
  for (const auto& g : gens) order.emplace_back(g.total_degree(), &g);
  std::sort(order.begin(), order.end(),
            [](const auto& a, const auto& b) { return a.first != b.first ? a.first < b.first : *a.second < *b.second; });
  for (const auto& [deg, g] : order) {
    bool redundant = std::any_of(gens_.begin(), gens_.end(), [&](const ExponentVector& h) { return divides(h, *g); });
    if (!redundant) gens_.push_back(*g);
  }
  std::sort(gens_.begin(), gens_.end());
}

MonomialIdeal MonomialIdeal::unit(std::size_t nvars) {
  ExponentVector one(nvars);
  return MonomialIdeal(nvars, std::span<const ExponentVector>(&one, 1));
}

MonomialIdeal minimalize(std::size_t nvars, std::span<const ExponentVector> gens) {
  return MonomialIdeal(nvars, gens);
}

bool member(const MonomialIdeal& ideal, const ExponentVector& m) {
  require_same_dim(ideal.nvars(), m.size(), "member");
  for (const auto& g : ideal.gens()) {
    if (divides(g, m)) return true;
  }
  return false;
}

bool contains(const MonomialIdeal& ideal, const MonomialIdeal& sub) {
  require_same_dim(ideal.nvars(), sub.nvars(), "contains");
  for (const auto& g : sub.gens()) {
    if (!member(ideal, g)) return false;
  }
  return true;
}

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_dim(a.nvars(), b.nvars(), "sum");
  std::vector<ExponentVector> gens(a.gens().begin(), a.gens().end());
  gens.insert(gens.end(), b.gens().begin(), b.gens().end());
  return MonomialIdeal(a.nvars(), gens);
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_dim(a.nvars(), b.nvars(), "intersect");
  std::vector<ExponentVector> gens;
  gens.reserve(a.num_gens() * b.num_gens());
  for (const auto& g : a.gens()) {
    for (const auto& h : b.gens()) gens.push_back(lcm(g, h));
  }
  return MonomialIdeal(a.nvars(), gens);
}

MonomialIdeal quotient(const MonomialIdeal& ideal, const ExponentVector& m) {
  require_same_dim(ideal.nvars(), m.size(), "quotient");
  std::vector<ExponentVector> gens;
  gens.reserve(ideal.num_gens());
  for (const auto& g : ideal.gens()) gens.push_back(colon(g, m));
  return MonomialIdeal(ideal.nvars(), gens);
}

namespace {

// Smallest a_i with x_i^{a_i} in the ideal, or -1 if there is none.
std::vector<std::int64_t> pure_power_bounds(const MonomialIdeal& ideal) {
  std::vector<std::int64_t> bound(ideal.nvars(), -1);
  for (const auto& g : ideal.gens()) {
    if (g.is_zero()) {
      std::fill(bound.begin(), bound.end(), 0);
      return bound;
    }
    if (auto i = g.pure_power_variable()) {
      if (bound[*i] < 0 || g[*i] < bound[*i]) bound[*i] = g[*i];
    }
  }
  return bound;
}

}  // namespace

bool is_artinian(const MonomialIdeal& ideal) {
  auto bound = pure_power_bounds(ideal);
  return std::none_of(bound.begin(), bound.end(), [](std::int64_t b) { return b < 0; });
}

std::vector<ExponentVector> standard_monomials(const MonomialIdeal& ideal) {
  auto bound = pure_power_bounds(ideal);
  if (std::any_of(bound.begin(), bound.end(), [](std::int64_t b) { return b < 0; })) {
    throw DomainError("standard_monomials: ideal is not artinian");
  }
  std::vector<ExponentVector> out;
  if (ideal.is_unit()) return out;
  const std::size_t n = ideal.nvars();
  std::vector<std::int64_t> cur(n, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == n) {
      ExponentVector u(cur);
      if (!member(ideal, u)) out.push_back(std::move(u));
      return;
    }
    for (std::int64_t v = 0; v < bound[i]; ++v) {
      cur[i] = v;
      rec(i + 1);
    }
    cur[i] = 0;
  };
  rec(0);
  return out;
}

std::vector<ExponentVector> standard_monomials_up_to(const MonomialIdeal& ideal, std::int64_t bound) {
  if (bound < 0) throw DomainError("standard_monomials_up_to: negative degree bound");
  std::vector<ExponentVector> out;
  for (auto& u : monomials_up_to(ideal.nvars(), bound)) {
    if (!member(ideal, u)) out.push_back(std::move(u));
  }
  return out;
}

std::string to_string(const MonomialIdeal& ideal) {
  std::string s = "<";
  for (std::size_t i = 0; i < ideal.num_gens(); ++i) {
    if (i) s += ", ";
    s += to_string(ideal.gens()[i]);
  }
  return s + ">";
}

}  // namespace staircase
