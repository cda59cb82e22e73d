#include "staircase/posetlab.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace staircase {

XElem::XElem(std::int64_t i_, std::int64_t j_) : i(i_), j(j_) {
  if (i < 0 || j <= i) {
    throw DomainError("X element needs 0 <= i < j, got (" + std::to_string(i) + "," + std::to_string(j) + ")");
  }
}

bool x_less(const XElem& p, const XElem& q) { return p.j < q.j && (p.i == q.i || p.j < q.i); }

XDualOrderIdeal::XDualOrderIdeal(std::vector<XElem> minimal) : minimal_(std::move(minimal)) {
  std::sort(minimal_.begin(), minimal_.end());
  minimal_.erase(std::unique(minimal_.begin(), minimal_.end()), minimal_.end());
  for (const auto& p : minimal_) {
    for (const auto& q : minimal_) {
      if (x_less(p, q)) throw DomainError("dual order ideal generators are not an antichain");
    }
  }
}

XDualOrderIdeal XDualOrderIdeal::generated_by(std::span<const XElem> elems) {
  std::vector<XElem> minimal;
  for (const auto& p : elems) {
    if (std::none_of(elems.begin(), elems.end(), [&](const XElem& q) { return x_less(q, p); })) minimal.push_back(p);
  }
  return XDualOrderIdeal(std::move(minimal));
}

bool XDualOrderIdeal::contains_element(const XElem& p) const {
  return std::any_of(minimal_.begin(), minimal_.end(), [&](const XElem& m) { return x_less_equal(m, p); });
}

bool x_doi_contains(const XDualOrderIdeal& d1, const XDualOrderIdeal& d2) {
  return std::all_of(d1.minimal().begin(), d1.minimal().end(),
                     [&](const XElem& p) { return d2.contains_element(p); });
}

XDualOrderIdeal s_family(std::int64_t l) {
  if (l < 1) throw DomainError("s_family: l must be at least 1");
  std::vector<XElem> s;
  for (std::int64_t k = 0; k < l; ++k) s.emplace_back(k, l);
  return XDualOrderIdeal(std::move(s));
}

bool verify_antichain(std::span<const XDualOrderIdeal> family) {
  for (std::size_t a = 0; a < family.size(); ++a) {
    for (std::size_t b = a + 1; b < family.size(); ++b) {
      if (x_doi_contains(family[a], family[b]) || x_doi_contains(family[b], family[a])) return false;
    }
  }
  return true;
}

bool verify_s_antichain(std::int64_t max_l) {
  if (max_l < 2) throw DomainError("verify_s_antichain: L must be at least 2");
  std::vector<XDualOrderIdeal> family;
  for (std::int64_t l = 1; l <= max_l; ++l) family.push_back(s_family(l));
  return verify_antichain(family);
}

std::vector<XElem> x_ground_set(std::int64_t max_j) {
  std::vector<XElem> out;
  for (std::int64_t j = 1; j <= max_j; ++j) {
    for (std::int64_t i = 0; i < j; ++i) out.emplace_back(i, j);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::int64_t descending_chain_max(const XElem& p) {
  // Everything below p has second coordinate < p.j, so the ground set up to
  // p.j - 1 is exhaustive. Heights computed in increasing j.
  const auto below = x_ground_set(p.j - 1);
  std::map<XElem, std::int64_t> height;
  std::vector<XElem> by_j(below);
  std::sort(by_j.begin(), by_j.end(), [](const XElem& a, const XElem& b) { return a.j != b.j ? a.j < b.j : a.i < b.i; });
  for (const auto& q : by_j) {
    std::int64_t h = 0;
    for (const auto& [r, hr] : height) {
      if (x_less(r, q)) h = std::max(h, hr + 1);
    }
    height.emplace(q, h);
  }
  std::int64_t best = 0;
  for (const auto& [q, hq] : height) {
    if (x_less(q, p)) best = std::max(best, hq + 1);
  }
  return best;
}

FiniteOrderIdeal::FiniteOrderIdeal(std::size_t nvars, std::vector<ExponentVector> points)
    : nvars_(nvars), points_(std::move(points)) {
  for (const auto& u : points_) require_same_dim(nvars_, u.size(), "order ideal point");
  std::sort(points_.begin(), points_.end());
  points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
  for (const auto& u : points_) {
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (u[i] > 0 && !contains(u.with(i, u[i] - 1))) {
        throw DomainError("order ideal is not downward closed at " + to_string(u));
      }
    }
  }
}

bool FiniteOrderIdeal::contains(const ExponentVector& u) const {
  return std::binary_search(points_.begin(), points_.end(), u);
}

MonomialIdeal young_complement(const FiniteOrderIdeal& order_ideal) {
  const std::size_t n = order_ideal.nvars();
  // Minimal elements of the complement lie in {0} ∪ {o + e_i : o in O}.
  std::vector<ExponentVector> candidates{ExponentVector(n)};
  for (const auto& o : order_ideal.points()) {
    for (std::size_t i = 0; i < n; ++i) candidates.push_back(o + ExponentVector::unit(n, i));
  }
  std::erase_if(candidates, [&](const ExponentVector& u) { return order_ideal.contains(u); });
  return MonomialIdeal(n, candidates);
}

FiniteOrderIdeal young_cocomplement(const MonomialIdeal& ideal) {
  if (!is_artinian(ideal)) throw DomainError("young_cocomplement: ideal is not artinian");
  return FiniteOrderIdeal(ideal.nvars(), standard_monomials(ideal));
}

}  // namespace staircase
