#include "staircase/lattice.hpp"

#include <limits>

namespace staircase {

namespace {

class LatticeWalker {
 public:
  LatticeWalker(const FiberMatrix& a, const Degree& b) : a_(a), residual_(b.begin(), b.end()), cur_(a.cols(), 0) {
    require_same_dim(a.rows(), b.size(), "lattice points");
    // covered_[i * rows + r]: some column >= i has a positive entry in row r.
    covered_.assign((a.cols() + 1) * a.rows(), false);
    for (std::size_t i = a.cols(); i-- > 0;) {
      for (std::size_t r = 0; r < a.rows(); ++r) {
        covered_[i * a.rows() + r] = covered_[(i + 1) * a.rows() + r] || a(r, i) > 0;
      }
    }
  }

  template <class Visit>
  bool walk(std::size_t i, Visit& visit) {
    const std::size_t d = a_.rows();
    for (std::size_t r = 0; r < d; ++r) {
      if (residual_[r] > 0 && !covered_[i * d + r]) return false;
    }
    if (i == a_.cols()) return visit(cur_);
    std::int64_t cap = std::numeric_limits<std::int64_t>::max();
    for (std::size_t r = 0; r < d; ++r) {
      if (a_(r, i) > 0) cap = std::min(cap, residual_[r] / a_(r, i));
    }
    bool stop = false;
    for (std::int64_t v = 0; v <= cap && !stop; ++v) {
      cur_[i] = v;
      if (v > 0) {
        for (std::size_t r = 0; r < d; ++r) residual_[r] -= a_(r, i);
      }
      stop = walk(i + 1, visit);
    }
    for (std::size_t r = 0; r < d; ++r) residual_[r] += cur_[i] * a_(r, i);
    cur_[i] = 0;
    return stop;
  }

 private:
  const FiberMatrix& a_;
  std::vector<std::int64_t> residual_;
  std::vector<std::int64_t> cur_;
  std::vector<bool> covered_;
};

}  // namespace

std::vector<ExponentVector> lattice_points(const FiberMatrix& a, const Degree& b) {
  std::vector<ExponentVector> out;
  LatticeWalker walker(a, b);
  auto visit = [&](const std::vector<std::int64_t>& u) {
    out.emplace_back(u);
    return false;
  };
  walker.walk(0, visit);
  return out;
}

bool has_lattice_point(const FiberMatrix& a, const Degree& b) {
  LatticeWalker walker(a, b);
  auto visit = [](const std::vector<std::int64_t>&) { return true; };
  return walker.walk(0, visit);
}

}  // namespace staircase
