#include "spheremax/types.hpp"

#include <cmath>
#include <sstream>

namespace spheremax {

CoefficientMatrix::CoefficientMatrix(int n, std::vector<double> entries_row_major)
    : n_(n), a_(std::move(entries_row_major)) {
  if (n_ < 1) {
    throw std::invalid_argument("CoefficientMatrix: order must be >= 1, got " +
                                std::to_string(n_));
  }
  if (a_.size() != static_cast<size_t>(n_) * n_) {
    std::ostringstream os;
    os << "CoefficientMatrix: expected " << n_ * n_ << " entries for order " << n_ << ", got "
       << a_.size();
    throw std::invalid_argument(os.str());
  }
  for (size_t i = 0; i < a_.size(); ++i) {
    if (!std::isfinite(a_[i])) {
      std::ostringstream os;
      os << "CoefficientMatrix: entry (" << i / n_ << "," << i % n_ << ") is not finite";
      throw std::invalid_argument(os.str());
    }
  }
}

CoefficientMatrix CoefficientMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
  const int n = static_cast<int>(rows.size());
  std::vector<double> flat;
  flat.reserve(static_cast<size_t>(n) * n);
  for (int k = 0; k < n; ++k) {
    if (static_cast<int>(rows[k].size()) != n) {
      std::ostringstream os;
      os << "CoefficientMatrix: row " << k << " has " << rows[k].size() << " entries, expected "
         << n;
      throw std::invalid_argument(os.str());
    }
    flat.insert(flat.end(), rows[k].begin(), rows[k].end());
  }
  return CoefficientMatrix(n, std::move(flat));
}

CoefficientMatrix CoefficientMatrix::identity(int n) {
  std::vector<double> a(static_cast<size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) a[static_cast<size_t>(i) * n + i] = 1.0;
  return CoefficientMatrix(n, std::move(a));
}

CoefficientMatrix CoefficientMatrix::diagonal(const std::vector<double>& diag) {
  const int n = static_cast<int>(diag.size());
  std::vector<double> a(static_cast<size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) a[static_cast<size_t>(i) * n + i] = diag[i];
  return CoefficientMatrix(n, std::move(a));
}

CoefficientMatrix CoefficientMatrix::zero(int n) {
  return CoefficientMatrix(n, std::vector<double>(static_cast<size_t>(n) * n, 0.0));
}

CoefficientMatrix CoefficientMatrix::transpose() const {
  std::vector<double> t(a_.size());
  for (int k = 0; k < n_; ++k)
    for (int j = 0; j < n_; ++j) t[static_cast<size_t>(j) * n_ + k] = (*this)(k, j);
  return CoefficientMatrix(n_, std::move(t));
}

double CoefficientMatrix::frobenius_norm() const {
  double s = 0.0;
  for (double v : a_) s += v * v;
  return std::sqrt(s);
}

double CoefficientMatrix::abs_sum() const {
  double s = 0.0;
  for (double v : a_) s += std::fabs(v);
  return s;
}

bool CoefficientMatrix::is_zero() const {
  for (double v : a_)
    if (v != 0.0) return false;
  return true;
}

ProblemInstance::ProblemInstance(CoefficientMatrix m, int dim) : matrix(std::move(m)), d(dim) {
  if (d < 1) {
    throw std::invalid_argument("ProblemInstance: dimension d must be >= 1, got " +
                                std::to_string(d));
  }
}

namespace {

void validate_blocks(std::vector<std::vector<double>>& blocks, const char* side, size_t n,
                     size_t d) {
  if (blocks.size() != n) {
    std::ostringstream os;
    os << "Assignment: " << side << " has " << blocks.size() << " blocks, expected " << n;
    throw std::invalid_argument(os.str());
  }
  for (size_t k = 0; k < n; ++k) {
    if (blocks[k].size() != d) {
      std::ostringstream os;
      os << "Assignment: " << side << " block " << k << " has dimension " << blocks[k].size()
         << ", expected " << d;
      throw std::invalid_argument(os.str());
    }
    const double nrm = vec::norm(blocks[k]);
    if (std::fabs(nrm - 1.0) > Assignment::kUnitTol) {
      std::ostringstream os;
      os << "Assignment: " << side << " block " << k << " has norm " << nrm
         << ", more than " << Assignment::kUnitTol << " away from 1";
      throw std::invalid_argument(os.str());
    }
    for (double& c : blocks[k]) c /= nrm;
  }
}

}  // namespace

Assignment::Assignment(std::vector<std::vector<double>> x, std::vector<std::vector<double>> y)
    : x_(std::move(x)), y_(std::move(y)) {
  if (x_.empty()) throw std::invalid_argument("Assignment: needs at least one block");
  const size_t n = x_.size();
  const size_t d = x_[0].size();
  if (d == 0) throw std::invalid_argument("Assignment: blocks must have dimension >= 1");
  validate_blocks(x_, "x", n, d);
  validate_blocks(y_, "y", n, d);
}

Assignment Assignment::all_e1(int n, int d) {
  std::vector<double> e1(static_cast<size_t>(d), 0.0);
  e1[0] = 1.0;
  std::vector<std::vector<double>> blocks(static_cast<size_t>(n), e1);
  return Assignment(blocks, blocks);
}

Assignment Assignment::embedded(int new_d) const {
  if (new_d < dim()) {
    throw std::invalid_argument("Assignment::embedded: target dimension smaller than current");
  }
  Assignment out;
  out.x_ = x_;
  out.y_ = y_;
  for (auto* side : {&out.x_, &out.y_})
    for (auto& block : *side) block.resize(static_cast<size_t>(new_d), 0.0);
  return out;
}

namespace vec {

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm(const std::vector<double>& a) { return std::sqrt(dot(a, a)); }

std::vector<double> normalized(std::vector<double> v) {
  const double nrm = norm(v);
  if (nrm < 1e-300) throw std::invalid_argument("normalized: zero vector");
  for (double& c : v) c /= nrm;
  return v;
}

}  // namespace vec

}  // namespace spheremax
