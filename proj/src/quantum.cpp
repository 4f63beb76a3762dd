#include "symbio/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace symbio::quantum {

namespace {

void check_dim(Eigen::Index n, const char* what) {
  if (n < 1 || n > kMaxDimension)
    throw QuantumError(std::string(what) + ": dimension " + std::to_string(n) + " outside 1.." +
                       std::to_string(kMaxDimension));
}

}  // namespace

Ket::Ket(Eigen::VectorXcd v) : v_(std::move(v)) {
  check_dim(v_.size(), "Ket");
  if (!v_.allFinite()) throw QuantumError("Ket: non-finite entry");
}

Ket Ket::basis(int dim, int index) {
  if (index < 0 || index >= dim) throw QuantumError("Ket::basis: index out of range");
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dim);
  v(index) = 1.0;
  return Ket(std::move(v));
}

Operator::Operator(Eigen::MatrixXcd m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols()) throw QuantumError("Operator: matrix is not square");
  check_dim(m_.rows(), "Operator");
  if (!m_.allFinite()) throw QuantumError("Operator: non-finite entry");
}

Operator Operator::identity(int dim) { return Operator(Eigen::MatrixXcd::Identity(dim, dim)); }

Operator Operator::operator*(const Operator& o) const {
  if (o.dim() != dim()) throw QuantumError("Operator product: dimension mismatch");
  return Operator(m_ * o.m_);
}

Ket Operator::operator*(const Ket& k) const {
  if (k.dim() != dim()) throw QuantumError("Operator * Ket: dimension mismatch");
  return Ket(m_ * k.vec());
}

Operator Operator::operator*(Complex c) const { return Operator(m_ * c); }

Complex inner(const Ket& a, const Ket& b) {
  if (a.dim() != b.dim())
    throw QuantumError("inner: dimension mismatch (" + std::to_string(a.dim()) + " vs " +
                       std::to_string(b.dim()) + ")");
  return a.vec().dot(b.vec());  // Eigen conjugates the left operand
}

Operator outer(const Ket& a, const Ket& b) {
  if (a.dim() != b.dim())
    throw QuantumError("outer: dimension mismatch (" + std::to_string(a.dim()) + " vs " +
                       std::to_string(b.dim()) + ")");
  return Operator(a.vec() * b.vec().adjoint());
}

double probability(const Ket& beta, const Ket& v) {
  return std::norm(inner(beta, v)) / inner(v, v).real();
}

double max_deviation(const Operator& a, const Operator& b) {
  if (a.dim() != b.dim()) throw QuantumError("max_deviation: dimension mismatch");
  return (a.mat() - b.mat()).cwiseAbs().maxCoeff();
}

bool approx_equal(const Operator& a, const Operator& b, Tolerance tol) {
  const double scale = std::max({1.0, a.mat().cwiseAbs().maxCoeff(), b.mat().cwiseAbs().maxCoeff()});
  return max_deviation(a, b) <= tol.eps * scale;
}

bool approx_equal(Complex a, Complex b, Tolerance tol) {
  const double scale = std::max({1.0, std::abs(a), std::abs(b)});
  return std::abs(a - b) <= tol.eps * scale;
}

Operator completeness(const std::vector<Ket>& basis) {
  if (basis.empty()) throw QuantumError("completeness: empty basis");
  const int d = basis.front().dim();
  if (static_cast<int>(basis.size()) != d)
    throw QuantumError("completeness: need " + std::to_string(d) + " kets, got " +
                       std::to_string(basis.size()));
  Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(d, d);
  for (const Ket& c : basis) {
    if (c.dim() != d) throw QuantumError("completeness: dimension mismatch");
    sum += outer(c, c).mat();
  }
  return Operator(std::move(sum));
}

namespace {

std::string fmt(Complex z) {
  std::ostringstream os;
  os.precision(6);
  os << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
  return os.str();
}

}  // namespace

AmplitudeExpansion amplitude_expansion(const Ket& b, const Ket& a, const std::vector<Ket>& basis,
                                       Tolerance tol) {
  Operator one = completeness(basis);
  const double dev = max_deviation(one, Operator::identity(one.dim()));
  if (dev > tol.eps)
    throw QuantumError("amplitude_expansion: basis is not orthonormal (completeness deviation " +
                       std::to_string(dev) + ")");
  AmplitudeExpansion out;
  out.direct = inner(b, a);
  out.expanded = 0.0;
  for (const Ket& c : basis) out.expanded += inner(b, c) * inner(c, a);
  out.trace = {"<B|A>",
               "<B| |A>",
               "<B| 1 |A>",
               "<B| Sum_k |C_k><C_k| |A>",
               "Sum_k <B|C_k><C_k|A>",
               "direct   = " + fmt(out.direct),
               "expanded = " + fmt(out.expanded)};
  return out;
}

CloningDiscrepancy cloning_discrepancy(Complex alpha, Complex beta, Tolerance tol) {
  const double n2 = std::norm(alpha) + std::norm(beta);
  if (std::abs(n2 - 1.0) > tol.eps)
    throw QuantumError("cloning_discrepancy: |alpha|^2 + |beta|^2 = " + std::to_string(n2) +
                       ", expected 1");
  Eigen::VectorXcd linear(4), product(4);
  linear << alpha, 0.0, 0.0, beta;
  product << alpha * alpha, alpha * beta, beta * alpha, beta * beta;
  Ket delta(linear - product);
  return {delta, delta.norm()};
}

Operator random_unitary(int dim, std::mt19937_64& rng) {
  check_dim(dim, "random_unitary");
  std::normal_distribution<double> g(0.0, 1.0);
  Eigen::MatrixXcd m(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) m(i, j) = Complex(g(rng), g(rng));
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(m);
  Eigen::MatrixXcd q = qr.householderQ();
  Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < dim; ++j) {
    Complex d = r(j, j);
    if (std::abs(d) > 0) q.col(j) *= d / std::abs(d);
  }
  return Operator(std::move(q));
}

Ket random_ket(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Eigen::VectorXcd v(dim);
  for (int i = 0; i < dim; ++i) v(i) = Complex(g(rng), g(rng));
  return Ket(std::move(v));
}

std::vector<Ket> columns(const Operator& u) {
  std::vector<Ket> out;
  for (int j = 0; j < u.dim(); ++j) out.emplace_back(u.mat().col(j));
  return out;
}

}  // namespace symbio::quantum
