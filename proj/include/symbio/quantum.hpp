#pragma once

// Finite-dimensional bra/ket arithmetic for the Dirac identities and the
// no-cloning discrepancy.

#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace symbio::quantum {

using Complex = std::complex<double>;
inline constexpr int kMaxDimension = 64;

class QuantumError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Relative tolerance; comparisons scale eps by max(1, operand norms).
struct Tolerance {
  double eps = 1e-9;
};

class Ket {
 public:
  /// Throws QuantumError unless 1 <= dim <= kMaxDimension and all entries are finite.
  explicit Ket(Eigen::VectorXcd v);
  static Ket basis(int dim, int index);

  int dim() const { return static_cast<int>(v_.size()); }
  const Eigen::VectorXcd& vec() const { return v_; }
  double norm() const { return v_.norm(); }

 private:
  Eigen::VectorXcd v_;
};

class Operator {
 public:
  explicit Operator(Eigen::MatrixXcd m);
  static Operator identity(int dim);

  int dim() const { return static_cast<int>(m_.rows()); }
  const Eigen::MatrixXcd& mat() const { return m_; }

  Operator operator*(const Operator& o) const;
  Ket operator*(const Ket& k) const;
  Operator operator*(Complex c) const;

 private:
  Eigen::MatrixXcd m_;
};

/// <a|b> = a* b.
Complex inner(const Ket& a, const Ket& b);
/// |a><b| = a b*.
Operator outer(const Ket& a, const Ket& b);
/// |<beta|v>|^2 / <v|v>.
double probability(const Ket& beta, const Ket& v);

/// Largest absolute entry of the difference.
double max_deviation(const Operator& a, const Operator& b);
bool approx_equal(const Operator& a, const Operator& b, Tolerance tol = {});
bool approx_equal(Complex a, Complex b, Tolerance tol = {});

/// Sum of |C_k><C_k| over d kets of dimension d.
Operator completeness(const std::vector<Ket>& basis);

struct AmplitudeExpansion {
  Complex direct;
  Complex expanded;
  /// Staged like the DNA replication trace.
  std::vector<std::string> trace;
};

/// <B|A> against the sum over k of <B|C_k><C_k|A>. Throws QuantumError when the
/// basis deviates from completeness by more than tol.
AmplitudeExpansion amplitude_expansion(const Ket& b, const Ket& a, const std::vector<Ket>& basis,
                                       Tolerance tol = {});

struct CloningDiscrepancy {
  /// T(alpha|0> + beta|1>) - (alpha|0> + beta|1>)^{(x)2}, in the basis |00>,|01>,|10>,|11>.
  Ket delta;
  double norm;
};

/// T|0> = |00>, T|1> = |11> extended linearly. Throws QuantumError unless
/// |alpha|^2 + |beta|^2 = 1 within tol.
CloningDiscrepancy cloning_discrepancy(Complex alpha, Complex beta, Tolerance tol = {});

/// Columns of the QR factor of a complex Gaussian matrix, phase-fixed.
Operator random_unitary(int dim, std::mt19937_64& rng);
Ket random_ket(int dim, std::mt19937_64& rng);
std::vector<Ket> columns(const Operator& u);

}  // namespace symbio::quantum
