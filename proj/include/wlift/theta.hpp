#pragma once

#include <array>
#include <string>
#include <vector>

#include "json.hpp"
#include "wlift/qlattice.hpp"

namespace wlift {

/// Integral positive-definite ternary quadratic lattice, given by the Gram
/// matrix of the reduced norm on a Z-basis.
struct TernaryLattice {
  IntMatrix gram;
  std::vector<Quaternion> basis;  // empty when built from a bare Gram matrix

  Integer determinant() const;
};

/// {x in Z + 2 R : tr(x) = 0} for an order R, with an HNF-derived basis.
TernaryLattice trace_zero_lattice(const QLattice& order);

/// Truncated integer q-expansion sum_{n <= bound} c_n q^n.
class QSeries {
 public:
  QSeries() = default;
  explicit QSeries(long bound) : coeffs_(static_cast<std::size_t>(bound + 1), Integer(0)) {
    if (bound < 0) throw UsageError("QSeries: negative bound");
  }
  QSeries(long bound, std::vector<Integer> coeffs);

  long bound() const { return static_cast<long>(coeffs_.size()) - 1; }
  const Integer& operator[](long n) const { return coeffs_.at(static_cast<std::size_t>(n)); }
  Integer& operator[](long n) { return coeffs_.at(static_cast<std::size_t>(n)); }
  const std::vector<Integer>& coeffs() const { return coeffs_; }

  QSeries truncated(long bound) const;
  bool is_zero() const;

  friend QSeries operator+(const QSeries& a, const QSeries& b);
  friend QSeries operator-(const QSeries& a, const QSeries& b);
  friend QSeries operator*(const Integer& c, const QSeries& a);
  friend bool operator==(const QSeries& a, const QSeries& b) { return a.coeffs_ == b.coeffs_; }

  /// "c0 + c1*q + ... + O(q^(bound+1))" with zero terms omitted.
  std::string pretty() const;

 private:
  std::vector<Integer> coeffs_;
};

/// Coefficient n is #{x in L : Nm(x) = n}, for n <= bound, by exact
/// Fincke-Pohst enumeration on the stored Gram matrix.
QSeries theta_series(const TernaryLattice& lattice, long bound);

/// Same counts from a naive scan of the coordinate box [-box, box]^3. Only
/// complete when the box covers the ellipsoid; used as a test oracle.
QSeries theta_series_box(const IntMatrix& gram, long bound, long box);

/// Isometry-invariant key: lexicographically least (Q11, Q22, Q33, B12,
/// B13, B23) over all bases of the lattice.
std::array<long, 6> canonical_gram_key(const IntMatrix& gram);

/// Plain text: optional "# ..." header lines, then "n c" per nonzero
/// coefficient in ascending n.
std::string to_text(const QSeries& s, const std::vector<std::string>& header = {});
/// Parses the text format; the bound comes from a "bound=B" header token.
QSeries series_from_text(const std::string& text);

/// {"bound": B, "coeffs": {"n": "c", ...}} with zero coefficients omitted.
nlohmann::ordered_json to_json(const QSeries& s);
QSeries series_from_json(const nlohmann::json& j);

}  // namespace wlift
