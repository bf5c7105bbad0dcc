#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "gordian/diagram.hpp"
#include "gordian/laurent.hpp"

namespace gordian {

constexpr int kDefaultCrossingCap = 20;

class CapExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Kauffman bracket in the variable A, normalised so the crossingless
/// unknot has bracket 1.
LaurentPolynomial kauffman_bracket(const PlanarDiagram& d, int cap = kDefaultCrossingCap);

/// Jones polynomial with exponents in quarter-units of t: the term
/// c * x^q stands for c * t^(q/4).  For knots every q is a multiple of 4.
LaurentPolynomial jones_quarter(const PlanarDiagram& d, int cap = kDefaultCrossingCap);

/// Jones polynomial in integer powers of t (knots only).
LaurentPolynomial jones(const PlanarDiagram& d, int cap = kDefaultCrossingCap);

/// Goeritz matrix of the regions of one colour.  `shade_first` selects
/// which colour class forms the matrix: false uses the regions not lying to
/// the right of the first edge.  The correction term of Gordon and
/// Litherland is returned alongside.
struct GoeritzData {
  std::vector<std::vector<std::int64_t>> matrix;  // full (unreduced) matrix over all regions of the colour
  int correction = 0;
};
GoeritzData goeritz(const PlanarDiagram& d, bool shade_first = false);

std::int64_t determinant(const PlanarDiagram& d);
int signature(const PlanarDiagram& d);
int murasugi_lower_bound(const PlanarDiagram& d);
int murasugi_lower_bound(int signature);

/// Exact determinant and signature of a symmetric integer matrix.
std::int64_t integer_determinant(const std::vector<std::vector<std::int64_t>>& m);
int symmetric_signature(const std::vector<std::vector<std::int64_t>>& m);

struct Fingerprint {
  std::int64_t determinant = 1;
  int signature = 0;
  LaurentPolynomial jones = LaurentPolynomial(1);  // quarter-units of t

  Fingerprint mirrored() const;
  /// "det=3 sigma=-2 jones=t+t^3-t^4"
  std::string to_string() const;
  std::string jones_string() const;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const PlanarDiagram& d, int cap = kDefaultCrossingCap);

/// Fingerprint of a connected sum from the fingerprints of the summands.
Fingerprint combine(const Fingerprint& a, const Fingerprint& b);

}  // namespace gordian
