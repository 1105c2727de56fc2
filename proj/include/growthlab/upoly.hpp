#pragma once

#include <utility>
#include <vector>

#include "growthlab/field.hpp"

namespace growthlab {

/// Univariate polynomial over a Field, constant term first. Kept trimmed: the
/// zero polynomial is the empty vector.
using UPoly = std::vector<Fq>;

namespace upoly {

void trim(UPoly& f);
/// -1 for the zero polynomial.
int degree(const UPoly& f);
UPoly add(const Field& F, const UPoly& a, const UPoly& b);
UPoly sub(const Field& F, const UPoly& a, const UPoly& b);
UPoly mul(const Field& F, const UPoly& a, const UPoly& b);
UPoly scale(const Field& F, const UPoly& a, Fq c);
/// Quotient and remainder; throws DivisionByZero for b = 0.
std::pair<UPoly, UPoly> divmod(const Field& F, const UPoly& a, const UPoly& b);
UPoly monic(const Field& F, const UPoly& a);
/// Monic gcd; gcd(0, 0) = 0.
UPoly gcd(const Field& F, UPoly a, UPoly b);
UPoly derivative(const Field& F, const UPoly& a);
Fq eval(const Field& F, const UPoly& a, Fq x);

}  // namespace upoly
}  // namespace growthlab
