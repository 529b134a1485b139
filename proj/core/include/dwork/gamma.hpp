#pragma once

#include "dwork/bigcomplex.hpp"

namespace dwork {

/**
 * Gamma function on the complex plane.
 *
 * Spouge's approximation with a precision-adaptive term count, evaluated at
 * elevated working precision; the reflection formula handles Re z < 1/2.
 * Relative error is below 2^(8 - prec). Throws PoleError at non-positive
 * integers.
 */
BigComplex gamma(const BigComplex& z, Prec prec);

/** Gamma at a rational argument. */
BigComplex gamma(const Rational& q, Prec prec);

/** Rising factorial (z)_k = z (z+1) ... (z+k-1) as a direct product. */
BigComplex pochhammer(const BigComplex& z, unsigned long k);

/** Exact rising factorial on rationals. */
Rational pochhammer(const Rational& q, unsigned long k);

}  // namespace dwork
