#pragma once

#include <vector>

#include "slgrowth/field.hpp"

namespace slgrowth {

// Dense univariate polynomial over F_p, coefficients low degree first.
// The zero polynomial is the empty vector; nonzero polynomials carry no
// trailing zero coefficients.
using Poly = std::vector<Residue>;

namespace poly {

void trim(Poly& f);
int degree(const Poly& f);  // -1 for the zero polynomial

Poly add(const PrimeField& F, const Poly& a, const Poly& b);
Poly sub(const PrimeField& F, const Poly& a, const Poly& b);
Poly mul(const PrimeField& F, const Poly& a, const Poly& b);
Poly derivative(const PrimeField& F, const Poly& f);
Poly make_monic(const PrimeField& F, Poly f);

// Remainder of a modulo b (b nonzero).
Poly mod(const PrimeField& F, const Poly& a, const Poly& b);
// Quotient and remainder.
void divmod(const PrimeField& F, const Poly& a, const Poly& b, Poly& quot, Poly& rem);

// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const PrimeField& F, Poly a, Poly b);

Residue eval(const PrimeField& F, const Poly& f, Residue x);

// x^e mod m, by square-and-multiply.
Poly powmod_x(const PrimeField& F, std::uint64_t e, const Poly& m);

// Degrees of the irreducible factors of a squarefree polynomial, ascending,
// by distinct-degree factorization (gcd with x^{p^d} - x).
std::vector<int> factor_degrees_squarefree(const PrimeField& F, const Poly& f);

// True iff gcd(f, f') = 1.
bool is_squarefree(const PrimeField& F, const Poly& f);

}  // namespace poly
}  // namespace slgrowth
