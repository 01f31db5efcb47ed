#ifndef SKEWSCHUR_DETERMINANTAL_HPP
#define SKEWSCHUR_DETERMINANTAL_HPP

#include "skewschur/garnir.hpp"
#include "skewschur/polyring.hpp"
#include "skewschur/shapes.hpp"

namespace skewschur {

/// The colHeight(c) x colHeight(c) matrix with entry [i][j] =
/// Z_{row_{c,i}, f[row_{c,j}, c]}. 0x0 when the column is empty.
SymbolicMatrix columnMatrix(const Filling& f, int c);

/// Determinant of columnMatrix(f, c), cached per (row window, entries).
SparsePoly columnDeterminant(const Filling& f, int c);

/// D_f: product of the column determinants.
SparsePoly dPoly(const Filling& f);

/// Monomial prod_{(r,c)} Z_{r, f[r,c]}; defined for any filling.
Monomial fillingMonomial(const Filling& f);

/// For an SSYT t this is the leading monomial of dPoly(t), with
/// coefficient 1. Throws on non-SSYT input.
Monomial leadingMonomialOfSSYT(const Filling& t);

/// Block matrix [[M_{f,c1}, Mbar^b_{f,c2}], [Mbar^a_{f,c1}, M_{f,c2}]] with
/// the off-diagonal blocks zero outside the Garnir cells.
SymbolicMatrix garnirBlockMatrix(const Filling& f, const GarnirData& g);

/// True iff sum_pi sgn(pi) * dPoly(f_pi) over the (a,b)-shuffles is the
/// zero polynomial. Meaningful for admissible g.
bool verifyGarnirDeterminantIdentity(const Filling& f, const GarnirData& g);

}  // namespace skewschur

#endif
