#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include "lpiso/lp_vector.hpp"

namespace lpiso {

// Rational-point indices.  Term codes grow quickly under the pairing
// encoding, so indices are unbounded integers.
using PointIndex = BigInt;

// A term is a formal rational linear combination of generators, stored as a
// finitely supported coefficient map; SeqVector already is exactly that.
using Term = SeqVector;

// Frozen enumeration of terms (documented in the README):
//   - Cantor pairing pair(x,y) = (x+y)(x+y+1)/2 + y.
//   - Nonzero rational coefficients enumerated as qnz(2m) = cw(m) and
//     qnz(2m+1) = -cw(m), cw the Calkin-Wilf sequence from cw(0) = 1.
//   - An entry (generator gap, coefficient code) has code pair(gap, code);
//     gaps turn strictly increasing generator indices into arbitrary
//     naturals (first index = gap, later index = previous + 1 + gap).
//   - listcode([]) = 0, listcode(e:rest) = pair(e, listcode(rest)) + 1,
//     entries ordered by generator index.
// Index 0 is the zero term; 1 is g0; 2 is g1.
PointIndex pair_code(const PointIndex& x, const PointIndex& y);
std::pair<PointIndex, PointIndex> unpair_code(const PointIndex& z);

Rational coefficient_at(const PointIndex& code);
PointIndex coefficient_code(const Rational& value);

Term decode_term(const PointIndex& index);
PointIndex encode_term(const Term& term);

std::string render_term(const Term& term);

// Standard enumeration of the dyadic subintervals of [0,1], level order:
// D_0 = [0,1], D_1 = [0,1/2], D_2 = [1/2,1], D_3 = [0,1/4], ...
std::pair<Dyadic, Dyadic> dyadic_interval_at(std::uint64_t n);

// Inverse: level-order index of [j*2^-L, (j+1)*2^-L].
std::uint64_t dyadic_interval_index(std::int64_t level, std::uint64_t j);

} // namespace lpiso
