#pragma once

#include <vector>

#include "quadrilift/local_fields.hpp"

namespace quadrilift {

/// Residue-enumeration oracle: does the diagonal form sum c_i x_i^2 have a
/// nontrivial zero over the completion at `place`?
///
/// Finite places search primitive zeros modulo p^depth by depth-first lifting
/// of projectively normalized residue vectors; the real place checks signs.
/// Coefficients are cleared of denominators and p^2 factors (both isometries)
/// before the search. depth < 0 selects 2 * sum |v_p(c_i)| + 5 on the reduced
/// coefficients. Nothing here consults Hilbert symbols or invariants.
bool oracle_has_zero(const std::vector<Rational>& coefficients, const Place& place, int depth = -1);

/// Oracle for "the form represents beta": the form extended by <-beta> has a
/// nontrivial zero.
bool oracle_represents(const std::vector<Rational>& diag, const Rational& beta, const Place& place);

}  // namespace quadrilift
