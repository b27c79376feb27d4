#ifndef CFINJ_CONGRUENCE_HPP_
#define CFINJ_CONGRUENCE_HPP_

#include <optional>
#include <utility>
#include <vector>

#include "element.hpp"

namespace cfinj {

//! The index of a, the difference of its complement sizes.  Additive:
//! index_hom(a * b) == index_hom(a) + index_hom(b), and every integer is
//! attained, so this is a homomorphism onto the integers.
integer index_hom(CofiniteInjection const& a);

//! The congruence identifying elements of equal index.
bool d_equiv(CofiniteInjection const& a, CofiniteInjection const& b);

//! Least group congruence test.  When a and b agree after multiplication
//! by some idempotent, returns the canonical witness: the identity on
//! [M, oo) for the least threshold M at which a * e == b * e holds
//! exactly.  Returns nullopt otherwise.  The witness route is checked
//! against d_equiv internally; the two coincide on this fragment.
std::optional<CofiniteInjection> sigma_related(CofiniteInjection const& a,
                                               CofiniteInjection const& b);

//! For b with equal complement sizes, returns (a, e): a is the unit
//! extending b by the ascending matching of its domain holes onto its
//! range holes, and e is the identity on ran b; then a * e == b * e, so
//! a and b are congruent modulo the least group congruence.
//! Throws IndexNonzero when the complement sizes differ.
std::pair<CofiniteInjection, CofiniteInjection> unit_representative(
    CofiniteInjection const& b);

//! The full finite solution set of a translation equation:
//! side == right solves a * x == b, side == left solves x * a == b.
//! Solutions are deduplicated normal forms in canonical order; the list
//! is empty exactly when no solution exists.
std::vector<CofiniteInjection> solve_translation(Side side,
                                                 CofiniteInjection const& a,
                                                 CofiniteInjection const& b);

}  // namespace cfinj

#endif  // CFINJ_CONGRUENCE_HPP_
