#ifndef CFINJ_GREEN_HPP_
#define CFINJ_GREEN_HPP_

#include <utility>

#include "element.hpp"

namespace cfinj {

//! Green's relations.  On this monoid R is "same domain", L is "same
//! range", H is both, and D and J are universal.
enum class GreenRelation { R, L, H, D, J };

//! Decides rel(a, b) via complement comparison.
bool related(GreenRelation rel, CofiniteInjection const& a,
             CofiniteInjection const& b);

//! The unique order-preserving bijection from the complement of dom_c onto
//! the complement of ran_c.  Its complements are exactly (dom_c, ran_c), so
//! it is a canonical member of the H-class they prescribe.
CofiniteInjection h_class_element(FiniteSet const& dom_c,
                                  FiniteSet const& ran_c);

//! A witness g with related(R, a, g) and related(L, b, g): the
//! order-preserving bijection dom a -> ran b.  Certifies bisimplicity.
CofiniteInjection d_witness(CofiniteInjection const& a,
                            CofiniteInjection const& b);

//! Returns (g, d) with g * a * d == b exactly, where g is the
//! order-preserving bijection dom b -> dom a and d = (g*a)^-1 * b.
//! Certifies simplicity (J universal).
std::pair<CofiniteInjection, CofiniteInjection> simple_factorization(
    CofiniteInjection const& a, CofiniteInjection const& b);

//! For a unit g other than the identity, returns (e, x0) where x0 is the
//! least point moved by g and e is the identity off {x0}; then e and e*g
//! lie in different H-classes.  Throws NotAUnit or IsIdentity.
std::pair<CofiniteInjection, integer> separating_idempotent(
    CofiniteInjection const& g);

}  // namespace cfinj

#endif  // CFINJ_GREEN_HPP_
