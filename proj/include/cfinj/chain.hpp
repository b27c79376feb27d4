#ifndef CFINJ_CHAIN_HPP_
#define CFINJ_CHAIN_HPP_

#include <vector>

#include "element.hpp"

namespace cfinj {

//! Finite description of an infinite strictly descending chain of
//! idempotents e_1 > e_2 > ... starting at `start`.  The chain removes
//! one point of dom(start) per step; the removal order is `prefix` first,
//! then the rest of dom(start) in ascending order.  Every point is
//! eventually removed, so the chain is maximal.
class ChainSpec {
 public:
  //! Validates that start is idempotent and prefix entries are distinct
  //! points of dom(start).  Throws NotIdempotent or ValidationError.
  ChainSpec(CofiniteInjection start, std::vector<integer> prefix);

  CofiniteInjection const& start() const { return _start; }
  std::vector<integer> const& prefix() const { return _prefix; }

  //! The i-th removed point (i >= 1).
  integer hole(integer i) const;

  bool operator==(ChainSpec const& other) const = default;

  //! Renders as "chain{start=<element>; prefix=[a,b,...]}".
  std::string to_string() const;

 private:
  CofiniteInjection _start;
  std::vector<integer> _prefix;
};

//! Generators of the bicyclic subsemigroup carrying a chain: p steps each
//! removal point to the next one, q == invert(p), and p * q == unit, the
//! chain's top idempotent.
struct BicyclicPair {
  CofiniteInjection p;
  CofiniteInjection q;
  CofiniteInjection unit;

  bool operator==(BicyclicPair const& other) const = default;
};

//! The i-th chain member (i >= 1): the identity on dom(start) minus the
//! first i-1 removal points.  Throws ValidationError when i < 1.
CofiniteInjection chain_element(ChainSpec const& chain, integer i);

//! True iff e < i with exactly one point of difference between the
//! domains.  Throws NotIdempotent.
bool covers(CofiniteInjection const& e, CofiniteInjection const& i);

//! Builds the bicyclic pair of a chain.  Throws NonRepresentable if the
//! verification p * q == start, q * p == second member fails (impossible
//! for chains produced by ChainSpec's rule; guards future variants).
BicyclicPair bicyclic_generators(ChainSpec const& chain);

//! Extends a finite strictly descending chain of idempotents to the
//! canonical maximal chain through it, returning the spec and its
//! bicyclic pair.  Each gap contributes its points in ascending order.
//! Throws NotAChain when the list is empty or not strictly descending.
std::pair<ChainSpec, BicyclicPair> embed_finite_chain(
    std::vector<CofiniteInjection> const& members);

//! The first `count` distinct members of {v * e_i}, a strictly descending
//! chain (consecutive duplicates arise exactly at removal points outside
//! dom v and are skipped).  Throws NotIdempotent when v is not
//! idempotent, ValidationError when count < 1.
std::vector<CofiniteInjection> translate_chain(CofiniteInjection const& v,
                                               ChainSpec const& chain,
                                               integer count);

}  // namespace cfinj

#endif  // CFINJ_CHAIN_HPP_
