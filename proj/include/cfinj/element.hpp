#ifndef CFINJ_ELEMENT_HPP_
#define CFINJ_ELEMENT_HPP_

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"

namespace cfinj {

using integer = std::int64_t;

//! Addition that raises OverflowError instead of wrapping.
integer checked_add(integer a, integer b);
//! Subtraction that raises OverflowError instead of wrapping.
integer checked_sub(integer a, integer b);

//! Which side of a translation equation the unknown sits on:
//! right solves a * x = b, left solves x * a = b.
enum class Side { left, right };

//! A finite set of naturals, kept sorted and duplicate-free.
//!
//! Used for domain/range complements; union is the semilattice operation
//! the idempotents map onto.
class FiniteSet {
 public:
  FiniteSet() = default;
  //! Sorts and deduplicates; rejects negative entries.
  explicit FiniteSet(std::vector<integer> elements);
  //! The initial segment {0, ..., n-1}.
  static FiniteSet range(integer n);

  bool contains(integer x) const;
  bool subset_of(FiniteSet const& other) const;
  FiniteSet union_with(FiniteSet const& other) const;
  FiniteSet minus(FiniteSet const& other) const;

  integer size() const { return static_cast<integer>(_elements.size()); }
  bool empty() const { return _elements.empty(); }
  //! Largest element; set must be nonempty.
  integer max() const;
  std::vector<integer> const& elements() const { return _elements; }

  bool operator==(FiniteSet const& other) const = default;

  //! Renders as "{0,1,3}" ("{}" when empty).
  std::string to_string() const;

 private:
  std::vector<integer> _elements;
};

std::ostream& operator<<(std::ostream& os, FiniteSet const& s);

//! Sizes of the two complements of an element, and their difference.
struct Stats {
  integer dbar;   // |naturals \ dom|
  integer rbar;   // |naturals \ ran|
  integer index;  // dbar - rbar

  bool operator==(Stats const& other) const = default;
};

//! Classification flags for an element; mutually consistent
//! (unit implies finitary_unit here, general excludes the others).
struct ElementClass {
  bool unit;
  bool finitary_unit;
  bool idempotent;
  bool general;

  bool operator==(ElementClass const& other) const = default;
};

//! An injective partial selfmap of the naturals with cofinite domain and
//! cofinite range, restricted to the eventually-shift fragment:
//!
//!   n |-> table[n]        for n <  threshold  (or undefined),
//!   n |-> n + shift       for n >= threshold.
//!
//! Values are kept in canonical normal form:
//!   * threshold + shift >= 0 (the tail stays inside the naturals);
//!   * defined table values are pairwise distinct and < threshold + shift;
//!   * the threshold is minimal: the top row is never "defined with its own
//!     tail value", otherwise it would be absorbed into the tail.
//!
//! Two values denote the same partial map iff they are field-identical, so
//! operator== decides semantic equality.  All operations are pure; values
//! are immutable after construction and safe to share across threads.
//!
//! Composition is left-to-right throughout: (a * b)(n) = b(a(n)).
class CofiniteInjection {
 public:
  //! Marker for an undefined table row.
  static constexpr integer kUndef = -1;
  //! Hard cap on table sizes; crossing it raises OverflowError.
  static constexpr integer kMaxThreshold = integer(1) << 22;

  //! The identity map.
  CofiniteInjection() = default;

  //! Normalizing constructor.  `table` holds one entry per row in
  //! [0, table.size()), with kUndef marking rows outside the domain.
  //! Validates the invariants and lowers the threshold to its minimum.
  //! Throws NegativeTail, TailCollision, InjectivityViolation,
  //! OverflowError or ValidationError.
  CofiniteInjection(std::vector<integer> table, integer shift);

  static CofiniteInjection identity() { return CofiniteInjection(); }

  //! The map n |-> n + k (restricted to n >= -k when k < 0).
  static CofiniteInjection shift_map(integer k);

  //! Value at n, or nullopt when n is outside the domain.
  std::optional<integer> apply(integer n) const;

  //! The inverse partial map; an involution.
  CofiniteInjection inverse() const;

  integer shift() const { return _shift; }
  integer threshold() const { return static_cast<integer>(_table.size()); }
  std::vector<integer> const& table() const { return _table; }

  //! Rows outside the domain, as a finite set.
  FiniteSet domain_complement() const;
  //! Naturals below threshold + shift missed by the map.
  FiniteSet range_complement() const;
  //! Complement sizes and their difference (the index).
  Stats stats() const;

  //! True iff shift is zero and every defined row is fixed.
  bool is_idempotent() const;
  bool is_identity() const { return _table.empty() && _shift == 0; }
  ElementClass classify() const;

  //! Canonical text form, e.g. "cfinj{k=0; N=1; t=[0->_]}".
  std::string to_string() const;

  bool operator==(CofiniteInjection const& other) const = default;

 private:
  integer _shift = 0;
  std::vector<integer> _table;  // size == threshold; kUndef == undefined
};

//! Left-to-right composition: apply `a` first, then `b`.
CofiniteInjection operator*(CofiniteInjection const& a,
                            CofiniteInjection const& b);

std::ostream& operator<<(std::ostream& os, CofiniteInjection const& a);

//! The identity map on the complement of `s`; inverse of the bijection
//! sending an idempotent to its domain complement.
CofiniteInjection idempotent_on_complement(FiniteSet const& s);

//! Natural partial order on idempotents: e <= i iff dom e is contained in
//! dom i.  Throws NotIdempotent when either argument is not idempotent.
bool natural_leq(CofiniteInjection const& e, CofiniteInjection const& i);

//! n-th monoid power; negative n means powers of the inverse.
CofiniteInjection pow(CofiniteInjection const& a, integer n);

//! Orders elements by their serialized form; the canonical ordering for
//! multi-element results.
bool canonical_less(CofiniteInjection const& a, CofiniteInjection const& b);

}  // namespace cfinj

#endif  // CFINJ_ELEMENT_HPP_
