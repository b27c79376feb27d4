#ifndef CFINJ_ORACLE_HPP_
#define CFINJ_ORACLE_HPP_

#include <optional>
#include <utility>
#include <vector>

#include "element.hpp"

namespace cfinj {
namespace oracle {

// Everything here re-derives semantics pointwise, sharing only the
// CofiniteInjection value type and apply with the symbolic engine.  Keep
// it that way: these functions are the independent side of every
// differential test.

//! A finite shadow of an element: its values on [0, width).
struct WindowTable {
  integer width = 0;
  std::vector<std::optional<integer>> rows;

  bool operator==(WindowTable const& other) const = default;

  //! Renders as "[0->_, 1->2, ...]" ("[]" when width is 0).
  std::string to_string() const;
};

//! The shadow of a on [0, width).
WindowTable window_eval(CofiniteInjection const& a, integer width);

//! Recomputes a * b pointwise from window tables and compares against
//! the engine's composite on [0, width).  The window must cover every
//! threshold involved plus both absolute shifts plus one, so that each
//! tail is sampled; otherwise WindowTooSmall.
bool oracle_compose_check(CofiniteInjection const& a,
                          CofiniteInjection const& b, integer width);

//! All partial injective maps from `points` into `targets`, as sorted
//! (point, value) assignment lists, the empty map included.  The count is
//! sum_j C(|points|,j) * C(|targets|,j) * j!.
std::vector<std::vector<std::pair<integer, integer>>>
enumerate_partial_injections(FiniteSet const& points,
                             FiniteSet const& targets);

//! Exhaustive solution set of a * x == b (side right) or x * a == b
//! (side left), built by enumerating every extension of the pointwise
//! forced restriction and filtering by pointwise verification.  Requires
//! all four complement sizes to be at most `bound` (BoundExceeded).
std::vector<CofiniteInjection> brute_force_solutions(
    Side side, CofiniteInjection const& a, CofiniteInjection const& b,
    integer bound = 4);

}  // namespace oracle
}  // namespace cfinj

#endif  // CFINJ_ORACLE_HPP_
