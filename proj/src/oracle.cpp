#include "cfinj/oracle.hpp"

#include <algorithm>
#include <cstdlib>

namespace cfinj {
namespace oracle {

namespace {

//! Smallest x with a(x) == y, pointwise: scans the exception rows, then
//! tries the single tail candidate.
std::optional<integer> pw_preimage(CofiniteInjection const& a, integer y) {
  for (integer x = 0; x < a.threshold(); ++x) {
    if (a.apply(x) == std::optional<integer>(y)) {
      return x;
    }
  }
  integer const x = checked_sub(y, a.shift());
  if (x >= a.threshold() && x >= 0 && a.apply(x) == std::optional<integer>(y)) {
    return x;
  }
  return std::nullopt;
}

FiniteSet pw_dom_complement(CofiniteInjection const& a) {
  std::vector<integer> holes;
  for (integer x = 0; x < a.threshold(); ++x) {
    if (!a.apply(x)) {
      holes.push_back(x);
    }
  }
  return FiniteSet(std::move(holes));
}

FiniteSet pw_ran_complement(CofiniteInjection const& a) {
  integer const tail_start = checked_add(a.threshold(), a.shift());
  std::vector<integer> missed;
  for (integer y = 0; y < tail_start; ++y) {
    if (!pw_preimage(a, y)) {
      missed.push_back(y);
    }
  }
  return FiniteSet(std::move(missed));
}

CofiniteInjection pw_inverse(CofiniteInjection const& a) {
  integer const tail_start = checked_add(a.threshold(), a.shift());
  std::vector<integer> table(static_cast<std::size_t>(tail_start),
                             CofiniteInjection::kUndef);
  for (integer y = 0; y < tail_start; ++y) {
    if (auto const x = pw_preimage(a, y)) {
      table[static_cast<std::size_t>(y)] = *x;
    }
  }
  return CofiniteInjection(std::move(table), -a.shift());
}

//! Pointwise check of a * x == b: equal total shift, then value-by-value
//! agreement on a window past every threshold (tails agree beyond it).
bool pw_holds_right(CofiniteInjection const& a, CofiniteInjection const& x,
                    CofiniteInjection const& b) {
  if (checked_add(a.shift(), x.shift()) != b.shift()) {
    return false;
  }
  integer const width =
      std::max({a.threshold(), b.threshold(),
                checked_sub(x.threshold(), a.shift()), integer(0)}) +
      2;
  for (integer n = 0; n < width; ++n) {
    auto const mid = a.apply(n);
    auto const composite = mid ? x.apply(*mid) : std::optional<integer>();
    if (composite != b.apply(n)) {
      return false;
    }
  }
  return true;
}

bool pw_holds_left(CofiniteInjection const& a, CofiniteInjection const& x,
                   CofiniteInjection const& b) {
  if (checked_add(x.shift(), a.shift()) != b.shift()) {
    return false;
  }
  integer const width =
      std::max({x.threshold(), b.threshold(),
                checked_sub(a.threshold(), x.shift()), integer(0)}) +
      2;
  for (integer n = 0; n < width; ++n) {
    auto const mid = x.apply(n);
    auto const composite = mid ? a.apply(*mid) : std::optional<integer>();
    if (composite != b.apply(n)) {
      return false;
    }
  }
  return true;
}

void check_bound(CofiniteInjection const& a, integer bound,
                 char const* which) {
  integer const dbar = pw_dom_complement(a).size();
  integer const rbar = pw_ran_complement(a).size();
  if (dbar > bound || rbar > bound) {
    throw BoundExceeded(std::string(which) + " has complement sizes " +
                        std::to_string(dbar) + "/" + std::to_string(rbar) +
                        ", over the bound " + std::to_string(bound));
  }
}

std::vector<CofiniteInjection> brute_right(CofiniteInjection const& a,
                                           CofiniteInjection const& b) {
  // a * x == b forces x == a^-1 * b on ran a; it is unsolvable when b is
  // defined somewhere a is not.
  integer const max_threshold = std::max(a.threshold(), b.threshold());
  for (integer n = 0; n < max_threshold; ++n) {
    if (b.apply(n) && !a.apply(n)) {
      return {};
    }
  }
  integer const shift = checked_sub(b.shift(), a.shift());
  integer const forced_rows = checked_add(max_threshold, a.shift());
  integer const tail_start = checked_add(forced_rows, shift);
  std::vector<integer> forced(static_cast<std::size_t>(forced_rows),
                              CofiniteInjection::kUndef);
  std::vector<bool> taken(static_cast<std::size_t>(tail_start), false);
  for (integer y = 0; y < forced_rows; ++y) {
    auto const x = pw_preimage(a, y);
    if (!x) {
      continue;
    }
    if (auto const v = b.apply(*x)) {
      forced[static_cast<std::size_t>(y)] = *v;
      taken[static_cast<std::size_t>(*v)] = true;
    }
  }
  FiniteSet const points = pw_ran_complement(a);
  std::vector<integer> free_targets;
  for (integer v = 0; v < tail_start; ++v) {
    if (!taken[static_cast<std::size_t>(v)]) {
      free_targets.push_back(v);
    }
  }
  std::vector<CofiniteInjection> out;
  for (auto const& assignment : enumerate_partial_injections(
           points, FiniteSet(std::move(free_targets)))) {
    std::vector<integer> table = forced;
    for (auto const& [point, value] : assignment) {
      table[static_cast<std::size_t>(point)] = value;
    }
    CofiniteInjection candidate(std::move(table), shift);
    if (pw_holds_right(a, candidate, b)) {
      out.push_back(std::move(candidate));
    }
  }
  std::sort(out.begin(), out.end(), [](auto const& lhs, auto const& rhs) {
    return lhs.to_string() < rhs.to_string();
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::string WindowTable::to_string() const {
  std::string out = "[";
  for (integer n = 0; n < width; ++n) {
    if (n != 0) {
      out += ", ";
    }
    auto const& v = rows[static_cast<std::size_t>(n)];
    out += std::to_string(n) + "->";
    out += v ? std::to_string(*v) : "_";
  }
  out += "]";
  return out;
}

WindowTable window_eval(CofiniteInjection const& a, integer width) {
  if (width < 0) {
    throw ValidationError("window width " + std::to_string(width) +
                          " is negative");
  }
  WindowTable w;
  w.width = width;
  w.rows.reserve(static_cast<std::size_t>(width));
  for (integer n = 0; n < width; ++n) {
    w.rows.push_back(a.apply(n));
  }
  return w;
}

bool oracle_compose_check(CofiniteInjection const& a,
                          CofiniteInjection const& b, integer width) {
  CofiniteInjection const product = a * b;
  integer const needed = checked_add(
      std::max({a.threshold(), b.threshold(), product.threshold()}),
      checked_add(checked_add(std::abs(a.shift()), std::abs(b.shift())),
                  integer(1)));
  if (width < needed) {
    throw WindowTooSmall("window " + std::to_string(width) +
                         " is below the sufficient width " +
                         std::to_string(needed));
  }
  WindowTable const engine = window_eval(product, width);
  WindowTable const wa = window_eval(a, width);
  integer inner_width = 0;
  for (auto const& v : wa.rows) {
    if (v) {
      inner_width = std::max(inner_width, *v + 1);
    }
  }
  WindowTable const wb = window_eval(b, inner_width);
  for (integer n = 0; n < width; ++n) {
    auto const mid = wa.rows[static_cast<std::size_t>(n)];
    auto const recomputed =
        mid ? wb.rows[static_cast<std::size_t>(*mid)]
            : std::optional<integer>();
    if (recomputed != engine.rows[static_cast<std::size_t>(n)]) {
      return false;
    }
  }
  return true;
}

std::vector<std::vector<std::pair<integer, integer>>>
enumerate_partial_injections(FiniteSet const& points,
                             FiniteSet const& targets) {
  std::vector<std::vector<std::pair<integer, integer>>> out;
  std::vector<std::pair<integer, integer>> current;
  std::vector<bool> used(targets.elements().size(), false);
  auto recurse = [&](auto&& self, std::size_t next) -> void {
    if (next == points.elements().size()) {
      out.push_back(current);
      return;
    }
    self(self, next + 1);
    for (std::size_t t = 0; t < targets.elements().size(); ++t) {
      if (used[t]) {
        continue;
      }
      used[t] = true;
      current.emplace_back(points.elements()[next], targets.elements()[t]);
      self(self, next + 1);
      current.pop_back();
      used[t] = false;
    }
  };
  recurse(recurse, 0);
  // Canonical order: lexicographic on the assignment lists, so the empty
  // map comes first.
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CofiniteInjection> brute_force_solutions(Side side,
                                                     CofiniteInjection const& a,
                                                     CofiniteInjection const& b,
                                                     integer bound) {
  check_bound(a, bound, "first argument");
  check_bound(b, bound, "second argument");
  if (side == Side::right) {
    return brute_right(a, b);
  }
  std::vector<CofiniteInjection> out;
  for (CofiniteInjection const& s :
       brute_right(pw_inverse(a), pw_inverse(b))) {
    CofiniteInjection candidate = pw_inverse(s);
    if (pw_holds_left(a, candidate, b)) {
      out.push_back(std::move(candidate));
    }
  }
  std::sort(out.begin(), out.end(), [](auto const& lhs, auto const& rhs) {
    return lhs.to_string() < rhs.to_string();
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace oracle
}  // namespace cfinj
