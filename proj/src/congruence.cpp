#include "cfinj/congruence.hpp"

#include <algorithm>
#include <stdexcept>

namespace cfinj {

integer index_hom(CofiniteInjection const& a) { return a.stats().index; }

bool d_equiv(CofiniteInjection const& a, CofiniteInjection const& b) {
  return index_hom(a) == index_hom(b);
}

std::optional<CofiniteInjection> sigma_related(CofiniteInjection const& a,
                                               CofiniteInjection const& b) {
  // Witness route: a and b agree on a cofinite set iff their tails agree,
  // i.e. iff the shifts are equal; then cutting both off below
  // M = max threshold + max(0, shift) erases every tabulated difference.
  bool const witness_route = a.shift() == b.shift();
  if (witness_route != d_equiv(a, b)) {
    throw std::logic_error("witness route disagrees with the index route");
  }
  if (!witness_route) {
    return std::nullopt;
  }
  integer const m = checked_add(std::max(a.threshold(), b.threshold()),
                                std::max(integer(0), a.shift()));
  CofiniteInjection const eps = idempotent_on_complement(FiniteSet::range(m));
  if (a * eps != b * eps) {
    throw std::logic_error("sigma witness failed verification");
  }
  return eps;
}

std::pair<CofiniteInjection, CofiniteInjection> unit_representative(
    CofiniteInjection const& b) {
  Stats const s = b.stats();
  if (s.dbar != s.rbar) {
    throw IndexNonzero("complement sizes " + std::to_string(s.dbar) +
                       " and " + std::to_string(s.rbar) + " differ");
  }
  // Equal complement sizes force shift 0, so the range holes fit inside
  // the table rows after the ascending fill.
  std::vector<integer> table = b.table();
  FiniteSet const holes = b.domain_complement();
  FiniteSet const targets = b.range_complement();
  for (std::size_t i = 0; i < holes.elements().size(); ++i) {
    table[static_cast<std::size_t>(holes.elements()[i])] =
        targets.elements()[i];
  }
  CofiniteInjection unit(std::move(table), b.shift());
  CofiniteInjection eps = idempotent_on_complement(b.range_complement());
  if (unit * eps != b * eps) {
    throw std::logic_error("unit representative failed verification");
  }
  return {std::move(unit), std::move(eps)};
}

namespace {

//! All partial injective maps from `points` into `targets`, emitted as
//! (point, value) assignment lists.  Distinct from the oracle's
//! enumerator on purpose: the two sides of the differential tests must
//! not share enumeration code.
void extend_assignments(std::vector<integer> const& points,
                        std::vector<integer> const& targets,
                        std::size_t next, std::vector<bool>& used,
                        std::vector<std::pair<integer, integer>>& current,
                        std::vector<std::vector<std::pair<integer, integer>>>&
                            out) {
  if (next == points.size()) {
    out.push_back(current);
    return;
  }
  extend_assignments(points, targets, next + 1, used, current, out);
  for (std::size_t t = 0; t < targets.size(); ++t) {
    if (used[t]) {
      continue;
    }
    used[t] = true;
    current.emplace_back(points[next], targets[t]);
    extend_assignments(points, targets, next + 1, used, current, out);
    current.pop_back();
    used[t] = false;
  }
}

std::vector<CofiniteInjection> solve_right(CofiniteInjection const& a,
                                           CofiniteInjection const& b) {
  // a * x == b needs dom b inside dom a: x cannot resurrect a hole of a.
  if (!a.domain_complement().subset_of(b.domain_complement())) {
    return {};
  }
  // On ran a every solution is forced to the composite below; freedom is
  // exactly a partial injective assignment of the missed points of a into
  // the missed points of the composite.
  CofiniteInjection const forced = a.inverse() * b;
  FiniteSet const free_point_set = a.range_complement();
  FiniteSet const free_target_set = forced.range_complement();
  std::vector<integer> const& free_points = free_point_set.elements();
  std::vector<integer> const& free_targets = free_target_set.elements();
  std::vector<std::vector<std::pair<integer, integer>>> assignments;
  {
    std::vector<bool> used(free_targets.size(), false);
    std::vector<std::pair<integer, integer>> current;
    extend_assignments(free_points, free_targets, 0, used, current,
                       assignments);
  }
  std::vector<CofiniteInjection> out;
  out.reserve(assignments.size());
  for (auto const& assignment : assignments) {
    // Missed points of a sit below the forced threshold (the forced map
    // is undefined there), so the table needs no extra rows.
    std::vector<integer> table = forced.table();
    for (auto const& [point, value] : assignment) {
      table[static_cast<std::size_t>(point)] = value;
    }
    CofiniteInjection candidate(std::move(table), forced.shift());
    if (a * candidate != b) {
      throw std::logic_error("translation solution failed verification");
    }
    out.push_back(std::move(candidate));
  }
  std::sort(out.begin(), out.end(), canonical_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::vector<CofiniteInjection> solve_translation(Side side,
                                                 CofiniteInjection const& a,
                                                 CofiniteInjection const& b) {
  if (side == Side::right) {
    return solve_right(a, b);
  }
  // x * a == b inverts to a^-1 * x^-1 == b^-1, a right problem.
  std::vector<CofiniteInjection> out;
  for (CofiniteInjection const& s : solve_right(a.inverse(), b.inverse())) {
    CofiniteInjection candidate = s.inverse();
    if (candidate * a != b) {
      throw std::logic_error("translation solution failed verification");
    }
    out.push_back(std::move(candidate));
  }
  std::sort(out.begin(), out.end(), canonical_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace cfinj
