#include "cfinj/green.hpp"

#include <algorithm>
#include <stdexcept>

namespace cfinj {

bool related(GreenRelation rel, CofiniteInjection const& a,
             CofiniteInjection const& b) {
  switch (rel) {
    case GreenRelation::R:
      return a.domain_complement() == b.domain_complement();
    case GreenRelation::L:
      return a.range_complement() == b.range_complement();
    case GreenRelation::H:
      return related(GreenRelation::R, a, b) &&
             related(GreenRelation::L, a, b);
    case GreenRelation::D:
    case GreenRelation::J:
      // One D-class and one J-class; d_witness and simple_factorization
      // are the constructive certificates.
      return true;
  }
  throw std::logic_error("unhandled Green relation");
}

CofiniteInjection h_class_element(FiniteSet const& dom_c,
                                  FiniteSet const& ran_c) {
  integer const shift = ran_c.size() - dom_c.size();
  integer first_tail = 0;
  if (!dom_c.empty()) {
    first_tail = std::max(first_tail, checked_add(dom_c.max(), 1));
  }
  if (!ran_c.empty()) {
    first_tail =
        std::max(first_tail, checked_sub(checked_add(ran_c.max(), 1), shift));
  }
  if (first_tail > CofiniteInjection::kMaxThreshold) {
    throw OverflowError("matching needs " + std::to_string(first_tail) +
                        " rows, over cap " +
                        std::to_string(CofiniteInjection::kMaxThreshold));
  }
  std::vector<integer> table(static_cast<std::size_t>(first_tail),
                             CofiniteInjection::kUndef);
  integer target = 0;
  for (integer n = 0; n < first_tail; ++n) {
    if (dom_c.contains(n)) {
      continue;
    }
    while (ran_c.contains(target)) {
      ++target;
    }
    table[static_cast<std::size_t>(n)] = target;
    ++target;
  }
  return CofiniteInjection(std::move(table), shift);
}

CofiniteInjection d_witness(CofiniteInjection const& a,
                            CofiniteInjection const& b) {
  return h_class_element(a.domain_complement(), b.range_complement());
}

std::pair<CofiniteInjection, CofiniteInjection> simple_factorization(
    CofiniteInjection const& a, CofiniteInjection const& b) {
  CofiniteInjection const g =
      h_class_element(b.domain_complement(), a.domain_complement());
  CofiniteInjection const d = (g * a).inverse() * b;
  if (g * a * d != b) {
    throw std::logic_error("factorization failed to reproduce its target");
  }
  return {g, d};
}

std::pair<CofiniteInjection, integer> separating_idempotent(
    CofiniteInjection const& g) {
  if (!g.classify().unit) {
    throw NotAUnit(g.to_string() + " is not a unit");
  }
  if (g.is_identity()) {
    throw IsIdentity("the identity moves no point");
  }
  // A non-identity unit has a fully defined, shift-free table with a
  // non-fixed top row, so a moved point exists below the threshold.
  integer x0 = 0;
  while (g.table()[static_cast<std::size_t>(x0)] == x0) {
    ++x0;
  }
  return {idempotent_on_complement(FiniteSet({x0})), x0};
}

}  // namespace cfinj
