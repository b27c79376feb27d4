#include "cfinj/chain.hpp"

#include <algorithm>

namespace cfinj {

ChainSpec::ChainSpec(CofiniteInjection start, std::vector<integer> prefix)
    : _start(std::move(start)), _prefix(std::move(prefix)) {
  if (!_start.is_idempotent()) {
    throw NotIdempotent("chain start " + _start.to_string() +
                        " is not idempotent");
  }
  std::vector<integer> sorted = _prefix;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw ValidationError("chain prefix has repeated points");
  }
  for (integer x : _prefix) {
    if (x < 0) {
      throw ValidationError("chain prefix point " + std::to_string(x) +
                            " is negative");
    }
    if (!_start.apply(x)) {
      throw ValidationError("chain prefix point " + std::to_string(x) +
                            " is outside the start domain");
    }
  }
}

integer ChainSpec::hole(integer i) const {
  if (i < 1) {
    throw ValidationError("hole positions start at 1, got " +
                          std::to_string(i));
  }
  integer const m = static_cast<integer>(_prefix.size());
  if (i <= m) {
    return _prefix[static_cast<std::size_t>(i - 1)];
  }
  FiniteSet const blocked =
      _start.domain_complement().union_with(FiniteSet(_prefix));
  integer remaining = i - m;
  integer candidate = 0;
  while (true) {
    if (!blocked.contains(candidate)) {
      if (--remaining == 0) {
        return candidate;
      }
    }
    candidate = checked_add(candidate, 1);
  }
}

std::string ChainSpec::to_string() const {
  std::string out = "chain{start=" + _start.to_string() + "; prefix=[";
  for (std::size_t i = 0; i < _prefix.size(); ++i) {
    if (i != 0) {
      out += ",";
    }
    out += std::to_string(_prefix[i]);
  }
  out += "]}";
  return out;
}

CofiniteInjection chain_element(ChainSpec const& chain, integer i) {
  if (i < 1) {
    throw ValidationError("chain positions start at 1, got " +
                          std::to_string(i));
  }
  std::vector<integer> removed;
  removed.reserve(static_cast<std::size_t>(i - 1));
  for (integer j = 1; j < i; ++j) {
    removed.push_back(chain.hole(j));
  }
  return idempotent_on_complement(
      chain.start().domain_complement().union_with(
          FiniteSet(std::move(removed))));
}

bool covers(CofiniteInjection const& e, CofiniteInjection const& i) {
  for (CofiniteInjection const* arg : {&e, &i}) {
    if (!arg->is_idempotent()) {
      throw NotIdempotent("covers argument " + arg->to_string() +
                          " is not idempotent");
    }
  }
  if (!natural_leq(e, i)) {
    return false;
  }
  return e.domain_complement().minus(i.domain_complement()).size() == 1;
}

BicyclicPair bicyclic_generators(ChainSpec const& chain) {
  FiniteSet const dom_c = chain.start().domain_complement();
  FiniteSet const blocked = dom_c.union_with(FiniteSet(chain.prefix()));
  integer const t = blocked.empty() ? 0 : checked_add(blocked.max(), 1);
  if (t > CofiniteInjection::kMaxThreshold) {
    throw OverflowError("generator table of " + std::to_string(t) +
                        " rows, over cap " +
                        std::to_string(CofiniteInjection::kMaxThreshold));
  }
  integer first_remainder = 0;
  while (blocked.contains(first_remainder)) {
    ++first_remainder;
  }
  // p advances each removal point to the next one.  Beyond the table all
  // removal points are consecutive, so the tail is a plain shift.
  std::vector<integer> table(static_cast<std::size_t>(t),
                             CofiniteInjection::kUndef);
  std::vector<integer> const& prefix = chain.prefix();
  for (std::size_t j = 0; j + 1 < prefix.size(); ++j) {
    table[static_cast<std::size_t>(prefix[j])] = prefix[j + 1];
  }
  if (!prefix.empty()) {
    table[static_cast<std::size_t>(prefix.back())] = first_remainder;
  }
  for (integer n = 0; n < t; ++n) {
    if (blocked.contains(n)) {
      continue;
    }
    integer next = n + 1;
    while (blocked.contains(next)) {
      ++next;
    }
    table[static_cast<std::size_t>(n)] = next;
  }
  BicyclicPair pair;
  pair.p = CofiniteInjection(std::move(table), 1);
  pair.q = pair.p.inverse();
  pair.unit = chain.start();
  if (pair.p * pair.q != pair.unit ||
      pair.q * pair.p != chain_element(chain, 2)) {
    throw NonRepresentable("hole sequence does not yield bicyclic maps");
  }
  return pair;
}

std::pair<ChainSpec, BicyclicPair> embed_finite_chain(
    std::vector<CofiniteInjection> const& members) {
  if (members.empty()) {
    throw NotAChain("no chain members given");
  }
  std::vector<integer> prefix;
  for (std::size_t i = 0; i + 1 < members.size(); ++i) {
    if (!natural_leq(members[i + 1], members[i]) ||
        members[i + 1] == members[i]) {
      throw NotAChain("member " + std::to_string(i + 1) +
                      " does not descend strictly");
    }
    FiniteSet const gap = members[i + 1].domain_complement().minus(
        members[i].domain_complement());
    for (integer x : gap.elements()) {
      prefix.push_back(x);
    }
  }
  ChainSpec spec(members[0], std::move(prefix));
  BicyclicPair pair = bicyclic_generators(spec);
  return {std::move(spec), std::move(pair)};
}

std::vector<CofiniteInjection> translate_chain(CofiniteInjection const& v,
                                               ChainSpec const& chain,
                                               integer count) {
  if (!v.is_idempotent()) {
    throw NotIdempotent("translating element " + v.to_string() +
                        " is not idempotent");
  }
  if (count < 1) {
    throw ValidationError("need a positive count, got " +
                          std::to_string(count));
  }
  std::vector<CofiniteInjection> out;
  out.reserve(static_cast<std::size_t>(count));
  for (integer i = 1; static_cast<integer>(out.size()) < count; ++i) {
    CofiniteInjection cur = v * chain_element(chain, i);
    if (out.empty() || cur != out.back()) {
      out.push_back(std::move(cur));
    }
  }
  return out;
}

}  // namespace cfinj
