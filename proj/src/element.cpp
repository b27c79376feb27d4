#include "cfinj/element.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace cfinj {

integer checked_add(integer a, integer b) {
  integer out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw OverflowError("integer overflow computing " + std::to_string(a) +
                        " + " + std::to_string(b));
  }
  return out;
}

integer checked_sub(integer a, integer b) {
  integer out = 0;
  if (__builtin_sub_overflow(a, b, &out)) {
    throw OverflowError("integer overflow computing " + std::to_string(a) +
                        " - " + std::to_string(b));
  }
  return out;
}

FiniteSet::FiniteSet(std::vector<integer> elements)
    : _elements(std::move(elements)) {
  for (integer x : _elements) {
    if (x < 0) {
      throw ValidationError("finite set element " + std::to_string(x) +
                            " is negative");
    }
  }
  std::sort(_elements.begin(), _elements.end());
  _elements.erase(std::unique(_elements.begin(), _elements.end()),
                  _elements.end());
}

FiniteSet FiniteSet::range(integer n) {
  if (n > CofiniteInjection::kMaxThreshold) {
    throw OverflowError("initial segment of length " + std::to_string(n) +
                        " exceeds cap " +
                        std::to_string(CofiniteInjection::kMaxThreshold));
  }
  std::vector<integer> elements;
  for (integer i = 0; i < n; ++i) {
    elements.push_back(i);
  }
  return FiniteSet(std::move(elements));
}

bool FiniteSet::contains(integer x) const {
  return std::binary_search(_elements.begin(), _elements.end(), x);
}

bool FiniteSet::subset_of(FiniteSet const& other) const {
  return std::includes(other._elements.begin(), other._elements.end(),
                       _elements.begin(), _elements.end());
}

FiniteSet FiniteSet::union_with(FiniteSet const& other) const {
  std::vector<integer> out;
  out.reserve(_elements.size() + other._elements.size());
  std::set_union(_elements.begin(), _elements.end(), other._elements.begin(),
                 other._elements.end(), std::back_inserter(out));
  return FiniteSet(std::move(out));
}

FiniteSet FiniteSet::minus(FiniteSet const& other) const {
  std::vector<integer> out;
  std::set_difference(_elements.begin(), _elements.end(),
                      other._elements.begin(), other._elements.end(),
                      std::back_inserter(out));
  return FiniteSet(std::move(out));
}

integer FiniteSet::max() const {
  if (_elements.empty()) {
    throw std::logic_error("max of empty finite set");
  }
  return _elements.back();
}

std::string FiniteSet::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < _elements.size(); ++i) {
    if (i != 0) {
      out += ",";
    }
    out += std::to_string(_elements[i]);
  }
  out += "}";
  return out;
}

std::ostream& operator<<(std::ostream& os, FiniteSet const& s) {
  return os << s.to_string();
}

CofiniteInjection::CofiniteInjection(std::vector<integer> table, integer shift)
    : _shift(shift), _table(std::move(table)) {
  integer const n = static_cast<integer>(_table.size());
  if (n > kMaxThreshold) {
    throw OverflowError("table of " + std::to_string(n) +
                        " rows exceeds cap " + std::to_string(kMaxThreshold));
  }
  integer const tail_start = checked_add(n, _shift);
  if (tail_start < 0) {
    throw NegativeTail("tail start " + std::to_string(n) + " + " +
                       std::to_string(_shift) + " is negative");
  }
  std::vector<integer> defined;
  defined.reserve(_table.size());
  for (integer row = 0; row < n; ++row) {
    integer const v = _table[row];
    if (v == kUndef) {
      continue;
    }
    if (v < 0) {
      throw ValidationError("row " + std::to_string(row) + " maps to " +
                            std::to_string(v) + ", not a natural");
    }
    if (v >= tail_start) {
      throw TailCollision("row " + std::to_string(row) + " maps to " +
                          std::to_string(v) + ", inside the tail image [" +
                          std::to_string(tail_start) + ",oo)");
    }
    defined.push_back(v);
  }
  std::sort(defined.begin(), defined.end());
  auto const dup = std::adjacent_find(defined.begin(), defined.end());
  if (dup != defined.end()) {
    throw InjectivityViolation("value " + std::to_string(*dup) +
                               " is hit twice");
  }
  // Minimality: absorb top rows that agree with the tail rule.  Popped rows
  // carry exactly the values [new tail start, old tail start), so the value
  // bound keeps holding for the rows that remain.
  while (!_table.empty()) {
    integer const top = static_cast<integer>(_table.size()) - 1;
    if (_table.back() == kUndef || _table.back() != top + _shift) {
      break;
    }
    _table.pop_back();
  }
}

CofiniteInjection CofiniteInjection::shift_map(integer k) {
  if (k >= 0) {
    return CofiniteInjection({}, k);
  }
  if (-k > kMaxThreshold) {
    throw OverflowError("shift by " + std::to_string(k) +
                        " needs more than " + std::to_string(kMaxThreshold) +
                        " rows");
  }
  std::vector<integer> table(static_cast<std::size_t>(-k), kUndef);
  return CofiniteInjection(std::move(table), k);
}

std::optional<integer> CofiniteInjection::apply(integer n) const {
  if (n < 0) {
    throw ValidationError("apply: argument " + std::to_string(n) +
                          " is negative");
  }
  if (n < threshold()) {
    integer const v = _table[static_cast<std::size_t>(n)];
    if (v == kUndef) {
      return std::nullopt;
    }
    return v;
  }
  return checked_add(n, _shift);
}

CofiniteInjection CofiniteInjection::inverse() const {
  integer const tail_start = checked_add(threshold(), _shift);
  if (tail_start > kMaxThreshold) {
    throw OverflowError("inverse needs " + std::to_string(tail_start) +
                        " rows, over cap " + std::to_string(kMaxThreshold));
  }
  std::vector<integer> table(static_cast<std::size_t>(tail_start), kUndef);
  for (integer row = 0; row < threshold(); ++row) {
    integer const v = _table[static_cast<std::size_t>(row)];
    if (v != kUndef) {
      table[static_cast<std::size_t>(v)] = row;
    }
  }
  return CofiniteInjection(std::move(table), -_shift);
}

CofiniteInjection operator*(CofiniteInjection const& a,
                            CofiniteInjection const& b) {
  integer const n =
      std::max({a.threshold(), checked_sub(b.threshold(), a.shift()),
                integer(0)});
  if (n > CofiniteInjection::kMaxThreshold) {
    throw OverflowError("composite needs " + std::to_string(n) +
                        " rows, over cap " +
                        std::to_string(CofiniteInjection::kMaxThreshold));
  }
  std::vector<integer> table(static_cast<std::size_t>(n),
                             CofiniteInjection::kUndef);
  for (integer row = 0; row < n; ++row) {
    auto const mid = a.apply(row);
    if (!mid) {
      continue;
    }
    auto const out = b.apply(*mid);
    if (out) {
      table[static_cast<std::size_t>(row)] = *out;
    }
  }
  return CofiniteInjection(std::move(table),
                           checked_add(a.shift(), b.shift()));
}

FiniteSet CofiniteInjection::domain_complement() const {
  std::vector<integer> holes;
  for (integer row = 0; row < threshold(); ++row) {
    if (_table[static_cast<std::size_t>(row)] == kUndef) {
      holes.push_back(row);
    }
  }
  return FiniteSet(std::move(holes));
}

FiniteSet CofiniteInjection::range_complement() const {
  integer const tail_start = checked_add(threshold(), _shift);
  if (tail_start > kMaxThreshold) {
    throw OverflowError("range complement of " + std::to_string(tail_start) +
                        " candidates, over cap " +
                        std::to_string(kMaxThreshold));
  }
  std::vector<bool> hit(static_cast<std::size_t>(tail_start), false);
  for (integer v : _table) {
    if (v != kUndef) {
      hit[static_cast<std::size_t>(v)] = true;
    }
  }
  std::vector<integer> missed;
  for (integer v = 0; v < tail_start; ++v) {
    if (!hit[static_cast<std::size_t>(v)]) {
      missed.push_back(v);
    }
  }
  return FiniteSet(std::move(missed));
}

Stats CofiniteInjection::stats() const {
  integer undefined = 0;
  for (integer v : _table) {
    if (v == kUndef) {
      ++undefined;
    }
  }
  integer const defined = threshold() - undefined;
  integer const tail_start = checked_add(threshold(), _shift);
  Stats s{};
  s.dbar = undefined;
  s.rbar = checked_sub(tail_start, defined);
  s.index = checked_sub(s.dbar, s.rbar);
  return s;
}

bool CofiniteInjection::is_idempotent() const {
  if (_shift != 0) {
    return false;
  }
  for (integer row = 0; row < threshold(); ++row) {
    integer const v = _table[static_cast<std::size_t>(row)];
    if (v != kUndef && v != row) {
      return false;
    }
  }
  return true;
}

ElementClass CofiniteInjection::classify() const {
  Stats const s = stats();
  ElementClass c{};
  c.unit = s.dbar == 0 && s.rbar == 0;
  c.finitary_unit = c.unit;  // a total bijection here fixes the whole tail
  c.idempotent = is_idempotent();
  c.general = !c.unit && !c.idempotent;
  return c;
}

std::string CofiniteInjection::to_string() const {
  std::string out = "cfinj{k=" + std::to_string(_shift) +
                    "; N=" + std::to_string(threshold()) + "; t=[";
  for (integer row = 0; row < threshold(); ++row) {
    if (row != 0) {
      out += ", ";
    }
    integer const v = _table[static_cast<std::size_t>(row)];
    out += std::to_string(row) + "->";
    out += v == kUndef ? "_" : std::to_string(v);
  }
  out += "]}";
  return out;
}

std::ostream& operator<<(std::ostream& os, CofiniteInjection const& a) {
  return os << a.to_string();
}

CofiniteInjection idempotent_on_complement(FiniteSet const& s) {
  if (s.empty()) {
    return CofiniteInjection::identity();
  }
  integer const n = checked_add(s.max(), 1);
  if (n > CofiniteInjection::kMaxThreshold) {
    throw OverflowError("idempotent on complement of a set reaching " +
                        std::to_string(s.max()) + ", over cap " +
                        std::to_string(CofiniteInjection::kMaxThreshold));
  }
  std::vector<integer> table(static_cast<std::size_t>(n));
  for (integer row = 0; row < n; ++row) {
    table[static_cast<std::size_t>(row)] =
        s.contains(row) ? CofiniteInjection::kUndef : row;
  }
  return CofiniteInjection(std::move(table), 0);
}

bool natural_leq(CofiniteInjection const& e, CofiniteInjection const& i) {
  if (!e.is_idempotent()) {
    throw NotIdempotent("left argument " + e.to_string() +
                        " is not idempotent");
  }
  if (!i.is_idempotent()) {
    throw NotIdempotent("right argument " + i.to_string() +
                        " is not idempotent");
  }
  return i.domain_complement().subset_of(e.domain_complement());
}

CofiniteInjection pow(CofiniteInjection const& a, integer n) {
  CofiniteInjection base = n < 0 ? a.inverse() : a;
  auto m = n < 0 ? -static_cast<std::uint64_t>(n)
                 : static_cast<std::uint64_t>(n);
  CofiniteInjection result;
  while (m != 0) {
    if ((m & 1) != 0) {
      result = result * base;
    }
    m >>= 1;
    if (m != 0) {
      base = base * base;
    }
  }
  return result;
}

bool canonical_less(CofiniteInjection const& a, CofiniteInjection const& b) {
  return a.to_string() < b.to_string();
}

}  // namespace cfinj
