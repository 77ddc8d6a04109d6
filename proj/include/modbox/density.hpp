#pragma once

// Natural density on subsets of the positive integers: exact rational
// counting estimates, certified limits for eventually periodic sets, and
// the failure of countable additivity as an executable report.

#include <boost/rational.hpp>

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace modbox::density {

using Rational = boost::rational<long long>;

// Set description tree. Progression and Finite carry their own data;
// Union and Intersection own a child list, Complement exactly one child.
// Predicate is a membership test only: it supports counting but carries
// no certificate, so no limit is ever reported for it.
struct IntegerSet {
  enum class Kind { Progression, Finite, Union, Intersection, Complement, Predicate };

  Kind kind = Kind::Finite;
  long long offset = 0;
  long long modulus = 1;
  std::vector<long long> elements;
  std::vector<IntegerSet> children;
  std::function<bool(long long)> test;
};

// Positive integers congruent to offset modulo modulus.
inline IntegerSet progression(long long offset, long long modulus) {
  if (offset < 0) throw std::invalid_argument("progression: offset must be >= 0");
  if (modulus < 1) throw std::invalid_argument("progression: modulus must be >= 1");
  IntegerSet set;
  set.kind = IntegerSet::Kind::Progression;
  set.offset = offset % modulus;
  set.modulus = modulus;
  return set;
}

inline IntegerSet naturals() { return progression(0, 1); }

inline IntegerSet finite_set(std::vector<long long> elements) {
  std::sort(elements.begin(), elements.end());
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (elements[i] < 1)
      throw std::invalid_argument("finite_set: element " + std::to_string(elements[i]) +
                                  " is not a positive integer");
    if (i > 0 && elements[i] == elements[i - 1])
      throw std::invalid_argument("finite_set: duplicate element " +
                                  std::to_string(elements[i]));
  }
  IntegerSet set;
  set.kind = IntegerSet::Kind::Finite;
  set.elements = std::move(elements);
  return set;
}

inline IntegerSet set_union(std::vector<IntegerSet> children) {
  if (children.empty()) throw std::invalid_argument("set_union: needs at least one child");
  IntegerSet set;
  set.kind = IntegerSet::Kind::Union;
  set.children = std::move(children);
  return set;
}

inline IntegerSet set_intersection(std::vector<IntegerSet> children) {
  if (children.empty()) throw std::invalid_argument("set_intersection: needs at least one child");
  IntegerSet set;
  set.kind = IntegerSet::Kind::Intersection;
  set.children = std::move(children);
  return set;
}

inline IntegerSet complement(IntegerSet inner) {
  IntegerSet set;
  set.kind = IntegerSet::Kind::Complement;
  set.children.push_back(std::move(inner));
  return set;
}

inline IntegerSet predicate(std::function<bool(long long)> test) {
  if (!test) throw std::invalid_argument("predicate: empty membership test");
  IntegerSet set;
  set.kind = IntegerSet::Kind::Predicate;
  set.test = std::move(test);
  return set;
}

inline bool contains(const IntegerSet& set, long long x) {
  if (x < 1) return false;
  switch (set.kind) {
    case IntegerSet::Kind::Progression:
      return (x - set.offset) % set.modulus == 0;
    case IntegerSet::Kind::Finite:
      return std::binary_search(set.elements.begin(), set.elements.end(), x);
    case IntegerSet::Kind::Union:
      for (const auto& child : set.children)
        if (contains(child, x)) return true;
      return false;
    case IntegerSet::Kind::Intersection:
      for (const auto& child : set.children)
        if (!contains(child, x)) return false;
      return true;
    case IntegerSet::Kind::Complement:
      return !contains(set.children.front(), x);
    case IntegerSet::Kind::Predicate:
      return set.test(x);
  }
  throw std::logic_error("contains: unreachable");
}

// Number of members in {1, ..., k}. Progressions and finite sets count in
// closed form; everything else enumerates the prefix.
inline long long count_prefix(const IntegerSet& set, long long k) {
  if (k < 1) throw std::invalid_argument("count_prefix: k must be >= 1");
  switch (set.kind) {
    case IntegerSet::Kind::Progression: {
      long long r = set.offset % set.modulus;
      if (r == 0) r = set.modulus;
      return k >= r ? (k - r) / set.modulus + 1 : 0;
    }
    case IntegerSet::Kind::Finite:
      return std::upper_bound(set.elements.begin(), set.elements.end(), k) -
             set.elements.begin();
    case IntegerSet::Kind::Complement:
      return k - count_prefix(set.children.front(), k);
    default: {
      long long count = 0;
      for (long long x = 1; x <= k; ++x)
        if (contains(set, x)) ++count;
      return count;
    }
  }
}

// Exact share of {1, ..., k} occupied by the set.
inline Rational density_estimate(const IntegerSet& set, long long k) {
  return Rational(count_prefix(set, k), k);
}

namespace detail {

// Beyond every finite prefix, a predicate-free set is periodic: membership
// of x depends only on x mod modulus. The mask lists the member residues
// of one period; its share of the period is the natural density.
struct PeriodicForm {
  long long modulus = 1;
  std::vector<bool> mask;
};

constexpr long long kModulusCap = 10000000;

inline PeriodicForm lift(const PeriodicForm& form, long long modulus) {
  PeriodicForm out;
  out.modulus = modulus;
  out.mask.resize(std::size_t(modulus));
  for (long long r = 0; r < modulus; ++r)
    out.mask[std::size_t(r)] = form.mask[std::size_t(r % form.modulus)];
  return out;
}

inline PeriodicForm periodic_form(const IntegerSet& set) {
  switch (set.kind) {
    case IntegerSet::Kind::Progression: {
      PeriodicForm form;
      form.modulus = set.modulus;
      form.mask.assign(std::size_t(set.modulus), false);
      form.mask[std::size_t(set.offset % set.modulus)] = true;
      return form;
    }
    case IntegerSet::Kind::Finite: {
      PeriodicForm form;
      form.mask.assign(1, false);
      return form;
    }
    case IntegerSet::Kind::Complement: {
      PeriodicForm form = periodic_form(set.children.front());
      form.mask.flip();
      return form;
    }
    case IntegerSet::Kind::Union:
    case IntegerSet::Kind::Intersection: {
      PeriodicForm acc = periodic_form(set.children.front());
      for (std::size_t c = 1; c < set.children.size(); ++c) {
        PeriodicForm next = periodic_form(set.children[c]);
        long long combined = std::lcm(acc.modulus, next.modulus);
        if (combined > kModulusCap)
          throw std::length_error("density_limit: combined modulus exceeds " +
                                  std::to_string(kModulusCap));
        acc = lift(acc, combined);
        next = lift(next, combined);
        for (std::size_t r = 0; r < acc.mask.size(); ++r)
          acc.mask[r] = set.kind == IntegerSet::Kind::Union ? (acc.mask[r] || next.mask[r])
                                                            : (acc.mask[r] && next.mask[r]);
      }
      return acc;
    }
    case IntegerSet::Kind::Predicate:
      throw std::invalid_argument(
          "density_limit: a predicate set carries no certificate; "
          "use density_estimate along a growing prefix instead");
  }
  throw std::logic_error("periodic_form: unreachable");
}

}  // namespace detail

// Certified natural density. Defined for every predicate-free tree; the
// value is exact because such sets are eventually periodic.
inline std::optional<Rational> density_limit(const IntegerSet& set) {
  detail::PeriodicForm form = detail::periodic_form(set);
  long long members = std::count(form.mask.begin(), form.mask.end(), true);
  return Rational(members, form.modulus);
}

struct SigmaAdditivityReport {
  Rational singleton_sum;
  Rational whole_density;
  bool equal = false;
};

// Every singleton has density zero, so the countable sum over any prefix
// of singletons stays zero while the whole space has density one.
inline SigmaAdditivityReport sigma_additivity_failure_demo(long long prefix_length = 1000) {
  if (prefix_length < 1)
    throw std::invalid_argument("sigma_additivity_failure_demo: prefix must be >= 1");
  Rational sum(0);
  for (long long j = 1; j <= prefix_length; ++j) sum += *density_limit(finite_set({j}));
  Rational whole = *density_limit(naturals());
  return {sum, whole, sum == whole};
}

// Textual set grammar used by the command line:
//   ap:a,m        positive integers congruent to a mod m
//   finite:x1,... explicit positive integers
//   union(e1,e2,...)  inter(e1,e2,...)  compl(e)
// Integer lists bind greedily; a subexpression never starts with a digit,
// so the comma before a nested expression is unambiguous.
class SetParser {
 public:
  explicit SetParser(std::string_view text) : text_(text) {}

  IntegerSet parse() {
    IntegerSet set = parse_expression();
    skip_spaces();
    if (pos_ != text_.size())
      throw std::invalid_argument("set grammar: trailing input at position " +
                                  std::to_string(pos_));
    return set;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;

  void skip_spaces() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool consume(std::string_view token) {
    skip_spaces();
    if (text_.substr(pos_, token.size()) != token) return false;
    pos_ += token.size();
    return true;
  }

  void expect(char c) {
    skip_spaces();
    if (pos_ >= text_.size() || text_[pos_] != c)
      throw std::invalid_argument(std::string("set grammar: expected '") + c + "' at position " +
                                  std::to_string(pos_));
    ++pos_;
  }

  bool next_is_digit() {
    skip_spaces();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  long long parse_integer() {
    skip_spaces();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start)
      throw std::invalid_argument("set grammar: expected an integer at position " +
                                  std::to_string(start));
    return std::stoll(std::string(text_.substr(start, pos_ - start)));
  }

  std::vector<IntegerSet> parse_children() {
    expect('(');
    std::vector<IntegerSet> children;
    children.push_back(parse_expression());
    while (consume(",")) children.push_back(parse_expression());
    expect(')');
    return children;
  }

  IntegerSet parse_expression() {
    if (consume("ap:")) {
      long long a = parse_integer();
      expect(',');
      long long m = parse_integer();
      return progression(a, m);
    }
    if (consume("finite:")) {
      std::vector<long long> elements;
      elements.push_back(parse_integer());
      while (true) {
        std::size_t mark = pos_;
        if (!consume(",")) break;
        if (!next_is_digit()) {
          pos_ = mark;
          break;
        }
        elements.push_back(parse_integer());
      }
      return finite_set(std::move(elements));
    }
    if (consume("union")) return set_union(parse_children());
    if (consume("inter")) return set_intersection(parse_children());
    if (consume("compl")) {
      auto children = parse_children();
      if (children.size() != 1)
        throw std::invalid_argument("set grammar: compl takes exactly one argument");
      return complement(std::move(children.front()));
    }
    throw std::invalid_argument("set grammar: expected ap:, finite:, union, inter, or compl "
                                "at position " +
                                std::to_string(pos_));
  }
};

inline IntegerSet parse_set(std::string_view text) { return SetParser(text).parse(); }

}  // namespace modbox::density
