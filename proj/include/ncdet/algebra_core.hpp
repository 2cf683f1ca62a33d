#pragma once

/**
 * @file algebra_core.hpp
 * @brief The ring contract shared by every coefficient ring, the exact
 * integer ring used as a commutative oracle, and ring-generic helpers.
 *
 * A ring element type is a regular value type whose default-constructed
 * value is zero and whose integer constructor embeds the central scalars
 * k*1. Equality is structural on the canonical (normalized) form, so two
 * elements compare equal iff their canonical renderings coincide.
 */

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ncdet {

using Integer = boost::multiprecision::cpp_int;

template <class R>
concept Ring = std::regular<R> && requires(const R& x, const R& y, const Integer& k) {
  R{k};
  { x + y } -> std::same_as<R>;
  { x - y } -> std::same_as<R>;
  { -x } -> std::same_as<R>;
  { x * y } -> std::same_as<R>;
  { x.is_zero() } -> std::convertible_to<bool>;
  { to_string(x) } -> std::convertible_to<std::string>;
};

/// Optional capability flags. Specialize for rings that have them.
template <class R>
struct ring_traits {
  static constexpr bool is_commutative = false;
  static constexpr bool is_z2_graded = false;
};

// ---------------------------------------------------------------------------
// Integers

/// Arbitrary-precision integer as a ring element.
class IntElem {
 public:
  IntElem() = default;
  explicit IntElem(Integer v) : value_(std::move(v)) {}
  explicit IntElem(long long v) : value_(v) {}
  explicit IntElem(int v) : value_(v) {}

  const Integer& value() const noexcept { return value_; }
  bool is_zero() const { return value_.is_zero(); }

  IntElem& operator+=(const IntElem& o) { value_ += o.value_; return *this; }
  IntElem& operator-=(const IntElem& o) { value_ -= o.value_; return *this; }
  IntElem& operator*=(const IntElem& o) { value_ *= o.value_; return *this; }

  friend IntElem operator+(IntElem a, const IntElem& b) { return a += b; }
  friend IntElem operator-(IntElem a, const IntElem& b) { return a -= b; }
  friend IntElem operator*(IntElem a, const IntElem& b) { return a *= b; }
  friend IntElem operator-(const IntElem& a) { return IntElem(Integer(-a.value_)); }
  friend bool operator==(const IntElem&, const IntElem&) = default;

  friend std::string to_string(const IntElem& x) { return x.value_.str(); }

 private:
  Integer value_;
};

template <>
struct ring_traits<IntElem> {
  static constexpr bool is_commutative = true;
  static constexpr bool is_z2_graded = false;
};

// ---------------------------------------------------------------------------
// Generic helpers

template <Ring R>
R commutator(const R& x, const R& y) {
  return x * y - y * x;
}

/// Left-normed iterated commutator [[...[x1,x2],...],xk].
template <Ring R>
R iterated_commutator(const std::vector<R>& xs) {
  if (xs.empty()) return R{};
  R acc = xs.front();
  for (std::size_t i = 1; i < xs.size(); ++i) acc = commutator(acc, xs[i]);
  return acc;
}

/// Scales by a central integer.
template <Ring R>
R scale(const R& x, const Integer& k) {
  return R{k} * x;
}

/// Sums a long stream of ring elements with a binary-counter reduction so
/// that operands of similar size are combined; sparse rings otherwise pay
/// a quadratic merge cost when adding many small terms to a large total.
template <Ring R>
class Summation {
 public:
  void add(R x) { push(std::move(x), 0); }
  void subtract(const R& x) { push(-x, 0); }

  R result() && {
    R total{};
    for (auto& [value, level] : stack_) total = total + value;
    stack_.clear();
    return total;
  }

 private:
  void push(R x, unsigned level) {
    while (!stack_.empty() && stack_.back().second == level) {
      x = stack_.back().first + x;
      stack_.pop_back();
      ++level;
    }
    stack_.emplace_back(std::move(x), level);
  }

  std::vector<std::pair<R, unsigned>> stack_;
};

// ---------------------------------------------------------------------------
// Ring axioms on samples

struct AxiomResult {
  std::string axiom;
  bool passed = true;
  std::size_t failures = 0;
};

struct AxiomReport {
  std::vector<AxiomResult> results;

  bool passed() const {
    for (const auto& r : results)
      if (!r.passed) return false;
    return true;
  }
};

/// Draws `trials` seeded triples from `samples` and checks the ring axioms
/// on each. Zero trials produce an empty report.
template <Ring R>
AxiomReport ring_axiom_check(const std::vector<R>& samples, std::size_t trials,
                             std::uint64_t seed) {
  AxiomReport report;
  if (trials == 0 || samples.empty()) return report;

  const R zero{};
  const R one{Integer(1)};
  std::vector<AxiomResult> results = {
      {"additive associativity"}, {"additive commutativity"},
      {"multiplicative associativity"}, {"left distributivity"},
      {"right distributivity"}, {"additive identity"},
      {"multiplicative identity"}, {"additive inverse"}};
  auto record = [&](std::size_t idx, bool ok) {
    if (!ok) {
      results[idx].passed = false;
      ++results[idx].failures;
    }
  };

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, samples.size() - 1);
  for (std::size_t t = 0; t < trials; ++t) {
    const R& x = samples[pick(rng)];
    const R& y = samples[pick(rng)];
    const R& z = samples[pick(rng)];
    record(0, (x + y) + z == x + (y + z));
    record(1, x + y == y + x);
    record(2, (x * y) * z == x * (y * z));
    record(3, x * (y + z) == x * y + x * z);
    record(4, (x + y) * z == x * z + y * z);
    record(5, x + zero == x && zero + x == x);
    record(6, x * one == x && one * x == x);
    record(7, (x + (-x)).is_zero());
  }
  report.results = std::move(results);
  return report;
}

}  // namespace ncdet
