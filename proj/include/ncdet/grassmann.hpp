#pragma once

/**
 * @file grassmann.hpp
 * @brief Finite-rank exterior (Grassmann) algebra over Z with its
 * Z2-grading E = E0 + E1.
 *
 * Basis monomials v_{i1}...v_{is} (i1 < ... < is) are stored as bit masks;
 * bit (i-1) stands for v_i. Terms are sorted by subset size, then
 * lexicographically by the ascending index list.
 */

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "algebra_core.hpp"
#include "errors.hpp"

namespace ncdet {

class GrassmannElem {
 public:
  using Blade = std::uint32_t;
  using Term = std::pair<Blade, Integer>;

  static constexpr int kMaxRank = 16;
  static constexpr int kDefaultRank = 6;
  /// Rank tag of constants built without a rank; they combine with any rank.
  static constexpr int kAnyRank = -1;

  GrassmannElem() = default;
  explicit GrassmannElem(const Integer& c) {
    if (!c.is_zero()) terms_.emplace_back(0, c);
  }
  explicit GrassmannElem(long long c) : GrassmannElem(Integer(c)) {}
  explicit GrassmannElem(int c) : GrassmannElem(Integer(c)) {}

  static GrassmannElem constant(int rank, const Integer& c) {
    check_rank(rank);
    GrassmannElem x(c);
    x.rank_ = rank;
    return x;
  }

  /// v_i for 1 <= i <= rank.
  static GrassmannElem generator(int rank, int i) {
    check_rank(rank);
    if (i < 1 || i > rank) throw CapExceeded("Grassmann generator index out of range");
    GrassmannElem x;
    x.rank_ = rank;
    x.terms_.emplace_back(Blade{1} << (i - 1), Integer(1));
    return x;
  }

  /// Builds an element from (blade, coefficient) terms; merges and drops zeros.
  static GrassmannElem from_terms(int rank, std::vector<Term> terms) {
    check_rank(rank);
    for (const auto& t : terms)
      if (rank < kMaxRank && (t.first >> rank) != 0) throw CapExceeded("blade uses a generator beyond the rank");
    GrassmannElem x;
    x.rank_ = rank;
    x.terms_ = normalize(std::move(terms));
    return x;
  }

  int rank() const noexcept { return rank_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// 0 or 1 when homogeneous; nullopt for mixed elements. Zero is reported
  /// as even but satisfies both is_even() and is_odd().
  std::optional<int> parity() const {
    if (terms_.empty()) return 0;
    const int p = std::popcount(terms_.front().first) & 1;
    for (const auto& t : terms_)
      if ((std::popcount(t.first) & 1) != p) return std::nullopt;
    return p;
  }
  bool is_even() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const Term& t) { return (std::popcount(t.first) & 1) == 0; });
  }
  bool is_odd() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const Term& t) { return (std::popcount(t.first) & 1) == 1; });
  }

  friend GrassmannElem operator+(const GrassmannElem& a, const GrassmannElem& b) {
    return merge(a, b, false);
  }
  friend GrassmannElem operator-(const GrassmannElem& a, const GrassmannElem& b) {
    return merge(a, b, true);
  }
  friend GrassmannElem operator-(const GrassmannElem& a) {
    GrassmannElem r = a;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
  }

  friend GrassmannElem operator*(const GrassmannElem& a, const GrassmannElem& b) {
    GrassmannElem r;
    r.rank_ = unify(a.rank_, b.rank_);
    std::vector<Term> products;
    products.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& [ba, ca] : a.terms_) {
      for (const auto& [bb, cb] : b.terms_) {
        if (ba & bb) continue;
        Integer c = ca * cb;
        if (wedge_sign_negative(ba, bb)) c = -c;
        products.emplace_back(ba | bb, std::move(c));
      }
    }
    r.terms_ = normalize(std::move(products));
    return r;
  }

  /// Equality is on terms only; the rank tag is not part of the value.
  friend bool operator==(const GrassmannElem& a, const GrassmannElem& b) { return a.terms_ == b.terms_; }

  friend std::string to_string(const GrassmannElem& x) {
    if (x.terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [blade, c] : x.terms_) {
      const bool negative = c.sign() < 0;
      if (first) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      first = false;
      const Integer mag = negative ? Integer(-c) : c;
      const bool show_coeff = blade == 0 || mag != 1;
      if (show_coeff) out += mag.str();
      bool first_letter = true;
      for (int i = 0; i < kMaxRank; ++i) {
        if (!(blade & (Blade{1} << i))) continue;
        if (show_coeff || !first_letter) out += "*";
        out += "v" + std::to_string(i + 1);
        first_letter = false;
      }
    }
    return out;
  }

  /// Canonical basis order: by size, then lexicographically on index lists.
  static bool blade_less(Blade x, Blade y) {
    const int px = std::popcount(x), py = std::popcount(y);
    if (px != py) return px < py;
    if (x == y) return false;
    const Blade diff = x ^ y;
    return (x & (diff & (~diff + 1))) != 0;
  }

  /// Sign of v_A v_B = +-v_{A|B}: parity of pairs (i in A, j in B) with i > j.
  static bool wedge_sign_negative(Blade a, Blade b) {
    int swaps = 0;
    while (b) {
      const int j = std::countr_zero(b);
      b &= b - 1;
      swaps += std::popcount(a >> (j + 1));
    }
    return swaps & 1;
  }

 private:
  static void check_rank(int rank) {
    if (rank < 0 || rank > kMaxRank) throw CapExceeded("Grassmann rank must lie in [0, 16]");
  }

  static int unify(int a, int b) {
    if (a == kAnyRank) return b;
    if (b == kAnyRank || a == b) return a;
    throw RingMismatch("Grassmann elements of different rank");
  }

  static std::vector<Term> normalize(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& x, const Term& y) { return blade_less(x.first, y.first); });
    std::vector<Term> out;
    out.reserve(terms.size());
    for (auto& t : terms) {
      if (!out.empty() && out.back().first == t.first) {
        out.back().second += t.second;
        if (out.back().second.is_zero()) out.pop_back();
      } else if (!t.second.is_zero()) {
        out.push_back(std::move(t));
      }
    }
    return out;
  }

  static GrassmannElem merge(const GrassmannElem& a, const GrassmannElem& b, bool subtract) {
    GrassmannElem r;
    r.rank_ = unify(a.rank_, b.rank_);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    auto ia = a.terms_.begin();
    auto ib = b.terms_.begin();
    while (ia != a.terms_.end() || ib != b.terms_.end()) {
      if (ib == b.terms_.end() || (ia != a.terms_.end() && blade_less(ia->first, ib->first))) {
        r.terms_.push_back(*ia++);
      } else if (ia == a.terms_.end() || blade_less(ib->first, ia->first)) {
        r.terms_.emplace_back(ib->first, subtract ? Integer(-ib->second) : ib->second);
        ++ib;
      } else {
        Integer c = subtract ? Integer(ia->second - ib->second) : Integer(ia->second + ib->second);
        if (!c.is_zero()) r.terms_.emplace_back(ia->first, std::move(c));
        ++ia;
        ++ib;
      }
    }
    return r;
  }

  int rank_ = kAnyRank;
  std::vector<Term> terms_;
};

template <>
struct ring_traits<GrassmannElem> {
  static constexpr bool is_commutative = false;
  static constexpr bool is_z2_graded = true;
};

struct GradedParts {
  GrassmannElem even;
  GrassmannElem odd;
};

inline GradedParts graded_parts(const GrassmannElem& x) {
  std::vector<GrassmannElem::Term> even, odd;
  for (const auto& t : x.terms()) (std::popcount(t.first) % 2 == 0 ? even : odd).push_back(t);
  const int rank = x.rank() == GrassmannElem::kAnyRank ? GrassmannElem::kMaxRank : x.rank();
  return {GrassmannElem::from_terms(rank, std::move(even)), GrassmannElem::from_terms(rank, std::move(odd))};
}

/// Seeded random element with up to `max_terms` terms and coefficients in
/// [-max_coeff, max_coeff]. `parity` restricts the blades to one grade.
inline GrassmannElem random_grassmann(int rank, std::mt19937_64& rng, std::size_t max_terms = 4,
                                      int max_coeff = 3, std::optional<int> parity = std::nullopt) {
  std::vector<GrassmannElem::Term> terms;
  if (rank == 0) {
    if (parity.value_or(0) == 1) return GrassmannElem::constant(0, 0);
    std::uniform_int_distribution<int> coeff(-max_coeff, max_coeff);
    return GrassmannElem::constant(0, coeff(rng));
  }
  std::uniform_int_distribution<GrassmannElem::Blade> blade(0, (GrassmannElem::Blade{1} << rank) - 1);
  std::uniform_int_distribution<std::size_t> count(1, max_terms);
  std::uniform_int_distribution<int> coeff(1, max_coeff);
  std::bernoulli_distribution negative(0.5);
  const std::size_t n = count(rng);
  for (std::size_t i = 0; i < n; ++i) {
    GrassmannElem::Blade b = blade(rng);
    if (parity && (std::popcount(b) & 1) != *parity) b ^= 1;  // flip v1 to fix the grade
    const int c = coeff(rng);
    terms.emplace_back(b, Integer(negative(rng) ? -c : c));
  }
  return GrassmannElem::from_terms(rank, std::move(terms));
}

/// Evaluates the left-normed commutator of length k+1 on a fixed generator
/// tuple and then on `trials` seeded random tuples; true iff all vanish.
inline bool lie_nilpotency_check(int rank, int k, std::size_t trials, std::uint64_t seed) {
  if (k < 1) throw InputError("Lie nilpotency index must be at least 1");
  std::vector<GrassmannElem> xs;
  for (int i = 0; i <= k; ++i)
    xs.push_back(rank == 0 ? GrassmannElem::constant(0, i + 1) : GrassmannElem::generator(rank, i % rank + 1));
  if (!iterated_commutator(xs).is_zero()) return false;

  std::mt19937_64 rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    for (auto& x : xs) x = random_grassmann(rank, rng);
    if (!iterated_commutator(xs).is_zero()) return false;
  }
  return true;
}

}  // namespace ncdet
