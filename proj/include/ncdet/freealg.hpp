#pragma once

/**
 * @file freealg.hpp
 * @brief The free associative ring Z<x_0, ..., x_{g-1}> on named
 * noncommuting generators.
 *
 * A FreePoly is a sparse list of (word, coefficient) terms kept sorted in
 * degree-then-lexicographic order by generator id, with no zero
 * coefficients. Constants (including zero) carry no alphabet and combine
 * with polynomials over any alphabet; two non-constant operands must share
 * the same generator names.
 */

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "algebra_core.hpp"
#include "errors.hpp"

namespace ncdet {

inline constexpr std::size_t kDefaultTermCap = 10'000'000;

/// Named generators of one free algebra instance; ids are dense 0..g-1.
class Alphabet {
 public:
  static constexpr std::size_t kMaxGenerators = 255;

  explicit Alphabet(std::vector<std::string> names, std::size_t term_cap = kDefaultTermCap)
      : names_(std::move(names)), term_cap_(term_cap) {
    if (names_.size() > kMaxGenerators)
      throw CapExceeded("free algebra supports at most 255 generators");
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (names_[i].empty()) throw InputError("generator names must be nonempty");
      for (std::size_t j = 0; j < i; ++j)
        if (names_[i] == names_[j]) throw InputError("duplicate generator name '" + names_[i] + "'");
    }
  }

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(std::size_t id) const { return names_.at(id); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::size_t term_cap() const noexcept { return term_cap_; }

  std::optional<std::size_t> find(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return i;
    return std::nullopt;
  }

  friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
  std::size_t term_cap_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

inline AlphabetPtr make_alphabet(std::vector<std::string> names,
                                 std::size_t term_cap = kDefaultTermCap) {
  return std::make_shared<const Alphabet>(std::move(names), term_cap);
}

/// A monomial: a finite sequence of generator ids. The empty word is 1.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<std::uint8_t> letters) : letters_(letters.begin(), letters.end()) {}
  static Word letter(std::size_t id) { return Word(std::string(1, static_cast<char>(id))); }

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  std::uint8_t operator[](std::size_t i) const { return static_cast<std::uint8_t>(letters_[i]); }

  friend Word operator*(const Word& a, const Word& b) {
    std::string s;
    s.reserve(a.size() + b.size());
    s.append(a.letters_).append(b.letters_);
    return Word(std::move(s));
  }

  /// Rotation moving the first `k` letters to the end.
  Word rotated(std::size_t k) const {
    if (letters_.empty()) return *this;
    k %= letters_.size();
    return Word(letters_.substr(k) + letters_.substr(0, k));
  }

  /// Lexicographically least rotation; names the word's cyclic class.
  Word necklace() const {
    Word best = *this;
    for (std::size_t k = 1; k < size(); ++k) {
      Word r = rotated(k);
      if (r.letters_ < best.letters_) best = std::move(r);
    }
    return best;
  }

  // Degree first, then lexicographic by id (char_traits compares as unsigned).
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() <=> b.size();
    int c = a.letters_.compare(b.letters_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
  friend bool operator==(const Word&, const Word&) = default;

  struct Hash {
    std::size_t operator()(const Word& w) const noexcept { return std::hash<std::string>{}(w.letters_); }
  };

 private:
  explicit Word(std::string s) : letters_(std::move(s)) {}
  std::string letters_;
};

class FreePoly {
 public:
  using Term = std::pair<Word, Integer>;

  FreePoly() = default;
  explicit FreePoly(const Integer& c) {
    if (!c.is_zero()) terms_.emplace_back(Word{}, c);
  }
  explicit FreePoly(long long c) : FreePoly(Integer(c)) {}
  explicit FreePoly(int c) : FreePoly(Integer(c)) {}

  static FreePoly generator(AlphabetPtr alphabet, std::size_t id) {
    if (!alphabet || id >= alphabet->size()) throw InputError("generator id out of range");
    FreePoly p;
    p.alphabet_ = std::move(alphabet);
    p.terms_.emplace_back(Word::letter(id), Integer(1));
    return p;
  }

  static FreePoly generator(const AlphabetPtr& alphabet, std::string_view name) {
    auto id = alphabet ? alphabet->find(name) : std::nullopt;
    if (!id) throw InputError("unknown generator '" + std::string(name) + "'");
    return generator(alphabet, *id);
  }

  /// Builds a polynomial from arbitrary terms; merges duplicates and drops zeros.
  static FreePoly from_terms(AlphabetPtr alphabet, std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    FreePoly p;
    p.alphabet_ = std::move(alphabet);
    for (auto& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().first == t.first) {
        p.terms_.back().second += t.second;
        if (p.terms_.back().second.is_zero()) p.terms_.pop_back();
      } else if (!t.second.is_zero()) {
        p.terms_.push_back(std::move(t));
      }
    }
    if (p.is_constant()) p.alphabet_.reset();
    return p;
  }

  const std::vector<Term>& terms() const noexcept { return terms_; }
  const AlphabetPtr& alphabet() const noexcept { return alphabet_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.empty()); }

  Integer constant_term() const {
    if (!terms_.empty() && terms_.front().first.empty()) return terms_.front().second;
    return 0;
  }

  std::size_t degree() const noexcept { return terms_.empty() ? 0 : terms_.back().first.size(); }

  friend FreePoly operator+(const FreePoly& a, const FreePoly& b) { return merge(a, b, false); }
  friend FreePoly operator-(const FreePoly& a, const FreePoly& b) { return merge(a, b, true); }

  friend FreePoly operator-(const FreePoly& a) {
    FreePoly r = a;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
  }

  friend FreePoly operator*(const FreePoly& a, const FreePoly& b) {
    FreePoly r;
    r.alphabet_ = unify(a.alphabet_, b.alphabet_);
    if (a.is_zero() || b.is_zero()) return FreePoly{};
    if (a.is_constant()) return scaled(b, a.terms_[0].second, r.alphabet_);
    if (b.is_constant()) return scaled(a, b.terms_[0].second, r.alphabet_);

    const std::size_t cap = r.alphabet_ ? r.alphabet_->term_cap() : kDefaultTermCap;
    std::unordered_map<Word, Integer, Word::Hash> acc;
    acc.reserve(std::min(a.size() * b.size(), cap));
    Integer prod;
    for (const auto& [wa, ca] : a.terms_) {
      for (const auto& [wb, cb] : b.terms_) {
        prod = ca;
        prod *= cb;
        auto [it, inserted] = acc.try_emplace(wa * wb, prod);
        if (!inserted) it->second += prod;
      }
      if (acc.size() > cap) throw CapExceeded("free polynomial product exceeds the term cap");
    }
    r.terms_.reserve(acc.size());
    for (auto& [w, c] : acc)
      if (!c.is_zero()) r.terms_.emplace_back(w, std::move(c));
    std::sort(r.terms_.begin(), r.terms_.end(),
              [](const Term& x, const Term& y) { return x.first < y.first; });
    if (r.is_constant()) r.alphabet_.reset();
    return r;
  }

  friend bool operator==(const FreePoly& a, const FreePoly& b) { return a.terms_ == b.terms_; }

  friend std::string to_string(const FreePoly& p) {
    if (p.terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : p.terms_) {
      const bool negative = c.sign() < 0;
      if (first) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      first = false;
      const Integer mag = negative ? Integer(-c) : c;
      const bool show_coeff = w.empty() || mag != 1;
      if (show_coeff) out += mag.str();
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (show_coeff || i > 0) out += "*";
        out += p.alphabet_ ? p.alphabet_->name(w[i]) : "?";
      }
    }
    return out;
  }

  static AlphabetPtr unify(const AlphabetPtr& a, const AlphabetPtr& b) {
    if (!a) return b;
    if (!b || a == b) return a;
    if (*a == *b) return a;
    throw RingMismatch("free polynomials over different generator sets");
  }

 private:
  static FreePoly scaled(const FreePoly& p, const Integer& k, const AlphabetPtr& alphabet) {
    FreePoly r;
    if (k.is_zero()) return r;
    r.terms_ = p.terms_;
    for (auto& t : r.terms_) t.second *= k;
    r.alphabet_ = r.is_constant() ? nullptr : alphabet;
    return r;
  }

  static FreePoly merge(const FreePoly& a, const FreePoly& b, bool subtract) {
    FreePoly r;
    r.alphabet_ = unify(a.alphabet_, b.alphabet_);
    r.terms_.reserve(a.size() + b.size());
    auto ia = a.terms_.begin();
    auto ib = b.terms_.begin();
    while (ia != a.terms_.end() || ib != b.terms_.end()) {
      if (ib == b.terms_.end() || (ia != a.terms_.end() && ia->first < ib->first)) {
        r.terms_.push_back(*ia++);
      } else if (ia == a.terms_.end() || ib->first < ia->first) {
        r.terms_.emplace_back(ib->first, subtract ? Integer(-ib->second) : ib->second);
        ++ib;
      } else {
        Integer c = subtract ? Integer(ia->second - ib->second) : Integer(ia->second + ib->second);
        if (!c.is_zero()) r.terms_.emplace_back(ia->first, std::move(c));
        ++ia;
        ++ib;
      }
    }
    const std::size_t cap = r.alphabet_ ? r.alphabet_->term_cap() : kDefaultTermCap;
    if (r.terms_.size() > cap) throw CapExceeded("free polynomial sum exceeds the term cap");
    if (r.is_constant()) r.alphabet_.reset();
    return r;
  }

  AlphabetPtr alphabet_;
  std::vector<Term> terms_;
};

/// Membership in the additive commutator subgroup [R,R] of the free ring.
/// The cyclic classes of words form a basis of R/[R,R], so p lies in [R,R]
/// iff the coefficients of every cyclic class sum to zero.
inline bool in_commutator_span(const FreePoly& p) {
  std::map<Word, Integer> class_sums;
  for (const auto& [w, c] : p.terms()) class_sums[w.necklace()] += c;
  for (const auto& [w, c] : class_sums)
    if (!c.is_zero()) return false;
  return true;
}

/// Image of p under the ring map sending generator id -> assignment[id].
template <Ring R>
R specialize(const FreePoly& p, const std::map<std::size_t, R>& assignment) {
  Summation<R> sum;
  for (const auto& [w, c] : p.terms()) {
    R term{c};
    for (std::size_t i = 0; i < w.size(); ++i) {
      auto it = assignment.find(w[i]);
      if (it == assignment.end()) {
        const std::string name = p.alphabet() ? p.alphabet()->name(w[i]) : std::to_string(w[i]);
        throw MissingAssignment("no image assigned to generator '" + name + "'");
      }
      term = term * it->second;
    }
    sum.add(std::move(term));
  }
  return std::move(sum).result();
}

}  // namespace ncdet
