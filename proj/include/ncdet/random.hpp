#pragma once

/**
 * @file random.hpp
 * @brief Generic free-algebra matrices and seeded random elements.
 *
 * All randomness goes through a caller-owned std::mt19937_64, so a run is
 * reproducible from its seed.
 */

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "algebra_core.hpp"
#include "freealg.hpp"
#include "grassmann.hpp"
#include "matrix.hpp"

namespace ncdet {

inline constexpr std::uint64_t kDefaultSeed = 42;

/// Entry names of the generic n x n matrix: a b / c d for n = 2,
/// a..h, p for n = 3 (row by row), x11 .. xnn otherwise.
inline std::vector<std::string> generic_entry_names(std::size_t n) {
  if (n == 1) return {"a"};
  if (n == 2) return {"a", "b", "c", "d"};
  if (n == 3) return {"a", "b", "c", "d", "e", "f", "g", "h", "p"};
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j) names.push_back("x" + std::to_string(i) + std::to_string(j));
  return names;
}

/// The n x n matrix whose entries are n^2 distinct free generators.
inline Matrix<FreePoly> generic_matrix(std::size_t n, std::size_t term_cap = kDefaultTermCap) {
  if (n < 1) throw DimensionError("generic matrix needs n >= 1");
  auto alphabet = make_alphabet(generic_entry_names(n), term_cap);
  Matrix<FreePoly> m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = FreePoly::generator(alphabet, i * n + j);
  return m;
}

inline IntElem random_int(std::mt19937_64& rng, int max_abs = 9) {
  std::uniform_int_distribution<int> d(-max_abs, max_abs);
  return IntElem(d(rng));
}

inline Matrix<IntElem> random_int_matrix(std::size_t n, std::mt19937_64& rng, int max_abs = 9) {
  Matrix<IntElem> m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = random_int(rng, max_abs);
  return m;
}

inline Matrix<GrassmannElem> random_grassmann_matrix(std::size_t n, int rank, std::mt19937_64& rng,
                                                     std::size_t max_terms = 3) {
  Matrix<GrassmannElem> m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = random_grassmann(rank, rng, max_terms);
  return m;
}

/// Random (n, t) supermatrix: even diagonal blocks, odd off-diagonal blocks.
inline Matrix<GrassmannElem> random_supermatrix(const SupermatrixProfile& profile, int rank,
                                                std::mt19937_64& rng, std::size_t max_terms = 3) {
  const std::size_t n = profile.n();
  Matrix<GrassmannElem> m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = random_grassmann(rank, rng, max_terms, 3, profile.parity(i, j));
  return m;
}

/// Random polynomial with up to `max_terms` words of length <= max_degree.
inline FreePoly random_free_poly(const AlphabetPtr& alphabet, std::mt19937_64& rng, std::size_t max_degree = 3,
                                 std::size_t max_terms = 4, int max_coeff = 5) {
  std::uniform_int_distribution<std::size_t> count(1, max_terms);
  std::uniform_int_distribution<std::size_t> length(0, max_degree);
  std::uniform_int_distribution<std::size_t> letter(0, alphabet->size() - 1);
  std::uniform_int_distribution<int> coeff(-max_coeff, max_coeff);
  std::vector<FreePoly::Term> terms;
  const std::size_t n = count(rng);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::uint8_t> letters(alphabet->size() == 0 ? 0 : length(rng));
    for (auto& l : letters) l = static_cast<std::uint8_t>(letter(rng));
    terms.emplace_back(Word(std::move(letters)), Integer(coeff(rng)));
  }
  return FreePoly::from_terms(alphabet, std::move(terms));
}

}  // namespace ncdet
