#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace ncdet {

/// A bijection of {0, ..., n-1}; images()[i] is the image of i.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<std::uint8_t> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (auto v : images_) {
      if (v >= images_.size() || seen[v]) throw InputError("not a permutation");
      seen[v] = true;
    }
  }

  static Permutation identity(std::size_t n) {
    std::vector<std::uint8_t> v(n);
    std::iota(v.begin(), v.end(), std::uint8_t{0});
    return Permutation(std::move(v));
  }

  std::size_t size() const noexcept { return images_.size(); }
  std::uint8_t operator()(std::size_t i) const { return images_[i]; }
  const std::vector<std::uint8_t>& images() const noexcept { return images_; }

  /// +1 or -1 by inversion parity.
  int sign() const {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < images_.size(); ++i)
      for (std::size_t j = i + 1; j < images_.size(); ++j)
        if (images_[i] > images_[j]) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
  }

  Permutation inverse() const {
    std::vector<std::uint8_t> v(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) v[images_[i]] = static_cast<std::uint8_t>(i);
    return Permutation(std::move(v));
  }

  /// (p * q)(i) = p(q(i)).
  friend Permutation operator*(const Permutation& p, const Permutation& q) {
    if (p.size() != q.size()) throw DimensionError("permutation sizes differ");
    std::vector<std::uint8_t> v(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) v[i] = p.images_[q.images_[i]];
    return Permutation(std::move(v));
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint8_t> images_;
};

struct SignedPermutation {
  Permutation perm;
  int sign = 1;
};

/// Visits every permutation of {0..n-1} in lexicographic order together
/// with its sign. The sign is updated per step: the pivot swap is one
/// transposition and reversing a suffix of length L is floor(L/2) more.
template <class F>
void for_each_permutation(std::size_t n, F&& visit) {
  std::vector<std::uint8_t> a(n);
  std::iota(a.begin(), a.end(), std::uint8_t{0});
  int sign = 1;
  while (true) {
    visit(static_cast<const std::vector<std::uint8_t>&>(a), sign);
    if (n < 2) return;
    std::size_t i = n - 1;
    while (i > 0 && a[i - 1] >= a[i]) --i;
    if (i == 0) return;
    const std::size_t pivot = i - 1;
    std::size_t j = n - 1;
    while (a[j] <= a[pivot]) --j;
    std::swap(a[pivot], a[j]);
    const std::size_t suffix = n - 1 - pivot;
    std::reverse(a.begin() + static_cast<std::ptrdiff_t>(pivot) + 1, a.end());
    if ((1 + suffix / 2) % 2 == 1) sign = -sign;
  }
}

/// All of S_n in lexicographic order, with signs.
inline std::vector<SignedPermutation> all_permutations(std::size_t n) {
  std::vector<SignedPermutation> out;
  for_each_permutation(n, [&](const std::vector<std::uint8_t>& images, int sign) {
    out.push_back({Permutation(images), sign});
  });
  return out;
}

}  // namespace ncdet
