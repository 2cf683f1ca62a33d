#pragma once

#include <string>
#include <vector>

#include <ncdet/ncdet.hpp>

namespace testing_helpers {

/// Parses `src` as a polynomial over `alphabet`.
inline ncdet::FreePoly fp(const ncdet::AlphabetPtr& alphabet, const std::string& src) {
  return ncdet::ExpressionParser<ncdet::FreePoly>(alphabet).parse(src);
}

inline ncdet::GrassmannElem ge(int rank, const std::string& src) {
  return ncdet::parse_expression<ncdet::GrassmannElem>(src, ncdet::RingSpec::grassmann(rank));
}

inline ncdet::Matrix<ncdet::IntElem> int_matrix(const std::vector<std::vector<long long>>& rows) {
  std::vector<std::vector<ncdet::IntElem>> r;
  for (const auto& row : rows) {
    r.emplace_back();
    for (long long v : row) r.back().emplace_back(v);
  }
  return ncdet::Matrix<ncdet::IntElem>::from_rows(r);
}

inline ncdet::IntElem I(long long v) { return ncdet::IntElem(v); }

}  // namespace testing_helpers
