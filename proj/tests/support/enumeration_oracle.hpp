#ifndef MIRROR_TESTS_ENUMERATION_ORACLE_HPP
#define MIRROR_TESTS_ENUMERATION_ORACLE_HPP

#include <cstddef>
#include <cstdint>

namespace mirror::test_oracle {

// Independent count of terms with at most max_size constructors: two
// nullary constructors, and one wrapper per unary constructor or label
// around each term of the next smaller size, so
//   exact(1) = 2,  exact(n) = (3 + labels) * exact(n - 1).
inline std::uint64_t counted_terms(std::size_t max_size, std::size_t label_count) {
  std::uint64_t exact = 2;
  std::uint64_t total = 0;
  for (std::size_t s = 1; s <= max_size; ++s) {
    total += exact;
    exact *= 3 + label_count;
  }
  return total;
}

}  // namespace mirror::test_oracle

#endif  // MIRROR_TESTS_ENUMERATION_ORACLE_HPP
