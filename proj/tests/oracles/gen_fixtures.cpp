// Regenerates tests/fixtures/counting.json from the naive enumerators.
#include <iostream>

#include "naive.hpp"

int main() {
  std::cout << "{\n  \"census_n3\": {\n";
  const std::uint64_t ts[] = {1, 2, 10, 100, 1000};
  for (std::size_t i = 0; i < std::size(ts); ++i) {
    std::cout << "    \"" << ts[i] << "\": \"" << oracle::census(3, ts[i]) << "\"" << (i + 1 < std::size(ts) ? "," : "")
              << "\n";
  }
  std::cout << "  },\n  \"box_A3_10\": \"" << oracle::box_count({{1, 1, 1, -3}}, {10, 10, 10, 10}) << "\"\n}\n";
}
