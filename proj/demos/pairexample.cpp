// Builds the 2-periodic pair for the choice set ℕ \ {1} on {1..72} and prints
// A, the complement of B = Pr(A), and the numbers that are in neither.

#include <iostream>

#include "prset/prset.hpp"

int main() {
  using namespace prset;
  constexpr std::uint64_t window = 72;
  const auto pair = construct_2periodic(rules::ArithmeticProgression{1, 2}, window);

  std::vector<std::uint64_t> not_b, neither;
  for (std::uint64_t k = 1; k <= window; ++k) {
    if (!pair.b.contains(k)) not_b.push_back(k);
    if (!pair.a.contains(k) && !pair.b.contains(k)) neither.push_back(k);
  }
  std::cout << "A:        ";
  write_list(std::cout, pair.a.members());
  std::cout << "N \\ B:    ";
  write_list(std::cout, not_b);
  std::cout << "neither:  ";
  write_list(std::cout, neither);
  std::cout << "Pr(A) = B: " << (pr_window(pair.a) == pair.b ? "yes" : "no")
            << ", Pr(B) = A: " << (pr_window(pair.b) == pair.a ? "yes" : "no") << '\n';
}
