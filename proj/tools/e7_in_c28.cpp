// Library usage: branch a few C28 irreducibles to E7 and check each result.

#include "liebranch/branching.hpp"

#include <iostream>

int main() {
  using namespace liebranch;
  const ProjectionMatrix a = derive_projection_by_weight_matching();
  WeightSystemCache cache;
  for (const char* text : {"1,0^27", "2,0^27", "3,0^27", "1,1,0^26"}) {
    const Weight hw = parse_weight(text, 28);
    const BranchingResult r = branch(a, hw, &cache);
    std::cout << hw << " ->";
    for (const auto& c : r.constituents) std::cout << ' ' << c.highest_weight << '(' << c.dimension << ')';
    std::cout << (verify_branching(r, hw).ok() ? "  ok" : "  MISMATCH") << '\n';
  }
}
