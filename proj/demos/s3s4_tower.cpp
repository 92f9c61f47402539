// Depth of C[S_{n-1}] ⊆ C[S_n] for small n, straight from the branching rule.

#include <iostream>

#include "subdepth/subdepth.hpp"

int main() {
  for (unsigned n = 2; n <= 7; ++n) {
    const auto m = subdepth::branching_matrix(n);
    const auto r = subdepth::depth_report(m);
    std::cout << "S" << n - 1 << " in S" << n << ": " << r.rows << "x" << r.cols
              << "  d = " << r.depth << "  d(Mt) = " << r.depth_transpose
              << "  d_H = " << r.h_depth << "  bound = " << r.spectral_bound << '\n';
  }
}
