// Exact M_{B_n}(R) for a few odd n, next to the n = 3 polynomial.
#include <cstdio>

#include "maglab/precision.hpp"

int main() {
  for (double R : {0.5, 1.0, 2.0, 5.0, 10.0}) {
    std::printf("R=%-5g", R);
    for (int n : {1, 3, 5, 7, 9}) std::printf("  B%d=%.12g", n, maglab::exact_ball_magnitude(n, R).real());
    std::printf("  poly3=%.12g\n", R * R * R / 6 + R * R + 2 * R + 1);
  }
}
