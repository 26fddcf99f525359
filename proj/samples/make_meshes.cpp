// Writes cube.off and icosphere levels 0-4 into the given directory.
#include <fstream>
#include <iostream>
#include <string>

#include "maglab/geometry.hpp"

int main(int argc, char** argv) {
  const std::string dir = argc > 1 ? argv[1] : ".";
  auto save = [&](const std::string& name, const maglab::SurfaceMesh& m) {
    std::ofstream f(dir + "/" + name);
    maglab::write_off(f, m);
    const auto inv = maglab::invariants_from_mesh(m);
    std::cout << name << " V=" << inv.volume << " A=" << inv.area << " H=" << inv.total_mean_curvature << '\n';
  };
  save("cube.off", maglab::cube_mesh(1.0));
  for (int l = 0; l <= 4; ++l) save("icosphere" + std::to_string(l) + ".off", maglab::icosphere(l));
}
