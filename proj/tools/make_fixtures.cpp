// Writes the decomposition fixture for one vertex parameter s.
//   make_fixtures regular|glued [s]

#include "hypack/io.hpp"
#include "hypack/truncation.hpp"

#include <cstdlib>
#include <iostream>
#include <string>

int main(int argc, char** argv) {
  if (argc < 2 || argc > 3) {
    std::cerr << "usage: make_fixtures regular|glued [s]\n";
    return 2;
  }
  const std::string kind = argv[1];
  const double s = argc == 3 ? std::strtod(argv[2], nullptr) : 1.2;
  hypack::DecompositionFixture fx;
  if (kind == "regular") {
    fx = hypack::regular_simplex_fixture(s);
  } else if (kind == "glued") {
    fx = hypack::glued_simplices_fixture(s);
  } else {
    std::cerr << "unknown fixture " << kind << '\n';
    return 2;
  }
  std::cout << hypack::json_text(hypack::to_json(fx), 2) << '\n';
  return 0;
}
