// The seed comes from the first argument or GREENSEQ_SEED and is printed so
// failures can be replayed.

#include <cstdlib>
#include <iostream>
#include <string>

#include "properties.hpp"

int main(int argc, char** argv) {
  std::uint64_t seed = 20240601;
  if (argc > 1)
    seed = std::stoull(argv[1]);
  else if (const char* env = std::getenv("GREENSEQ_SEED"))
    seed = std::stoull(env);
  std::cout << "seed: " << seed << '\n';
  return properties::run_all(seed, std::cout) ? 0 : 1;
}
