#include "mzsim/rng.hpp"

#include <cmath>

namespace mzsim {

double Rng::exponential(double rate) { return -std::log(uniform_open()) / rate; }

}  // namespace mzsim
