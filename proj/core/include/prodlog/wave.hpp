#pragma once

#include "prodlog/specfun.hpp"

namespace prodlog {

/// Wavefunction value and its x-derivative at one point.
struct WaveValue {
    Complex psi;
    Complex dpsi;
};

}  // namespace prodlog
