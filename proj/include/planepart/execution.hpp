#pragma once

namespace planepart {

/// Selects between the serial reference kernels and the OpenMP kernels.
/// Both produce bit-identical results.
enum class Execution { serial, parallel };

}  // namespace planepart
