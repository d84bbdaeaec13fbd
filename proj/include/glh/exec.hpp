#pragma once

namespace glh {

/// Kernel variant selector. Serial is the plain reference loop kept for
/// testing; Parallel is the row-blocked OpenMP kernel.
enum class Exec { Serial, Parallel };

}  // namespace glh
