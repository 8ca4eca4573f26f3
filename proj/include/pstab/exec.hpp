#pragma once

namespace pstab {

// Selects between the OpenMP kernel and the serial reference it is tested
// against. Both produce identical output.
enum class Exec { serial, parallel };

}  // namespace pstab
