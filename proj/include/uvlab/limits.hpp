#pragma once

namespace uvlab {

// Desk-scale guard rails.  Overridable (the CLI requires an explicit
// acknowledgment flag to raise them).
struct Limits {
  int max_atoms = 6;         // dual spaces up to 63 points
  int max_poset_labeled = 6;
  int max_poset_iso = 8;
};

Limits& limits();

}  // namespace uvlab
