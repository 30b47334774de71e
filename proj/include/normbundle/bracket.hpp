#pragma once

namespace normbundle {

// Truncation bracket [[z]] = max(0, z).  Every closed-form count below is a
// signed expression clipped at zero, so this shows up everywhere.
constexpr int bracket(int z) noexcept { return z > 0 ? z : 0; }

}  // namespace normbundle
