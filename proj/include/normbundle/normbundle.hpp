#pragma once

// Umbrella header: the whole library.

#include "normbundle/bracket.hpp"
#include "normbundle/curve.hpp"
#include "normbundle/enumerate.hpp"
#include "normbundle/errors.hpp"
#include "normbundle/exact_matrix.hpp"
#include "normbundle/linalg_oracle.hpp"
#include "normbundle/operators.hpp"
#include "normbundle/splitting.hpp"
#include "normbundle/window_oracle.hpp"
