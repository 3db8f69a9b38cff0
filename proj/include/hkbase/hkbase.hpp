#pragma once

#include "hkbase/base_divisor.hpp"
#include "hkbase/cones.hpp"
#include "hkbase/deformation.hpp"
#include "hkbase/errors.hpp"
#include "hkbase/integer.hpp"
#include "hkbase/io.hpp"
#include "hkbase/lattice.hpp"
