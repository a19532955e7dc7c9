#pragma once

#include "penta/analytic.hpp"
#include "penta/canonical.hpp"
#include "penta/contour.hpp"
#include "penta/cosexp.hpp"
#include "penta/elementary.hpp"
#include "penta/error.hpp"
#include "penta/functions.hpp"
#include "penta/geometry.hpp"
#include "penta/inverse.hpp"
#include "penta/io.hpp"
#include "penta/polyfactor.hpp"
#include "penta/ring.hpp"
#include "penta/selftest.hpp"
