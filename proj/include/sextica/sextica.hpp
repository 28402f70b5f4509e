#pragma once

// Umbrella header.

#include "cubic.hpp"
#include "diagnostics.hpp"
#include "driver.hpp"
#include "oracle.hpp"
#include "parse.hpp"
#include "polynomial.hpp"
#include "quartic.hpp"
#include "radicals.hpp"
#include "sextic.hpp"
#include "verify.hpp"
