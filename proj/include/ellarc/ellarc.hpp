#pragma once

#include "ellarc/cfrac.hpp"
#include "ellarc/derivation.hpp"
#include "ellarc/error.hpp"
#include "ellarc/goldens.hpp"
#include "ellarc/numeric.hpp"
#include "ellarc/power_series.hpp"
#include "ellarc/rational.hpp"
