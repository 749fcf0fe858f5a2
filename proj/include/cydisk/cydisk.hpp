#pragma once

// Umbrella header: everything except the CLI layer.

#include "cydisk/disk.hpp"
#include "cydisk/geometry.hpp"
#include "cydisk/half_series.hpp"
#include "cydisk/jet.hpp"
#include "cydisk/localization.hpp"
#include "cydisk/mirror.hpp"
#include "cydisk/rational.hpp"
#include "cydisk/series.hpp"
