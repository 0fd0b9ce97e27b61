#pragma once

#include "fmx/biseries.hpp"
#include "fmx/error.hpp"
#include "fmx/jacobi.hpp"
#include "fmx/meixner.hpp"
#include "fmx/meixner_numeric.hpp"
#include "fmx/poly.hpp"
#include "fmx/rational.hpp"
#include "fmx/renorm.hpp"
#include "fmx/series.hpp"
#include "fmx/transforms.hpp"
#include "fmx/verdict.hpp"
