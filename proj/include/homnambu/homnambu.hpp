#pragma once

// Umbrella header for the homnambu library.

#include "homnambu/algebra.hpp"
#include "homnambu/catalog.hpp"
#include "homnambu/cochain.hpp"
#include "homnambu/dersolve.hpp"
#include "homnambu/induce.hpp"
#include "homnambu/io.hpp"
#include "homnambu/matrix.hpp"
#include "homnambu/nuplet.hpp"
#include "homnambu/report.hpp"
#include "homnambu/scalar.hpp"
