#pragma once

#include "proxima/contraction.hpp"
#include "proxima/errors.hpp"
#include "proxima/instance.hpp"
#include "proxima/metric.hpp"
#include "proxima/oracle.hpp"
#include "proxima/pair_geometry.hpp"
