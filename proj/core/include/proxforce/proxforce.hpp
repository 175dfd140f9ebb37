#pragma once

#include "proxforce/errors.hpp"
#include "proxforce/force_result.hpp"
#include "proxforce/geometry.hpp"
#include "proxforce/gravity.hpp"
#include "proxforce/oracle.hpp"
#include "proxforce/pfa.hpp"
#include "proxforce/quadrature.hpp"
#include "proxforce/rng.hpp"
#include "proxforce/yukawa.hpp"
