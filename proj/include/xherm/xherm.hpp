#pragma once

#include "errors.hpp"
#include "partitions.hpp"
#include "rational_poly.hpp"
#include "special_functions.hpp"
#include "hermite.hpp"
#include "exceptional.hpp"
#include "series.hpp"
#include "quadrature.hpp"
#include "differentiation.hpp"
#include "weierstrass.hpp"
#include "verify.hpp"
#include "io.hpp"
