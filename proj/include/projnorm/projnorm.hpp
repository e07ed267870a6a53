#pragma once

#include "projnorm/eigen.hpp"
#include "projnorm/matrix.hpp"
#include "projnorm/matrix_poly.hpp"
#include "projnorm/pair_io.hpp"
#include "projnorm/polynomial.hpp"
#include "projnorm/projections.hpp"
#include "projnorm/rng.hpp"
#include "projnorm/trials.hpp"
#include "projnorm/verify.hpp"
