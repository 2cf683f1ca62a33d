#pragma once

#include "algebra_core.hpp"
#include "central_poly.hpp"
#include "charpoly.hpp"
#include "errors.hpp"
#include "freealg.hpp"
#include "grassmann.hpp"
#include "io.hpp"
#include "matrix.hpp"
#include "permutation.hpp"
#include "random.hpp"
#include "symdet.hpp"
#include "verify.hpp"
