#pragma once

#include "foliage/error.hpp"
#include "foliage/rational.hpp"
#include "foliage/polynomial.hpp"
#include "foliage/unipoly.hpp"
#include "foliage/bivariate.hpp"
#include "foliage/foliation.hpp"
#include "foliage/blowup.hpp"
#include "foliage/resolution.hpp"
#include "foliage/divisors.hpp"
#include "foliage/valuation.hpp"
#include "foliage/projective.hpp"
#include "foliage/parser.hpp"
