#ifndef STIRLING_STIRLING_HPP
#define STIRLING_STIRLING_HPP

#include "stirling/analytic.hpp"
#include "stirling/asymptotics.hpp"
#include "stirling/big_real.hpp"
#include "stirling/exact.hpp"
#include "stirling/exact_numbers.hpp"
#include "stirling/polynomial.hpp"
#include "stirling/series.hpp"
#include "stirling/unimodality.hpp"
#include "stirling/verify.hpp"

#endif  // STIRLING_STIRLING_HPP
