#pragma once

// Umbrella header for the whole library.

#include "gysin/errors.hpp"
#include "gysin/expr.hpp"
#include "gysin/polynomial.hpp"
#include "gysin/pushforward.hpp"
#include "gysin/rational.hpp"
#include "gysin/rational_function.hpp"
#include "gysin/roots.hpp"
#include "gysin/schubert.hpp"
#include "gysin/verify.hpp"
#include "gysin/weyl.hpp"
