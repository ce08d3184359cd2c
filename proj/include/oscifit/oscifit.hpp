#pragma once

// Umbrella header: pulls in the whole library.

#include "oscifit/coefficients.hpp"
#include "oscifit/csv.hpp"
#include "oscifit/errors.hpp"
#include "oscifit/integrator.hpp"
#include "oscifit/linalg.hpp"
#include "oscifit/phase_lag.hpp"
#include "oscifit/problems.hpp"
#include "oscifit/rational.hpp"
#include "oscifit/reference_series.hpp"
#include "oscifit/scheme.hpp"
#include "oscifit/scheme_series.hpp"
#include "oscifit/series.hpp"
#include "oscifit/verify.hpp"
#include "oscifit/version.hpp"
