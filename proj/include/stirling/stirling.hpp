#pragma once

// Convenience umbrella header.

#include "stirling/bell.hpp"
#include "stirling/eulerian.hpp"
#include "stirling/fubini.hpp"
#include "stirling/polynomial.hpp"
#include "stirling/rational.hpp"
#include "stirling/render.hpp"
#include "stirling/series.hpp"
#include "stirling/stirling_matrix.hpp"
#include "stirling/transform.hpp"
#include "stirling/verify.hpp"
