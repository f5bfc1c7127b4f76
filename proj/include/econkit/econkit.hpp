#pragma once

// Umbrella header for the econkit quarterly time-series econometrics
// toolkit: differencing and lag transforms, CSV ingest, OLS with classical
// or Newey-West (HAC) covariance, augmented Dickey-Fuller unit-root tests,
// Shapiro-Wilk residual diagnostics, and report rendering.

#include "econkit/distributions.hpp"
#include "econkit/errors.hpp"
#include "econkit/hac.hpp"
#include "econkit/ingest.hpp"
#include "econkit/linreg.hpp"
#include "econkit/normality.hpp"
#include "econkit/report.hpp"
#include "econkit/timeseries.hpp"
#include "econkit/unitroot.hpp"
