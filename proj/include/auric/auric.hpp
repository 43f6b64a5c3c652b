#ifndef AURIC_AURIC_HPP
#define AURIC_AURIC_HPP

#include "auric/arith_functions.hpp"
#include "auric/constants.hpp"
#include "auric/decimal.hpp"
#include "auric/elementary.hpp"
#include "auric/errors.hpp"
#include "auric/golden_exact.hpp"
#include "auric/identities.hpp"
#include "auric/point.hpp"
#include "auric/rational_series.hpp"
#include "auric/report_io.hpp"
#include "auric/series.hpp"

#endif // AURIC_AURIC_HPP
