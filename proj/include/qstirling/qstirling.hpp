#ifndef QSTIRLING_QSTIRLING_HPP
#define QSTIRLING_QSTIRLING_HPP

#include "qstirling/analytic.hpp"
#include "qstirling/bigint.hpp"
#include "qstirling/errors.hpp"
#include "qstirling/fermionic.hpp"
#include "qstirling/laurent.hpp"
#include "qstirling/power_series.hpp"
#include "qstirling/qcore.hpp"
#include "qstirling/rational.hpp"
#include "qstirling/report.hpp"
#include "qstirling/stirling_q.hpp"

#endif // QSTIRLING_QSTIRLING_HPP
