#pragma once

// Everything except yosp/io/json_io.hpp, which needs json.hpp on the include path.

#include "yosp/errors.hpp"
#include "yosp/exact/polynomial.hpp"
#include "yosp/exact/rational.hpp"
#include "yosp/exact/rational_function.hpp"
#include "yosp/exact/roots.hpp"
#include "yosp/exact/shift_quotient.hpp"
#include "yosp/hw/certify.hpp"
#include "yosp/hw/criteria.hpp"
#include "yosp/hw/highest_weight.hpp"
#include "yosp/hw/linear.hpp"
#include "yosp/hw/reflections.hpp"
#include "yosp/report.hpp"
#include "yosp/sampling.hpp"
#include "yosp/series/factored_series.hpp"
#include "yosp/series/ring_traits.hpp"
#include "yosp/series/truncated_series.hpp"
#include "yosp/superlinalg/context.hpp"
#include "yosp/superlinalg/graded.hpp"
#include "yosp/superlinalg/r_matrix.hpp"
#include "yosp/superlinalg/sparse_matrix.hpp"
#include "yosp/superlinalg/super_matrix.hpp"
#include "yosp/yangian/central.hpp"
#include "yosp/yangian/gauss.hpp"
#include "yosp/yangian/gl12.hpp"
#include "yosp/yangian/highest_vector.hpp"
#include "yosp/yangian/representation.hpp"
#include "yosp/yangian/rtt.hpp"
