#ifndef SUBDEPTH_SUBDEPTH_HPP
#define SUBDEPTH_SUBDEPTH_HPP

#include "subdepth/depth.hpp"
#include "subdepth/error.hpp"
#include "subdepth/exact_matrix.hpp"
#include "subdepth/graph.hpp"
#include "subdepth/inclusion_matrix.hpp"
#include "subdepth/matrix_io.hpp"
#include "subdepth/polynomial.hpp"
#include "subdepth/report.hpp"
#include "subdepth/symmetric_group.hpp"

#endif  // SUBDEPTH_SUBDEPTH_HPP
