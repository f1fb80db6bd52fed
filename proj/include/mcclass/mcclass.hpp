#pragma once

#include "axioms.hpp"
#include "cli.hpp"
#include "combi.hpp"
#include "division.hpp"
#include "errors.hpp"
#include "expand.hpp"
#include "expr.hpp"
#include "interp.hpp"
#include "json_io.hpp"
#include "laurent_poly.hpp"
#include "linear_solve.hpp"
#include "lp.hpp"
#include "newton.hpp"
#include "parallel.hpp"
#include "rational_expr.hpp"
#include "svg.hpp"
#include "torus_chart.hpp"
#include "weightfn.hpp"
#include "ypoly.hpp"
