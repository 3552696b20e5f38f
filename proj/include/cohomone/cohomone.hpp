#pragma once

#include "cohomone/error.hpp"
#include "cohomone/numeric.hpp"
#include "cohomone/lie_data.hpp"
#include "cohomone/series.hpp"
#include "cohomone/diagram.hpp"
#include "cohomone/diagram_io.hpp"
#include "cohomone/invariants.hpp"
#include "cohomone/oddcase.hpp"
#include "cohomone/polyring/polynomial.hpp"
#include "cohomone/polyring/parser.hpp"
#include "cohomone/polyring/groebner.hpp"
#include "cohomone/polyring/hilbert.hpp"
#include "cohomone/polyring/linalg.hpp"
#include "cohomone/polyring/univariate.hpp"
#include "cohomone/polyring/square_zero.hpp"
#include "cohomone/polyring/torus_family.hpp"
#include "cohomone/polyring/presentation_io.hpp"
#include "cohomone/gkm.hpp"
#include "cohomone/catalog.hpp"
#include "cohomone/report.hpp"
