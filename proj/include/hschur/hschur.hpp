#pragma once

#include "hschur/errors.hpp"
#include "hschur/partition.hpp"
#include "hschur/polynomial.hpp"
#include "hschur/sym_matrix.hpp"
#include "hschur/jt_box.hpp"
#include "hschur/plucker.hpp"
#include "hschur/hirota.hpp"
#include "hschur/lr.hpp"
#include "hschur/report.hpp"
#include "hschur/sweep.hpp"
