#pragma once

// Convenience umbrella for the whole library.

#include "kudef/assignment.hpp"
#include "kudef/characters.hpp"
#include "kudef/complex_matrix.hpp"
#include "kudef/errors.hpp"
#include "kudef/expr_parser.hpp"
#include "kudef/fin_ab_group.hpp"
#include "kudef/graded_group.hpp"
#include "kudef/group_expr.hpp"
#include "kudef/invariants.hpp"
#include "kudef/jacobi.hpp"
#include "kudef/json_io.hpp"
#include "kudef/ku_module.hpp"
#include "kudef/reports.hpp"
#include "kudef/simultaneous_diag.hpp"
#include "kudef/torus_moduli.hpp"
