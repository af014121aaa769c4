#pragma once

// Umbrella header: exact rational linear algebra, Lie (super)algebras as
// structure-constant tables, delta-(super)derivation solvers, transposed
// Poisson structures, graded algebras with the shift-ansatz solver, the
// builtin algebra catalogue, and text formats.

#include "lieder/rational.hpp"
#include "lieder/errors.hpp"
#include "lieder/linalg.hpp"
#include "lieder/algebra.hpp"
#include "lieder/structure.hpp"
#include "lieder/parity.hpp"
#include "lieder/derivations.hpp"
#include "lieder/tpa.hpp"
#include "lieder/graded.hpp"
#include "lieder/zoo.hpp"
#include "lieder/format.hpp"
#include "lieder/report.hpp"
