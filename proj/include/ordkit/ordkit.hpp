#pragma once

// Exact-arithmetic toolkit for countable Archimedean ordered groups and their
// circular-order and ODAG relatives: symbolic reals over declared-independent
// symbols, finitely generated subgroups of R, Teh-type orders and Dedekind-cut
// realizations, isomorphism/embeddability deciders, colored-linear-order
// reductions, the Zeleva extension, and finite-support Hahn series.

#include "ordkit/archgroup.hpp"
#include "ordkit/circular.hpp"
#include "ordkit/classify.hpp"
#include "ordkit/clo.hpp"
#include "ordkit/expr.hpp"
#include "ordkit/hahn.hpp"
#include "ordkit/odag.hpp"
#include "ordkit/reductions.hpp"
#include "ordkit/subgroup.hpp"
#include "ordkit/symreal.hpp"
